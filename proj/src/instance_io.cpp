#include "cbgon/instance_io.hpp"

#include "cbgon/error.hpp"

#include <fstream>
#include <sstream>

namespace cbgon {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorCode::InstanceFormat, why); }

Scalar scalar_from_json(const json& v, Field field) {
  if (v.is_number_integer()) return Scalar(field, v.get<long long>());
  if (v.is_string()) return Scalar::parse(field, v.get<std::string>());
  bad("coordinates must be integers or \"a/b\" strings");
}

Vector vector_from_json(const json& v, Field field, std::size_t n, const char* what) {
  if (!v.is_array() || v.size() != n + 1) {
    bad(std::string(what) + " must be arrays of " + std::to_string(n + 1) + " coordinates");
  }
  Vector out;
  for (const auto& x : v) out.push_back(scalar_from_json(x, field));
  return out;
}

Field field_from_json(const json& doc, std::optional<Field> override_field) {
  std::optional<Field> declared;
  if (doc.contains("prime") && doc.contains("rational")) bad("declare either \"prime\" or \"rational\", not both");
  if (doc.contains("prime")) {
    if (!doc["prime"].is_number_unsigned()) bad("\"prime\" must be a positive integer");
    declared = Field::prime(doc["prime"].get<std::uint64_t>());
  } else if (doc.contains("rational")) {
    if (doc["rational"] != true) bad("\"rational\" must be true when present");
    declared = Field::rational();
  }
  if (declared && override_field && *declared != *override_field) {
    bad("instance declares " + declared->name() + " but " + override_field->name() + " was requested");
  }
  if (declared) return *declared;
  if (override_field) return *override_field;
  bad("instance declares no field; pass a prime or request the rationals");
}

}  // namespace

FiniteSubscheme Instance::subscheme() const { return FiniteSubscheme(field, ambient_dim, points); }

CompleteIntersection Instance::complete_intersection() const {
  if (forms.empty()) throw Error(ErrorCode::InstanceFormat, "instance has no forms");
  return CompleteIntersection(field, ambient_dim, forms);
}

LinearSubspace Instance::center_subspace() const {
  if (center.empty()) throw Error(ErrorCode::InstanceFormat, "instance has no \"center\" points");
  return span(center);
}

Instance parse_instance(const std::string& text, std::optional<Field> field_override) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("instance must be a JSON object");
  if (doc.contains("format_version") && doc["format_version"] != kFormatVersion) {
    bad("unsupported format_version " + doc["format_version"].dump());
  }
  Instance inst;
  inst.field = field_from_json(doc, field_override);
  if (!doc.contains("ambient_dim") || !doc["ambient_dim"].is_number_unsigned() || doc["ambient_dim"] == 0) {
    bad("\"ambient_dim\" must be a positive integer");
  }
  inst.ambient_dim = doc["ambient_dim"].get<std::size_t>();
  const std::size_t n = inst.ambient_dim;

  if (doc.contains("forms")) {
    if (!doc["forms"].is_array()) bad("\"forms\" must be an array of strings");
    for (const auto& f : doc["forms"]) {
      if (!f.is_string()) bad("\"forms\" must be an array of strings");
      inst.forms.push_back(parse_form(f.get<std::string>(), n, inst.field));
    }
  }

  std::vector<std::optional<Vector>> tangents;
  if (doc.contains("tangents")) {
    if (!doc["tangents"].is_array()) bad("\"tangents\" must be an array");
    for (const auto& t : doc["tangents"]) {
      if (t.is_null()) {
        tangents.emplace_back();
      } else {
        tangents.emplace_back(vector_from_json(t, inst.field, n, "tangents"));
      }
    }
  }
  if (doc.contains("points")) {
    if (!doc["points"].is_array()) bad("\"points\" must be an array");
    const auto& pts = doc["points"];
    if (!tangents.empty() && tangents.size() != pts.size()) bad("\"tangents\" must match \"points\" in length");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      ProjectivePoint base(vector_from_json(pts[i], inst.field, n, "points"));
      inst.points.emplace_back(std::move(base), tangents.empty() ? std::nullopt : tangents[i]);
    }
  } else if (!tangents.empty()) {
    bad("\"tangents\" given without \"points\"");
  }
  if (doc.contains("center")) {
    if (!doc["center"].is_array()) bad("\"center\" must be an array of points");
    for (const auto& p : doc["center"]) inst.center.emplace_back(vector_from_json(p, inst.field, n, "center"));
  }
  if (doc.contains("seed") && !doc["seed"].is_null()) {
    if (!doc["seed"].is_number_unsigned()) bad("\"seed\" must be an unsigned integer");
    inst.seed = doc["seed"].get<std::uint64_t>();
  }
  // Surface subscheme errors (repeated points) at load time.
  (void)inst.subscheme();
  return inst;
}

Instance load_instance(const std::string& path, std::optional<Field> field_override) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InstanceFormat, "cannot open instance file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), field_override);
}

namespace {

nlohmann::ordered_json scalar_to_json(const Scalar& c) {
  if (!c.field().is_rational()) return c.residue();
  const mpq_class& q = c.rational();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return c.to_string();
}

nlohmann::ordered_json vector_to_json(const Vector& v) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& c : v) out.push_back(scalar_to_json(c));
  return out;
}

}  // namespace

nlohmann::ordered_json point_to_json(const ProjectivePoint& p) { return vector_to_json(p.coords()); }

nlohmann::ordered_json instance_to_json(const Instance& inst) {
  nlohmann::ordered_json out;
  out["format_version"] = kFormatVersion;
  if (inst.field.is_rational()) {
    out["rational"] = true;
  } else {
    out["prime"] = inst.field.characteristic();
  }
  out["ambient_dim"] = inst.ambient_dim;
  out["forms"] = nlohmann::ordered_json::array();
  for (const auto& f : inst.forms) out["forms"].push_back(f.to_string());
  out["points"] = nlohmann::ordered_json::array();
  out["tangents"] = nlohmann::ordered_json::array();
  bool any_tangent = false;
  for (const auto& p : inst.points) {
    out["points"].push_back(point_to_json(p.base()));
    if (p.tangent()) {
      any_tangent = true;
      out["tangents"].push_back(vector_to_json(*p.tangent()));
    } else {
      out["tangents"].push_back(nullptr);
    }
  }
  if (!any_tangent) out.erase("tangents");
  if (!inst.center.empty()) {
    out["center"] = nlohmann::ordered_json::array();
    for (const auto& p : inst.center) out["center"].push_back(point_to_json(p));
  }
  out["seed"] = inst.seed ? nlohmann::ordered_json(*inst.seed) : nlohmann::ordered_json(nullptr);
  return out;
}

}  // namespace cbgon
