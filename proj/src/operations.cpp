#include "cbgon/operations.hpp"

#include "cbgon/conditions.hpp"
#include "cbgon/error.hpp"
#include "cbgon/generators.hpp"
#include "cbgon/scan.hpp"
#include "cbgon/verify.hpp"

#include <algorithm>
#include <sstream>

namespace cbgon {

using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kPicardCaveat =
    "the Picard-group hypothesis on the auxiliary surface is not computationally checkable and was not verified";
constexpr const char* kRationalOnly = "only F_p-rational points are enumerated; smoothness is checked at those points";

Json field_json(Field f) { return f.is_rational() ? Json("QQ") : Json(f.characteristic()); }

Json points_json(const std::vector<ProjectivePoint>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(point_to_json(p));
  return out;
}

Json degrees_json(const std::vector<unsigned>& d) {
  Json out = Json::array();
  for (unsigned a : d) out.push_back(a);
  return out;
}

EnumerationOptions enumeration(const RunOptions& opts) { return {opts.budget, opts.workers}; }

RationalCurve curve_of(const Instance& inst, const RunOptions& opts) {
  return RationalCurve::enumerate(inst.complete_intersection(), enumeration(opts));
}

// Standing hypotheses of the gonality results, for curve-based reports.
void curve_caveats(const CompleteIntersection& ci, Report& r) {
  if (ci.codimension() + 1 == ci.ambient_dim() && ci.type().front() < 2) {
    r.caveats.push_back("hypothesis violated: a_1 >= 2 fails (linear factor)");
  } else if (ci.codimension() + 1 == ci.ambient_dim()) {
    for (const auto& v : gonality_report(ci.type()).hypothesis_violations) {
      r.caveats.push_back("hypothesis violated: " + v);
    }
  }
  r.caveats.push_back(kPicardCaveat);
}

void flatten(const Json& value, const std::string& prefix, std::ostringstream& out) {
  if (value.is_object()) {
    if (value.empty()) out << prefix << ": {}\n";
    for (const auto& [k, v] : value.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (value.is_array()) {
    const bool scalar_items =
        std::all_of(value.begin(), value.end(), [](const Json& v) { return !v.is_structured(); });
    const bool short_vectors = std::all_of(value.begin(), value.end(), [](const Json& v) {
      return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return !x.is_structured(); });
    });
    if (scalar_items || (short_vectors && !value.empty())) {
      out << prefix << ": " << value.dump() << "\n";
      return;
    }
    for (std::size_t i = 0; i < value.size(); ++i) flatten(value[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

}  // namespace

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Report: return "REPORT";
  }
  return "REPORT";
}

Json Report::to_json() const {
  Json out;
  out["format_version"] = kFormatVersion;
  out["operation"] = operation;
  out["inputs"] = inputs;
  out["seed"] = seed ? Json(*seed) : Json(nullptr);
  out["verdict"] = verdict_name(verdict);
  out["data"] = data;
  out["caveats"] = caveats;
  return out;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "operation: " << operation << "\n";
  out << "verdict: " << verdict_name(verdict) << "\n";
  out << "seed: " << (seed ? std::to_string(*seed) : "none") << "\n";
  flatten(inputs, "inputs", out);
  flatten(data, "", out);
  for (const auto& c : caveats) out << "caveat: " << c << "\n";
  return out.str();
}

Report indep_check_report(const Instance& inst, long long degree) {
  Report r;
  r.operation = "indep-check";
  r.inputs = instance_to_json(inst);
  r.inputs["degree"] = degree;
  r.seed = inst.seed;
  const auto c = imposes_independent_conditions(inst.subscheme(), degree);
  r.data["degree"] = c.degree;
  r.data["subscheme_degree"] = c.subscheme_degree;
  r.data["rank"] = c.rank;
  r.data["failure_index"] = c.failure_index;
  r.data["independent"] = c.independent;
  return r;
}

Report cb_check_report(const Instance& inst, long long degree, const RunOptions& opts) {
  Report r;
  r.operation = "cb-check";
  r.inputs = instance_to_json(inst);
  r.inputs["degree"] = degree;
  r.seed = inst.seed;
  const auto z = inst.subscheme();
  const bool cb = cayley_bacharach(z, degree, opts.workers);
  const auto c = imposes_independent_conditions(z, degree);
  r.data["cb"] = cb;
  r.data["independent"] = c.independent;
  r.data["failure_index"] = c.failure_index;
  return r;
}

Report cb_canonical_report(const Instance& inst, const RunOptions& opts) {
  Report r;
  r.operation = "cb-canonical";
  r.inputs = instance_to_json(inst);
  r.seed = inst.seed;
  const auto ci = inst.complete_intersection();
  const bool cb = cb_with_respect_to_canonical(ci, inst.subscheme(), opts.workers);
  r.data["canonical_twist"] = ci.canonical_twist();
  r.data["cb"] = cb;
  r.caveats.push_back("curve sections are represented by ambient forms (complete intersections are projectively normal)");
  curve_caveats(ci, r);
  return r;
}

Report project_report(const Instance& inst, const RunOptions& opts) {
  Report r;
  r.operation = "project";
  r.inputs = instance_to_json(inst);
  r.seed = inst.seed;
  const auto curve = curve_of(inst, opts);
  const auto center = inst.center_subspace();
  const auto meet = intersect_center(curve, center);
  const unsigned long long degree = curve.curve().degree() - meet.length;
  const std::size_t n = curve.ambient_dim();
  const PencilMap pencil(center);
  const auto fibers = fibers_over_rational_points(curve, pencil);
  const long long twist = curve.curve().canonical_twist();

  std::size_t big = 0, spanning = 0, complete = 0, cb_passed = 0;
  std::vector<FiniteSubscheme> schemes;
  for (const auto& f : fibers) {
    schemes.push_back(f.points);
    if (f.points.size() >= n) {
      ++big;
      if (fiber_spans_hyperplane(n, f.points)) ++spanning;
    }
    if (f.points.size() == degree && degree > 0) {
      ++complete;
      if (twist >= 0 && cb_with_respect_to_canonical(curve.curve(), f.points, opts.workers)) ++cb_passed;
    }
  }
  const auto distinct = distinct_fiber_spans(n, schemes);

  r.data["curve_degree"] = curve.curve().degree();
  r.data["center"] = center.to_string();
  r.data["rational_points"] = curve.points().size();
  r.data["center_points"] = points_json(meet.rational_points);
  r.data["center_length"] = meet.length;
  r.data["center_length_exact"] = meet.length_exact;
  r.data["projection_degree"] = degree;
  r.data["fibers_with_n_points"] = big;
  r.data["fibers_spanning_hyperplane"] = spanning;
  r.data["one_fiber_per_hyperplane"] = distinct.holds;
  r.data["one_fiber_per_hyperplane_vacuous"] = distinct.vacuous;
  r.data["complete_rational_fibers"] = complete;
  if (twist >= 0) {
    r.data["complete_fibers_cb_canonical"] = cb_passed;
  } else {
    r.data["complete_fibers_cb_canonical"] = nullptr;
  }
  if (!meet.length_exact) r.caveats.push_back("center intersection length counts F_p-points only");
  r.caveats.push_back(kRationalOnly);
  r.caveats.push_back("only fibers made of projection_degree distinct rational points are complete reduced fibers");
  curve_caveats(curve.curve(), r);
  return r;
}

Report fibers_report(const Instance& inst, const RunOptions& opts) {
  Report r;
  r.operation = "fibers";
  r.inputs = instance_to_json(inst);
  r.seed = inst.seed;
  const auto curve = curve_of(inst, opts);
  const auto center = inst.center_subspace();
  const unsigned long long degree = projection_degree(curve, center);
  const std::size_t n = curve.ambient_dim();
  const long long twist = curve.curve().canonical_twist();
  Json list = Json::array();
  for (const auto& f : fibers_over_rational_points(curve, PencilMap(center))) {
    Json item;
    item["over"] = point_to_json(f.over);
    item["size"] = f.points.size();
    item["points"] = points_json(f.points.supports());
    if (!f.points.empty()) {
      const auto pts = f.points.supports();
      item["span_dim"] = span(pts).proj_dim();
      item["spans_hyperplane"] = fiber_spans_hyperplane(n, f.points);
    }
    const bool complete = f.points.size() == degree && degree > 0;
    item["complete"] = complete;
    if (complete && twist >= 0) item["cb_canonical"] = cb_with_respect_to_canonical(curve.curve(), f.points, opts.workers);
    list.push_back(item);
  }
  r.data["projection_degree"] = degree;
  r.data["fibers"] = list;
  r.caveats.push_back(kRationalOnly);
  curve_caveats(curve.curve(), r);
  return r;
}

Report secant_census_report(const Instance& inst, std::size_t k, const RunOptions& opts) {
  Report r;
  r.operation = "secant-census";
  r.inputs = instance_to_json(inst);
  r.inputs["k"] = k;
  r.seed = inst.seed;
  const auto curve = curve_of(inst, opts);
  const auto census = secant_census(curve, k, {opts.budget, opts.workers});
  Json planes = Json::array();
  for (const auto& s : census) {
    Json item;
    item["plane"] = s.plane.to_string();
    item["secancy"] = s.secancy;
    planes.push_back(item);
  }
  r.data["rational_points"] = curve.points().size();
  r.data["planes"] = planes;
  r.data["count"] = census.size();
  if (!inst.points.empty()) {
    const auto pts = inst.subscheme().supports();
    const auto planted = span(pts);
    const bool found = std::any_of(census.begin(), census.end(), [&](const SecantPlane& s) { return s.plane == planted; });
    r.data["instance_plane"] = planted.to_string();
    r.data["instance_plane_found"] = found;
  }
  r.caveats.push_back("rational census: only planes spanned by F_p-points of the curve are found");
  curve_caveats(curve.curve(), r);
  return r;
}

Report gamma_report(const Instance& inst, const RunOptions& opts) {
  Report r;
  r.operation = "gamma";
  r.inputs = instance_to_json(inst);
  r.seed = inst.seed;
  const auto curve = curve_of(inst, opts);
  const std::size_t gamma = gamma_census(curve, {opts.budget, opts.workers});
  r.data["rational_points"] = curve.points().size();
  r.data["gamma_rational"] = gamma;
  r.data["curve_degree"] = curve.curve().degree();
  r.data["projection_gonality_bound"] = static_cast<long long>(curve.curve().degree()) - static_cast<long long>(gamma);
  r.caveats.push_back("rational census: gamma over F_p is a lower bound for the geometric gamma");
  curve_caveats(curve.curve(), r);
  return r;
}

Report gonality_summary_report(const std::vector<unsigned>& degrees, std::optional<long long> gamma,
                               std::optional<long long> deg_s, std::optional<long long> alpha) {
  Report r;
  r.operation = "gonality";
  r.inputs["type"] = degrees_json(degrees);
  r.inputs["gamma"] = gamma ? Json(*gamma) : Json(nullptr);
  r.inputs["deg_s"] = deg_s ? Json(*deg_s) : Json(nullptr);
  r.inputs["alpha"] = alpha ? Json(*alpha) : Json(nullptr);
  const auto g = gonality_report(degrees, gamma, deg_s, alpha);
  r.data["n"] = g.n;
  r.data["deg_c"] = g.deg_c;
  r.data["deg_s"] = g.deg_s;
  r.data["alpha"] = g.alpha;
  r.data["lazarsfeld"] = g.lazarsfeld_lower;
  r.data["corb"] = g.corb_value;
  r.data["cord_lower"] = g.cord_lower;
  r.data["cord_upper"] = g.cord_upper;
  r.data["key_lemma_lower"] = g.key_lemma_lower;
  r.data["noether"] = g.noether_value ? Json(*g.noether_value) : Json(nullptr);
  r.data["gamma"] = g.gamma ? Json(*g.gamma) : Json(nullptr);
  r.data["projection_formula"] = g.projection_formula_value ? Json(*g.projection_formula_value) : Json(nullptr);
  r.data["hypothesis_violations"] = g.hypothesis_violations;
  for (const auto& v : g.hypothesis_violations) r.caveats.push_back("hypothesis violated: " + v);
  r.caveats.push_back(kPicardCaveat);
  return r;
}

Report dim_audit_report(const std::vector<unsigned>& degrees) {
  Report r;
  r.operation = "dim-audit";
  r.inputs["type"] = degrees_json(degrees);
  const auto a = dimension_audit(degrees);
  r.data["n"] = a.n;
  r.data["sections"] = a.sections;
  r.data["fiber_dim"] = a.fiber_dim;
  r.data["dim_Y"] = a.dim_y;
  r.data["dim_Psi"] = a.dim_psi;
  r.data["dim_Y_prime"] = a.dim_y_prime;
  r.data["dim_Psi_minus_dim_Y"] = a.dim_psi - a.dim_y;
  r.data["dominance"] = a.y_cannot_dominate ? "cannot dominate" : "may dominate";
  r.data["y_prime_matches_psi"] = a.y_prime_matches_psi;
  r.data["sections_exceed_2n_minus_1"] = a.sections_exceed_2n_minus_1;
  r.data["sections_admit_planting"] = a.sections_admit_planting;
  r.data["hypothesis_violations"] = a.hypothesis_violations;
  for (const auto& v : a.hypothesis_violations) r.caveats.push_back("hypothesis violated: " + v);
  return r;
}

Report cbconj_scan_report(Field field, const std::vector<unsigned>& grid, unsigned e, const RunOptions& opts,
                          const Instance* points) {
  Report r;
  r.operation = "cbconj-scan";
  r.inputs["grid"] = degrees_json(grid);
  r.inputs["e"] = e;
  r.inputs["field"] = field_json(field);
  std::vector<ProjectivePoint> pts;
  if (points != nullptr) {
    r.inputs["instance"] = instance_to_json(*points);
    r.seed = points->seed;
    pts = points->subscheme().supports();
    if (!points->forms.empty()) {
      const auto ci = points->complete_intersection();
      for (const auto& p : pts) {
        if (!ci.contains(p)) throw Error(ErrorCode::PointNotOnScheme, "point " + p.to_string() + " is not on the grid");
      }
    }
  } else {
    const std::uint64_t seed = opts.seed.value_or(0);
    r.seed = seed;
    auto g = random_grid_ci(field, grid, seed);
    pts = std::move(g.points);
  }
  const std::size_t n = grid.size();
  const FiniteSubscheme z = FiniteSubscheme::reduced(field, n, pts);
  ScanOptions so;
  so.workers = opts.workers;
  so.node_budget = opts.budget;
  const auto s = cbconj_scan(z, grid, e, so);
  r.data["points"] = z.size();
  r.data["k"] = s.k;
  r.data["m"] = s.m;
  r.data["bound"] = s.bound;
  r.data["min_failing_degree"] = s.min_failing_degree ? Json(*s.min_failing_degree) : Json(nullptr);
  Json witness = Json::array();
  for (std::size_t i : s.witness) witness.push_back(point_to_json(pts[i]));
  r.data["witness"] = witness;
  r.data["subsets_visited"] = s.subsets_visited;
  r.verdict = s.pass ? Verdict::Pass : Verdict::Fail;
  r.caveats.push_back("reduced-subscheme verification: non-reduced subschemes are not searched");
  r.caveats.push_back(kPicardCaveat);
  return r;
}

Report verify_suite_report(const RunOptions& opts) {
  Report r;
  r.operation = "verify-suite";
  SuiteOptions so;
  so.workers = opts.workers;
  so.seed = opts.seed.value_or(0);
  r.seed = so.seed;
  const auto results = run_acceptance_suite(so);
  Json list = Json::array();
  bool all = true;
  for (const auto& c : results) {
    Json item;
    item["id"] = c.id;
    item["title"] = c.title;
    item["passed"] = c.passed;
    item["detail"] = c.detail;
    list.push_back(item);
    all = all && c.passed;
  }
  r.data["criteria"] = list;
  r.verdict = all ? Verdict::Pass : Verdict::Fail;
  r.caveats.push_back(kPicardCaveat);
  return r;
}

Instance random_curve_instance(Field field, const std::vector<unsigned>& degrees, std::uint64_t seed,
                               bool with_center, const RunOptions& opts) {
  auto sample = random_smooth_curve(field, degrees, seed, enumeration(opts), degrees.size() + 1);
  Instance inst;
  inst.field = field;
  inst.ambient_dim = sample.curve.ambient_dim();
  inst.forms = sample.curve.curve().forms();
  inst.seed = seed;
  if (with_center) {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const auto center = random_chord_center(sample.curve, rng);
    for (const auto& p : sample.curve.points()) {
      if (center.contains(p)) inst.center.push_back(p);
    }
    // A center may contain more curve points than needed to span it.
    while (inst.center.size() > inst.ambient_dim - 1) inst.center.pop_back();
  }
  return inst;
}

Instance planted_curve_instance(Field field, const std::vector<unsigned>& degrees, std::uint64_t seed,
                                const RunOptions& opts) {
  auto planted = planted_secant_curve(field, degrees, seed, enumeration(opts));
  Instance inst;
  inst.field = field;
  inst.ambient_dim = planted.curve.ambient_dim();
  inst.forms = planted.curve.curve().forms();
  for (const auto& p : planted.planted) inst.points.emplace_back(p);
  inst.seed = seed;
  return inst;
}

}  // namespace cbgon
