// Command-line front end; talks to the toolkit only through cbgon.h.
#include "cbgon/cbgon.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::optional<std::uint32_t> prime;
  bool rational = false;
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = 10'000'000;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::string format = "json";
  std::string out;
  std::string points;
  long long degree = 0;
  std::vector<unsigned> type;
  std::vector<unsigned> grid;
  std::size_t k = 0;
  unsigned e = 0;
  std::optional<long long> gamma, deg_s, alpha;
  bool planted = false;
};

void check(cbgon_status status) {
  if (status != CBGON_OK) {
    throw DomainError(std::string(cbgon_status_name(status)) + ": " + cbgon_last_error());
  }
}

class Instance {
 public:
  Instance() = default;
  Instance(const Instance&) = delete;
  Instance& operator=(const Instance&) = delete;
  ~Instance() { cbgon_instance_free(ptr_); }
  cbgon_instance** out() { return &ptr_; }
  const cbgon_instance* get() const { return ptr_; }

 private:
  cbgon_instance* ptr_ = nullptr;
};

cbgon_options options_of(const Config& c) {
  cbgon_options o;
  cbgon_options_init(&o);
  o.has_seed = c.seed.has_value();
  o.seed = c.seed.value_or(0);
  o.budget = c.budget;
  o.workers = c.workers;
  return o;
}

std::uint32_t field_override(const Config& c) {
  if (c.rational) return CBGON_FIELD_RATIONAL;
  return c.prime.value_or(CBGON_FIELD_NONE);
}

std::uint32_t required_field(const Config& c) {
  const std::uint32_t f = field_override(c);
  if (f == CBGON_FIELD_NONE) throw UsageError("choose a field with --prime P or --rational");
  return f;
}

void load_points(const Config& c, Instance& inst) {
  if (c.points.empty()) throw UsageError("--points PATH is required");
  check(cbgon_instance_load(c.points.c_str(), field_override(c), inst.out()));
}

// Curve operations read --points, or generate a seeded curve of --type.
void curve_instance(const Config& c, Instance& inst, bool with_center) {
  if (!c.points.empty()) {
    load_points(c, inst);
    return;
  }
  if (c.type.empty()) throw UsageError("give --points PATH or --type a1,...,a_{n-1}");
  const cbgon_options o = options_of(c);
  const std::uint64_t seed = c.seed.value_or(0);
  if (c.planted) {
    check(cbgon_instance_planted_curve(required_field(c), c.type.data(), c.type.size(), seed, &o, inst.out()));
  } else {
    check(cbgon_instance_random_curve(required_field(c), c.type.data(), c.type.size(), seed, with_center, &o,
                                      inst.out()));
  }
}

int emit(const Config& c, cbgon_report* report) {
  char* text = nullptr;
  const cbgon_status status =
      c.format == "text" ? cbgon_report_text(report, &text) : cbgon_report_json(report, 2, &text);
  const cbgon_verdict verdict = cbgon_report_verdict(report);
  cbgon_report_free(report);
  check(status);
  std::string body(text);
  cbgon_string_free(text);
  if (c.format == "json") body += "\n";
  if (c.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream file(c.out, std::ios::binary);
    if (!file || !(file << body)) throw DomainError("cannot write " + c.out);
  }
  return verdict == CBGON_FAIL ? kExitFail : 0;
}

int dispatch(const std::string& name, const Config& c) {
  const cbgon_options o = options_of(c);
  cbgon_report* report = nullptr;
  Instance inst;
  if (name == "indep-check") {
    load_points(c, inst);
    check(cbgon_indep_check(inst.get(), c.degree, &report));
  } else if (name == "cb-check") {
    load_points(c, inst);
    check(cbgon_cb_check(inst.get(), c.degree, &o, &report));
  } else if (name == "cb-canonical") {
    load_points(c, inst);
    check(cbgon_cb_canonical(inst.get(), &o, &report));
  } else if (name == "project") {
    curve_instance(c, inst, true);
    check(cbgon_project(inst.get(), &o, &report));
  } else if (name == "fibers") {
    curve_instance(c, inst, true);
    check(cbgon_fibers(inst.get(), &o, &report));
  } else if (name == "secant-census") {
    curve_instance(c, inst, false);
    check(cbgon_secant_census(inst.get(), c.k, &o, &report));
  } else if (name == "gamma") {
    curve_instance(c, inst, false);
    check(cbgon_gamma(inst.get(), &o, &report));
  } else if (name == "gonality") {
    check(cbgon_gonality(c.type.data(), c.type.size(), c.gamma.has_value(), c.gamma.value_or(0),
                         c.deg_s.has_value(), c.deg_s.value_or(0), c.alpha.has_value(), c.alpha.value_or(0),
                         &report));
  } else if (name == "dim-audit") {
    check(cbgon_dim_audit(c.type.data(), c.type.size(), &report));
  } else if (name == "cbconj-scan") {
    const std::uint32_t field = required_field(c);
    if (!c.points.empty()) check(cbgon_instance_load(c.points.c_str(), field, inst.out()));
    check(cbgon_cbconj_scan(field, c.grid.data(), c.grid.size(), c.e, inst.get(), &o, &report));
  } else if (name == "verify-suite") {
    check(cbgon_verify_suite(&o, &report));
  }
  return emit(c, report);
}

void add_common(CLI::App* sub, Config& c) {
  auto* prime = sub->add_option("--prime", c.prime, "work over GF(P)");
  auto* rational = sub->add_flag("--rational", c.rational, "work over QQ");
  prime->excludes(rational);
  sub->add_option("--seed", c.seed, "seed for generated instances");
  sub->add_option("--budget", c.budget, "enumeration and search budget")->check(CLI::PositiveNumber);
  sub->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", c.out, "write the report to PATH");
}

void add_points(CLI::App* sub, Config& c, bool required) {
  auto* opt = sub->add_option("--points,--instance", c.points, "instance file (JSON)");
  if (required) opt->required();
}

void add_type(CLI::App* sub, Config& c, bool required) {
  auto* opt = sub->add_option("--type", c.type, "degrees a1,...,a_{n-1}")->delimiter(',');
  if (required) opt->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley-Bacharach and gonality toolkit"};
  app.require_subcommand(1);
  Config c;

  auto* indep = app.add_subcommand("indep-check", "rank and failure index of Z in degree m");
  auto* cb = app.add_subcommand("cb-check", "Cayley-Bacharach test for a reduced Z in degree m");
  for (auto* s : {indep, cb}) {
    add_common(s, c);
    add_points(s, c, true);
    s->add_option("--degree", c.degree, "degree m")->required();
  }
  auto* canonical = app.add_subcommand("cb-canonical", "Cayley-Bacharach with respect to the canonical series");
  add_common(canonical, c);
  add_points(canonical, c, true);

  for (const char* name : {"project", "fibers"}) {
    auto* s = app.add_subcommand(name, std::string(name) == "project" ? "projection from the instance center"
                                                                         : "rational fibers of the projection");
    add_common(s, c);
    add_points(s, c, false);
    add_type(s, c, false);
  }
  auto* census = app.add_subcommand("secant-census", "rational (n-2)-planes meeting the curve in >= k points");
  auto* gamma = app.add_subcommand("gamma", "largest rational secancy of an (n-2)-plane");
  for (auto* s : {census, gamma}) {
    add_common(s, c);
    add_points(s, c, false);
    add_type(s, c, false);
    s->add_flag("--planted", c.planted, "generate a curve through a planted secant plane");
  }
  census->add_option("--k", c.k, "minimum secancy")->required();

  auto* gonality = app.add_subcommand("gonality", "gonality formulas and bounds for a type");
  add_common(gonality, c);
  add_type(gonality, c, true);
  gonality->add_option("--gamma", c.gamma, "gamma of the curve");
  gonality->add_option("--deg-s", c.deg_s, "degree of the surface S");
  gonality->add_option("--alpha", c.alpha, "alpha");

  auto* audit = app.add_subcommand("dim-audit", "dimension count of the secant-plane incidence");
  add_common(audit, c);
  add_type(audit, c, true);

  auto* scan = app.add_subcommand("cbconj-scan", "minimal failing reduced subsets of a grid complete intersection");
  add_common(scan, c);
  add_points(scan, c, false);
  scan->add_option("--grid", c.grid, "type d1,...,dn")->delimiter(',')->required();
  scan->add_option("--e", c.e, "e in [0, d2 - 1]")->required();

  auto* suite = app.add_subcommand("verify-suite", "run the acceptance battery");
  add_common(suite, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  try {
    return dispatch(app.get_subcommands().front()->get_name(), c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
