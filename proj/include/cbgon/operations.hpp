#pragma once

#include "cbgon/instance_io.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cbgon {

enum class Verdict { Pass, Fail, Report };

const char* verdict_name(Verdict v) noexcept;

/// Uniform result envelope for every front-end operation.
struct Report {
  std::string operation;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::optional<std::uint64_t> seed;
  Verdict verdict = Verdict::Report;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  std::vector<std::string> caveats;

  nlohmann::ordered_json to_json() const;
  /// Flattened "key: value" lines.
  std::string to_text() const;
};

struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = kDefaultPointBudget;
  unsigned workers = 1;
};

Report indep_check_report(const Instance& inst, long long degree);
Report cb_check_report(const Instance& inst, long long degree, const RunOptions& opts);
Report cb_canonical_report(const Instance& inst, const RunOptions& opts);
Report project_report(const Instance& inst, const RunOptions& opts);
Report fibers_report(const Instance& inst, const RunOptions& opts);
Report secant_census_report(const Instance& inst, std::size_t k, const RunOptions& opts);
Report gamma_report(const Instance& inst, const RunOptions& opts);
Report gonality_summary_report(const std::vector<unsigned>& degrees, std::optional<long long> gamma,
                               std::optional<long long> deg_s, std::optional<long long> alpha);
Report dim_audit_report(const std::vector<unsigned>& degrees);
/// Scans the points of `points` if given, otherwise a seeded random grid.
Report cbconj_scan_report(Field field, const std::vector<unsigned>& grid, unsigned e, const RunOptions& opts,
                          const Instance* points = nullptr);
Report verify_suite_report(const RunOptions& opts);

/// Seeded random curve of the given type; with `with_center` the instance
/// also carries a chord center spanned by n-1 of its rational points.
Instance random_curve_instance(Field field, const std::vector<unsigned>& degrees, std::uint64_t seed,
                               bool with_center, const RunOptions& opts);
/// Seeded curve through a planted (2n-2)-secant (n-2)-plane.
Instance planted_curve_instance(Field field, const std::vector<unsigned>& degrees, std::uint64_t seed,
                                const RunOptions& opts);

}  // namespace cbgon
