#pragma once

#include "cbgon/geometry.hpp"
#include "cbgon/schemes.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cbgon {

inline constexpr int kFormatVersion = 1;

/// Instance file contents:
///   { "format_version": 1, "prime": p | "rational": true, "ambient_dim": n,
///     "forms": [string...], "points": [[int|"a/b"...]...],
///     "tangents": [[...] | null ...], "seed": u64, "center": [[...]...] }
/// Every key except the field and ambient_dim is optional. "center" lists
/// points spanning a projection center.
struct Instance {
  Field field;
  std::size_t ambient_dim = 0;
  std::vector<Form> forms;
  std::vector<FatPoint> points;
  std::vector<ProjectivePoint> center;
  std::optional<std::uint64_t> seed;

  FiniteSubscheme subscheme() const;
  CompleteIntersection complete_intersection() const;
  /// Throws InstanceFormat if no center points were given.
  LinearSubspace center_subspace() const;
};

/// `field_override`, when set, must agree with a field declared in the file
/// and supplies it when the file declares none.
Instance parse_instance(const std::string& text, std::optional<Field> field_override = std::nullopt);
Instance load_instance(const std::string& path, std::optional<Field> field_override = std::nullopt);

nlohmann::ordered_json instance_to_json(const Instance& instance);
nlohmann::ordered_json point_to_json(const ProjectivePoint& p);

}  // namespace cbgon
