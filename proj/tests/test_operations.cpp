#include "cbgon/error.hpp"
#include "cbgon/operations.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace cbgon;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

const char* kCollinearPlusOne = R"({"format_version": 1, "prime": 101, "ambient_dim": 2,
  "points": [[1,0,1],[0,1,1],[1,1,2],[1,0,0]]})";

}  // namespace

TEST_CASE("instance parsing") {
  const auto inst = parse_instance(kCollinearPlusOne);
  CHECK(inst.field == Field::prime(101));
  CHECK(inst.points.size() == 4);
  const auto q = parse_instance(R"({"rational": true, "ambient_dim": 2, "forms": ["x0^2 - 1/2*x1*x2"],
    "points": [[1, "1/2", 2], [0, 1, 0]], "tangents": [[0, 1, 0], null], "seed": 5})");
  CHECK(q.field.is_rational());
  CHECK(q.points[0].length() == 2);
  CHECK(q.points[1].length() == 1);
  CHECK(q.seed == 5u);
  // Round trip through the writer.
  const auto again = parse_instance(instance_to_json(q).dump());
  CHECK(again.forms == q.forms);
  CHECK(again.points[0].base() == q.points[0].base());
  CHECK(again.points[0].tangent() == q.points[0].tangent());
  CHECK(again.seed == q.seed);

  CHECK(parse_instance(R"({"ambient_dim": 1, "points": [[1, 2]]})", Field::prime(7)).field == Field::prime(7));
  CHECK(code_of([] { parse_instance(R"({"ambient_dim": 1})"); }) == ErrorCode::InstanceFormat);
  CHECK(code_of([] { parse_instance(kCollinearPlusOne, Field::prime(7)); }) == ErrorCode::InstanceFormat);
  CHECK(code_of([] { parse_instance(R"({"prime": 101, "rational": true, "ambient_dim": 1})"); }) ==
        ErrorCode::InstanceFormat);
  CHECK(code_of([] { parse_instance(R"({"format_version": 2, "prime": 7, "ambient_dim": 1})"); }) ==
        ErrorCode::InstanceFormat);
  CHECK(code_of([] { parse_instance(R"({"prime": 7, "ambient_dim": 2, "points": [[1, 0]]})"); }) ==
        ErrorCode::InstanceFormat);
  CHECK(code_of([] { parse_instance(R"({"prime": 8, "ambient_dim": 1})"); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { parse_instance("{"); }) == ErrorCode::InstanceFormat);
  CHECK(code_of([] { parse_instance(R"({"prime": 7, "ambient_dim": 1, "forms": ["x0 + x1^2"]})"); }) ==
        ErrorCode::NotHomogeneous);
  CHECK(code_of([] { load_instance("/nonexistent/instance.json"); }) == ErrorCode::InstanceFormat);
}

TEST_CASE("report envelope") {
  const auto r = cb_check_report(parse_instance(kCollinearPlusOne), 1, {});
  const auto j = r.to_json();
  CHECK(j["format_version"] == 1);
  CHECK(j["operation"] == "cb-check");
  CHECK(j["verdict"] == "REPORT");
  CHECK(j["seed"].is_null());
  CHECK(j["data"]["cb"] == false);
  CHECK(j["data"]["independent"] == false);
  CHECK(j["caveats"].is_array());
  const std::string text = r.to_text();
  CHECK(text.find("cb: false") != std::string::npos);
  CHECK(text.find("verdict: REPORT") != std::string::npos);
}

TEST_CASE("gonality and audit reports") {
  const auto g = gonality_summary_report({4, 5}, std::nullopt, std::nullopt, std::nullopt).to_json();
  CHECK(g["data"]["lazarsfeld"] == 15);
  CHECK(g["data"]["corb"] == 16);
  CHECK(g["data"]["cord_lower"] == 15);
  CHECK(g["data"]["cord_upper"] == 17);
  const auto bad = gonality_summary_report({3, 3}, std::nullopt, std::nullopt, std::nullopt);
  CHECK_FALSE(bad.caveats.empty());
  const auto a = dim_audit_report({4, 5}).to_json();
  CHECK(a["data"]["dim_Y"] == 88);
  CHECK(a["data"]["dim_Psi"] == 89);
  CHECK(a["data"]["dominance"] == "cannot dominate");
}

TEST_CASE("cbconj scan report") {
  RunOptions o;
  o.seed = 7;
  const auto r = cbconj_scan_report(Field::prime(101), {2, 2, 4}, 0, o);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.seed == 7u);
  CHECK(r.to_json()["data"]["min_failing_degree"].get<long long>() >= 4);
  const auto unseeded = cbconj_scan_report(Field::prime(101), {2, 2, 4}, 0, {});
  CHECK(unseeded.seed == 0u);
  o.workers = 3;
  CHECK(cbconj_scan_report(Field::prime(101), {2, 2, 4}, 0, o).to_json() == r.to_json());
  auto grid = parse_instance(R"({"prime": 101, "ambient_dim": 3, "points": [[1,0,0,0],[0,1,0,0],[0,0,1,0]]})");
  const auto given = cbconj_scan_report(Field::prime(101), {2, 2, 4}, 0, {}, &grid);
  CHECK(given.verdict == Verdict::Pass);
  CHECK(given.to_json()["data"]["min_failing_degree"].is_null());
}

TEST_CASE("curve reports are deterministic across worker counts") {
  RunOptions one, three;
  three.workers = 3;
  const auto inst = random_curve_instance(Field::prime(101), {4, 5}, 11, true, one);
  CHECK(inst.center.size() == 2);
  CHECK(random_curve_instance(Field::prime(101), {4, 5}, 11, true, three).forms == inst.forms);
  const auto p1 = project_report(inst, one).to_json(), p3 = project_report(inst, three).to_json();
  CHECK(p1 == p3);
  CHECK(p1["data"]["projection_degree"] == 18);
  CHECK(p1["data"]["one_fiber_per_hyperplane"] == true);
  CHECK(fibers_report(inst, one).to_json() == fibers_report(inst, three).to_json());
  CHECK(gamma_report(inst, one).to_json() == gamma_report(inst, three).to_json());

  const auto planted = planted_curve_instance(Field::prime(101), {4, 5}, 3, one);
  const auto census = secant_census_report(planted, 4, three).to_json();
  CHECK(census["data"]["instance_plane_found"] == true);
  CHECK(census == secant_census_report(planted, 4, one).to_json());
  // The planted points are fat in the construction but reported as reduced points.
  CHECK(planted.points.size() == 4);
}

TEST_CASE("canonical report on a plane quintic") {
  RunOptions o;
  const auto inst = random_curve_instance(Field::prime(101), {5}, 2, true, o);
  const auto j = project_report(inst, o).to_json();
  CHECK(j["data"]["projection_degree"] == 4);
  CHECK(j["data"]["complete_fibers_cb_canonical"] == j["data"]["complete_rational_fibers"]);
  auto with_points = inst;
  with_points.points.clear();
  with_points.points.emplace_back(inst.center.front());
  CHECK(cb_canonical_report(with_points, o).to_json()["data"]["cb"] == false);
}
