#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numeric>

#include "covercount/fermat.hpp"
#include "covercount/monodromy.hpp"
#include "test_util.hpp"

using namespace covercount;
using namespace covercount::mono;

namespace {

// Synthetic single-line cover data with a prescribed restriction.
ComponentCoverData synthetic(poly::UnivariatePoly q, int m, std::vector<BranchPoint> bps,
                             cplx base, double clearance = 0.3) {
  ComponentCoverData d{geom::chart_of(geom::ProjectiveLine(0, 0, 1), 1)};
  d.m = m;
  d.restriction = std::move(q);
  d.branch_points = std::move(bps);
  d.clearance = clearance;
  for (auto& bp : d.branch_points) bp.avoid = std::max(1.1 * bp.danger, clearance);
  d.base_param = base;
  d.base_fiber = mth_roots_phase_ordered(d.restriction.eval(base), m);
  return d;
}

// Independent continuation oracle: fixed tiny steps along the path, nearest
// m-th-root matching at every step, no Newton and no plans.
std::vector<cplx> continuation_oracle(const poly::UnivariatePoly& q, int m,
                                      std::vector<cplx> values,
                                      const std::function<cplx(double)>& path, int steps) {
  for (int s = 1; s <= steps; ++s) {
    const auto roots = mth_roots_phase_ordered(q.eval(path(double(s) / steps)), m);
    for (auto& v : values) {
      cplx best{};
      double bd = std::numeric_limits<double>::infinity();
      for (const cplx& r : roots)
        if (std::abs(r - v) < bd) {
          bd = std::abs(r - v);
          best = r;
        }
      v = best;
    }
  }
  return values;
}

const fermat::ArtalFamilyConfig kCfg42 = fermat::ArtalFamilyConfig::make(4, 2, 1);

WeightedBranchDivisor cover42() {
  return WeightedBranchDivisor(4, {{fermat::artal_branch_curve(kCfg42), 1}});
}

} // namespace

TEST_CASE("weighted branch divisor bookkeeping") {
  const auto cover = cover42();
  CHECK(cover.m() == 4);
  CHECK(cover.n() == 1);
  CHECK(cover.defining_form().degree() == 4);

  // weighted degree must be divisible by m
  CHECK(testutil::thrown_code([] {
          WeightedBranchDivisor(4, {{fermat::fermat_form(3), 1}});
        }) == errc::config_invalid);
  CHECK(testutil::thrown_code([] {
          WeightedBranchDivisor(4, {{fermat::fermat_form(4), 4}});
        }) == errc::config_invalid);
}

TEST_CASE("component data on a tangent line: one branch point of full weight") {
  const auto cover = cover42();
  const auto data = component_data(cover, fermat::tangent_line(kCfg42.line_triple[0]), 3);
  REQUIRE(data.branch_points.size() == 1);
  CHECK(data.branch_points[0].multiplicity == 4);
  CHECK(data.infinity_multiplicity == 0);
  CHECK(data.base_fiber.size() == 4);
  // base fiber values are distinct m-th roots of the restriction
  const cplx q0 = data.restriction.eval(data.base_param);
  for (const cplx& s : data.base_fiber) CHECK(std::abs(std::pow(s, 4) - q0) < 1e-9 * (1 + std::abs(q0)));
}

TEST_CASE("component data on a generic line: simple branch points") {
  const auto cover = cover42();
  const geom::ProjectiveLine generic(cplx(0.31, 0.2), cplx(-0.7, 0.11), cplx(0.45, -0.33));
  const auto data = component_data(cover, generic, 5);
  REQUIRE(data.branch_points.size() == 4);
  for (const auto& bp : data.branch_points) CHECK(bp.multiplicity == 1);
  CHECK(splitting_count(data) == 1);
}

TEST_CASE("weight-2 conic part gives doubled multiplicities") {
  poly::TrivariateForm conic(2);
  conic.set_coef(2, 0, 0, 1);
  conic.set_coef(0, 2, 0, cplx(0.5, 0.25));
  conic.set_coef(0, 0, 2, cplx(-1.0, 0.4));
  conic.set_coef(1, 1, 0, cplx(0.2, -0.1));
  const WeightedBranchDivisor cover(4, {{conic, 2}});
  CHECK(cover.n() == 1);
  const geom::ProjectiveLine generic(cplx(0.4, 0.1), cplx(0.9, -0.2), cplx(-0.3, 0.6));
  const auto data = component_data(cover, generic, 2);
  REQUIRE(data.branch_points.size() == 2);
  CHECK(data.branch_points[0].multiplicity == 2);
  CHECK(data.branch_points[1].multiplicity == 2);
  CHECK(splitting_count(data) == 2);
}

TEST_CASE("a line inside the branch divisor is rejected") {
  const auto line_form = fermat::tangent_form({2, 1, 1});
  const WeightedBranchDivisor cover(2, {{line_form, 1}, {fermat::tangent_form({2, 2, 1}), 1}});
  CHECK(testutil::thrown_code([&] {
          component_data(cover, fermat::tangent_line({2, 1, 1}), 0);
        }) == errc::line_inside_branch_divisor);
}

TEST_CASE("path plans") {
  const auto d = synthetic(poly::UnivariatePoly({cplx(1)}), 2, {}, cplx(0, 0), 0.25);

  SUBCASE("empty plan to the base") {
    const auto plan = plan_path(d, d.base_param);
    CHECK(plan.segments.empty());
  }

  SUBCASE("clear straight run") {
    const auto plan = plan_path(d, cplx(1, 1));
    REQUIRE(plan.segments.size() == 1);
    CHECK(!plan.segments[0].is_arc);
  }

  SUBCASE("one obstacle forces a single semicircular detour") {
    auto dd = synthetic(poly::UnivariatePoly({cplx(0), cplx(1)}), 2, {{cplx(1, 0), 1, 1e-4}},
                        cplx(0, 0), 0.25);
    const auto plan = plan_path(dd, cplx(2, 0)); // obstacle dead ahead
    REQUIRE(plan.segments.size() == 3);
    CHECK(!plan.segments[0].is_arc);
    CHECK(plan.segments[1].is_arc);
    CHECK(!plan.segments[2].is_arc);
    CHECK(std::abs(plan.segments[1].center - cplx(1, 0)) < 1e-12);
    CHECK(std::abs(std::abs(plan.segments[1].ang1 - plan.segments[1].ang0) - M_PI) < 1e-6);
  }
}

TEST_CASE("tracking a constant restriction is the identity") {
  const auto d = synthetic(poly::UnivariatePoly({cplx(2.0, 1.0)}), 3, {}, cplx(0.4, -0.2));
  const auto tr = track(d, plan_path(d, cplx(-1.5, 2.0)));
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(tr.values[static_cast<std::size_t>(i)] -
                   d.base_fiber[static_cast<std::size_t>(i)]) < 1e-12);
}

TEST_CASE("square-root monodromy swaps the two sheets") {
  const auto d = synthetic(poly::UnivariatePoly({cplx(0), cplx(1)}), 2, {{cplx(0), 1, 1e-4}},
                           cplx(1.0, 0.0));
  const auto perm = local_monodromy(d, 0);
  CHECK(perm[0] == 1);
  CHECK(perm[1] == 0);
  CHECK(splitting_count(d) == 1);
}

TEST_CASE("q = t^2 under m = 4 shifts sheets by two, matching the oracle") {
  const auto d = synthetic(poly::UnivariatePoly({cplx(0), cplx(0), cplx(1)}), 4,
                           {{cplx(0), 2, 1e-4}}, cplx(1.0, 0.3));
  const auto perm = local_monodromy(d, 0);
  for (int i = 0; i < 4; ++i) CHECK(perm[static_cast<std::size_t>(i)] == (i + 2) % 4);
  CHECK(splitting_count(d) == 2);

  // independent continuation oracle around the same loop, 1000 fixed steps
  const cplx center = d.base_param;
  const double radius = std::abs(center);
  const auto circled = continuation_oracle(
      d.restriction, 4, d.base_fiber,
      [&](double u) { return center * std::polar(1.0, 2 * M_PI * u); }, 1000);
  for (int i = 0; i < 4; ++i) {
    // the oracle's continued value must equal the fiber value of label i+2
    CHECK(std::abs(circled[static_cast<std::size_t>(i)] -
                   d.base_fiber[static_cast<std::size_t>((i + 2) % 4)]) < 1e-9);
  }
  (void)radius;
}

TEST_CASE("a simple branch point under m = 4 is a 4-cycle") {
  const auto d = synthetic(poly::UnivariatePoly({cplx(0), cplx(1)}), 4, {{cplx(0), 1, 1e-4}},
                           cplx(1.2, 0.4));
  const auto perm = local_monodromy(d, 0);
  for (int i = 0; i < 4; ++i) CHECK(perm[static_cast<std::size_t>(i)] == (i + 1) % 4);
  CHECK(splitting_count(d) == 1);
}

TEST_CASE("mixed multiplicities: splitting count is the gcd") {
  // q = t^2 (t-2)^4 under m = 4: finite orders 2 and 4, infinity order 2
  const auto q = poly::UnivariatePoly({cplx(0), cplx(0), cplx(1)}) *
                 poly::UnivariatePoly({cplx(-2), cplx(1)}).pow(4);
  auto d = synthetic(q, 4, {{cplx(0), 2, 1e-4}, {cplx(2), 4, 1e-4}}, cplx(1.0, 1.5), 0.25);
  d.infinity_multiplicity = 2; // degree 6 restriction of a nominal degree-8 cover
  CHECK(splitting_count(d) == 2);
}

TEST_CASE("local monodromy at a full-weight tangency is the identity") {
  const auto cover = cover42();
  const auto data = component_data(cover, fermat::tangent_line(kCfg42.line_triple[1]), 11);
  REQUIRE(data.branch_points.size() == 1);
  const auto perm = local_monodromy(data, 0);
  for (int i = 0; i < 4; ++i) CHECK(perm[static_cast<std::size_t>(i)] == i);
  CHECK(splitting_count(data) == 4);
}

TEST_CASE("composed monodromy around every branch point is the identity") {
  const auto cover = cover42();
  const geom::ProjectiveLine generic(cplx(0.21, -0.4), cplx(0.8, 0.05), cplx(-0.37, 0.45));
  const auto data = component_data(cover, generic, 8);
  std::vector<int> composed(4);
  std::iota(composed.begin(), composed.end(), 0);
  for (std::size_t b = 0; b < data.branch_points.size(); ++b) {
    const auto perm = local_monodromy(data, b);
    std::vector<int> next(4);
    for (int i = 0; i < 4; ++i)
      next[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(composed[static_cast<std::size_t>(i)])];
    composed = next;
  }
  int sum = data.infinity_multiplicity;
  for (const auto& bp : data.branch_points) sum += bp.multiplicity;
  CHECK(sum % 4 == 0);
  for (int i = 0; i < 4; ++i) CHECK(composed[static_cast<std::size_t>(i)] == i);
}

TEST_CASE("offsets at an intersection") {
  const auto cover = cover42();
  const auto l0 = fermat::tangent_line(kCfg42.line_triple[0]);
  const auto l1 = fermat::tangent_line(kCfg42.line_triple[1]);
  const auto P = geom::intersect(l0, l1);
  const auto d0 = component_data(cover, l0, 21, {P});
  const auto d1 = component_data(cover, l1, 22, {P});

  const auto off = offset_at(d0, d1, cover, P);
  CHECK(off.matching.size() == 4);
  CHECK(off.max_residual <= tol::track_residual);

  // antisymmetry
  const auto rev = offset_at(d1, d0, cover, P);
  CHECK((off.a_P + rev.a_P) % 4 == 0);

  // the matching is the shift it claims to be
  for (const auto& [r, s] : off.matching) CHECK(s == (r + off.a_P) % 4);
}

TEST_CASE("trivial transports at a real positive fiber value give offset zero") {
  // F = z^2 + x*y restricted to x=0 and y=0 is constant 1 in these charts
  poly::TrivariateForm F(2);
  F.set_coef(0, 0, 2, 1.0);
  F.set_coef(1, 1, 0, 1.0);
  const WeightedBranchDivisor cover(2, {{F, 1}});

  const geom::ProjectiveLine lx(1, 0, 0), ly(0, 1, 0);
  ComponentCoverData dx{geom::LineChart(lx, geom::HomogeneousPoint(0, 0, 1),
                                        geom::HomogeneousPoint(0, 1, 0))};
  dx.m = 2;
  dx.restriction = poly::restrict_to_line(F, dx.chart);
  dx.clearance = 0.2;
  dx.base_param = cplx(0.7, 0.0);
  dx.base_fiber = mth_roots_phase_ordered(dx.restriction.eval(dx.base_param), 2);

  ComponentCoverData dy{geom::LineChart(ly, geom::HomogeneousPoint(0, 0, 1),
                                        geom::HomogeneousPoint(1, 0, 0))};
  dy.m = 2;
  dy.restriction = poly::restrict_to_line(F, dy.chart);
  dy.clearance = 0.2;
  dy.base_param = cplx(-0.4, 0.0);
  dy.base_fiber = mth_roots_phase_ordered(dy.restriction.eval(dy.base_param), 2);

  const auto P = geom::intersect(lx, ly); // (0:0:1), F(P) = 1
  const auto off = offset_at(dx, dy, cover, P);
  CHECK(off.a_P == 0);
  CHECK(std::abs(off.fiber_value - 1.0) < 1e-14);
}

TEST_CASE("intersections on the branch divisor are rejected") {
  const auto cover = cover42();
  const auto l0 = fermat::tangent_line(kCfg42.line_triple[0]);
  const auto l1 = fermat::tangent_line(kCfg42.line_triple[1]);
  const auto d0 = component_data(cover, l0, 31);
  const auto d1 = component_data(cover, l1, 32);
  // the tangency point of l0 lies on B
  const auto tangency = fermat::inflection_point(kCfg42.line_triple[0]);
  CHECK(testutil::thrown_code([&] { offset_at(d0, d1, cover, tangency); }) ==
        errc::intersection_on_branch_locus);
}

TEST_CASE("transport is independent of the route within a homotopy class") {
  const auto cover = cover42();
  const auto l0 = fermat::tangent_line(kCfg42.line_triple[0]);
  const auto data = component_data(cover, l0, 41);
  REQUIRE(data.branch_points.size() == 1);
  const cplx bp = data.branch_points[0].t;

  // a target well away from the branch point, reached directly and via a
  // waypoint on the same side
  const cplx target = bp + cplx(1.4, 1.3);
  const cplx waypoint = data.base_param + 0.5 * (target - data.base_param) + cplx(0.11, 0.07);

  const auto direct = track(data, plan_path(data, target));

  PathPlan leg1 = plan_path(data, waypoint);
  ComponentCoverData staged = data;
  const auto mid = track(data, leg1);
  staged.base_param = waypoint;
  staged.base_fiber = mid.values;
  const auto via = track(staged, plan_path(staged, target));

  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(direct.values[static_cast<std::size_t>(i)] -
                   via.values[static_cast<std::size_t>(i)]) < 1e-9);
}

TEST_CASE("step underflow at a genuine collision") {
  // path straight through the branch point of q = t with m = 2
  auto d = synthetic(poly::UnivariatePoly({cplx(0), cplx(1)}), 2, {}, cplx(-1.0, 0.0), 0.2);
  PathPlan through;
  through.clearance = d.clearance;
  through.start = d.base_param;
  through.end = cplx(1.0, 0.0);
  PathSegment seg;
  seg.from = d.base_param;
  seg.to = through.end;
  through.segments.push_back(seg);
  const auto code = testutil::thrown_code([&] { track(d, through); });
  REQUIRE(code.has_value());
  CHECK((*code == errc::step_underflow || *code == errc::sheet_collision));
}
