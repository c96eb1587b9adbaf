#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "covercount/fermat.hpp"
#include "test_util.hpp"

using namespace covercount;
using namespace covercount::fermat;

TEST_CASE("fermat form coefficients") {
  const auto h2 = fermat_form(2);
  CHECK(std::abs(h2.coef(2, 0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(h2.coef(0, 2, 0) - 1.0) < 1e-15);
  CHECK(std::abs(h2.coef(0, 0, 2) - 1.0) < 1e-15);
  CHECK(std::abs(h2.coef(1, 1, 0)) < 1e-15);
  CHECK(fermat_form(3).degree() == 3);
}

TEST_CASE("inflection points lie on the curve and on their tangent") {
  const auto p = inflection_point({3, 1, 1});
  CHECK(p.projectively_equal(geom::HomogeneousPoint(1, root_of_unity_2mu(3, 1), 0)));
  const auto p2 = inflection_point({3, 2, 1});
  CHECK(p2.projectively_equal(geom::HomogeneousPoint(0, 1, root_of_unity_2mu(3, 1))));

  for (int mu = 2; mu <= 6; ++mu) {
    const auto h = fermat_form(mu);
    for (int family = 1; family <= 3; ++family) {
      for (int j = 1; j <= mu; ++j) {
        const FermatTangentIndex idx{mu, family, j};
        const auto pt = inflection_point(idx);
        CHECK(std::abs(poly::evaluate(h, pt)) <= 1e-12);
        CHECK(tangent_line(idx).residual(pt) <= 1e-12);
      }
    }
  }
}

TEST_CASE("tangent line coefficients and total tangency") {
  const auto l = tangent_line({4, 1, 2});
  CHECK(l.projectively_equal(geom::ProjectiveLine(root_of_unity_2mu(4, 3), -1, 0)));

  for (int mu : {2, 3, 4}) {
    for (int j = 1; j <= mu; ++j) {
      const auto chart = geom::chart_of(tangent_line({mu, 1, j}), 9);
      const auto q = poly::restrict_to_line(fermat_form(mu), chart);
      const auto clusters = poly::roots_with_multiplicity(q, tol::cluster_eps);
      REQUIRE(clusters.size() == 1);
      CHECK(clusters[0].multiplicity == mu);
    }
  }
}

TEST_CASE("tangent lines from the three families never share a point") {
  for (int mu : {2, 3}) {
    for (int j1 = 1; j1 <= mu; ++j1)
      for (int j2 = 1; j2 <= mu; ++j2)
        for (int j3 = 1; j3 <= mu; ++j3) {
          const auto l1 = tangent_line({mu, 1, j1});
          const auto l2 = tangent_line({mu, 2, j2});
          const auto l3 = tangent_line({mu, 3, j3});
          const auto p12 = geom::intersect(l1, l2);
          CHECK(l3.residual(p12) > 1e-6);
        }
  }
}

TEST_CASE("artal branch curve structure") {
  // b = 3: g is the constant 1, F = f1*f2*f3 + h^1
  const auto cfg3 = ArtalFamilyConfig::make(3, 3, 42);
  const auto F3 = artal_branch_curve(cfg3);
  CHECK(F3.degree() == 3);
  auto lines = poly::multiply(tangent_form(cfg3.line_triple[0]),
                              poly::multiply(tangent_form(cfg3.line_triple[1]),
                                             tangent_form(cfg3.line_triple[2])));
  const auto h3 = fermat_form(3);
  for (std::size_t i = 0; i < F3.term_count(); ++i) {
    const cplx expect = lines.coefficients()[i] + h3.coefficients()[i];
    CHECK(std::abs(F3.coefficients()[i] - expect) < 1e-14);
  }

  // b = 4, mu = 2: restriction to each configured line is (unit)*t^4
  const auto cfg4 = ArtalFamilyConfig::make(4, 2, 7);
  const auto F4 = artal_branch_curve(cfg4);
  CHECK(F4.degree() == 4);
  for (const auto& idx : cfg4.line_triple) {
    const auto chart = geom::chart_of(tangent_line(idx), 13);
    const auto clusters =
        poly::roots_with_multiplicity(poly::restrict_to_line(F4, chart), tol::cluster_eps);
    REQUIRE(clusters.size() == 1);
    CHECK(clusters[0].multiplicity == 4);
    const auto t_p = geom::param_of_point(chart, inflection_point(idx));
    CHECK(std::abs(clusters[0].center - t_p.t) < 1e-9);
  }
}

TEST_CASE("artal branch curve is deterministic per seed") {
  const auto a = artal_branch_curve(ArtalFamilyConfig::make(6, 3, 5));
  const auto b = artal_branch_curve(ArtalFamilyConfig::make(6, 3, 5));
  const auto c = artal_branch_curve(ArtalFamilyConfig::make(6, 3, 6));
  REQUIRE(a.term_count() == b.term_count());
  bool identical = true, differs = false;
  for (std::size_t i = 0; i < a.term_count(); ++i) {
    if (a.coefficients()[i] != b.coefficients()[i]) identical = false;
    if (a.coefficients()[i] != c.coefficients()[i]) differs = true;
  }
  CHECK(identical);
  CHECK(differs);
}

TEST_CASE("config validation") {
  CHECK(testutil::thrown_code([] { ArtalFamilyConfig::make(6, 4, 0); }) == errc::config_invalid);
  CHECK(testutil::thrown_code([] { ArtalFamilyConfig::make(4, 1, 0); }) == errc::config_invalid);
  // duplicate families
  ArtalFamilyConfig cfg;
  cfg.b = 4;
  cfg.mu = 2;
  cfg.line_triple = {FermatTangentIndex{2, 1, 1}, FermatTangentIndex{2, 1, 2},
                     FermatTangentIndex{2, 3, 1}};
  CHECK(testutil::thrown_code([&] { check_config(cfg); }) == errc::config_invalid);
}

TEST_CASE("k-artal validity flags") {
  const auto cfg = ArtalFamilyConfig::make(3, 3, 0);
  const auto F = artal_branch_curve(cfg);
  std::vector<geom::ProjectiveLine> lines;
  for (const auto& idx : cfg.line_triple) lines.push_back(tangent_line(idx));

  SUBCASE("the standard triple passes") {
    const auto v = validate_k_artal(F, lines, 3);
    CHECK(v.lines_totally_tangent);
    CHECK(v.no_triple_points);
    CHECK(v.intersections_off_branch);
    CHECK(v.curve_minus_branch_connected);
    CHECK(v.degree_divisible);
    CHECK(v.all());
  }

  SUBCASE("three concurrent lines fail the triple-point flag") {
    const std::vector<geom::ProjectiveLine> pencil{
        geom::ProjectiveLine(1, 0, 0), geom::ProjectiveLine(0, 1, 0),
        geom::ProjectiveLine(1, 1, 0)}; // all through (0:0:1)
    const auto v = validate_k_artal(F, pencil, 3);
    CHECK(!v.no_triple_points);
  }

  SUBCASE("a secant line fails the tangency flag") {
    auto with_secant = lines;
    with_secant.push_back(geom::line_through(inflection_point({3, 1, 1}),
                                             inflection_point({3, 1, 2})));
    const auto v = validate_k_artal(F, with_secant, 3);
    CHECK(!v.lines_totally_tangent);
  }
}

TEST_CASE("smoothness spot check near the tangencies") {
  const auto cfg = ArtalFamilyConfig::make(4, 2, 7);
  const auto F = artal_branch_curve(cfg);
  for (const auto& idx : cfg.line_triple) {
    const double worst = smoothness_spot_check(F, inflection_point(idx), 20, 3);
    CHECK(worst > 1e-8);
  }
}
