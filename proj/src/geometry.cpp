#include "covercount/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace covercount::geom {

double max_modulus(const Triple& v) {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

Triple normalize(const Triple& v) {
  const double m = max_modulus(v);
  if (m < 1e-300) fail(errc::bad_input, "zero coordinate triple");
  return {v[0] / m, v[1] / m, v[2] / m};
}

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

cplx dot(const Triple& a, const Triple& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

static double cross_modulus(const Triple& a, const Triple& b) { return max_modulus(cross(a, b)); }

HomogeneousPoint::HomogeneousPoint(const Triple& coords) : v_(normalize(coords)) {}

bool HomogeneousPoint::projectively_equal(const HomogeneousPoint& other, double eps) const {
  return cross_modulus(v_, other.v_) <= eps;
}

ProjectiveLine::ProjectiveLine(const Triple& coeffs) : c_(normalize(coeffs)) {}

bool ProjectiveLine::projectively_equal(const ProjectiveLine& other, double eps) const {
  return cross_modulus(c_, other.c_) <= eps;
}

double ProjectiveLine::residual(const HomogeneousPoint& p) const {
  return std::abs(dot(c_, p.coords()));
}

bool ProjectiveLine::contains(const HomogeneousPoint& p, double eps) const {
  return residual(p) <= eps;
}

ProjectiveLine line_through(const HomogeneousPoint& p, const HomogeneousPoint& q) {
  const Triple c = cross(p.coords(), q.coords());
  if (max_modulus(c) <= tol::projective_eps)
    fail(errc::coincident_points, "line_through needs two distinct points");
  return ProjectiveLine(c);
}

HomogeneousPoint intersect(const ProjectiveLine& l1, const ProjectiveLine& l2) {
  const Triple p = cross(l1.coeffs(), l2.coeffs());
  if (max_modulus(p) <= tol::projective_eps)
    fail(errc::coincident_lines, "intersect needs two distinct lines");
  return HomogeneousPoint(p);
}

LineChart::LineChart(const ProjectiveLine& line, const HomogeneousPoint& base,
                     const HomogeneousPoint& direction)
    : line_(line), base_(base), dir_(direction) {
  if (!line.contains(base, 1e-8) || !line.contains(direction, 1e-8))
    fail(errc::point_off_line, "chart base/direction must lie on the line");
  if (cross_modulus(base.coords(), direction.coords()) < tol::projective_eps)
    fail(errc::coincident_points, "chart base and direction must be independent");
}

Triple LineChart::at_raw(cplx t) const {
  const Triple& b = base_.coords();
  const Triple& d = dir_.coords();
  return {b[0] + t * d[0], b[1] + t * d[1], b[2] + t * d[2]};
}

HomogeneousPoint LineChart::at(cplx t) const { return HomogeneousPoint(at_raw(t)); }

// Random point on the line: n x u is bilinearly orthogonal to n for any u.
static Triple random_point_on(const Triple& n, Rng& rng) {
  for (;;) {
    const Triple u{rng.next_unit_disk(), rng.next_unit_disk(), rng.next_unit_disk()};
    const Triple p = cross(n, u);
    if (max_modulus(p) > 1e-3) return normalize(p);
  }
}

LineChart chart_of(const ProjectiveLine& l, std::uint64_t seed) {
  Rng rng(seed ^ 0xC0FFEEULL);
  for (int attempt = 0; attempt < 256; ++attempt) {
    const Triple b = random_point_on(l.coeffs(), rng);
    const Triple d = random_point_on(l.coeffs(), rng);
    if (cross_modulus(b, d) >= 0.1)
      return LineChart(l, HomogeneousPoint(b), HomogeneousPoint(d));
  }
  fail(errc::degenerate_geometry, "could not draw a separated chart");
}

LineChart chart_of_avoiding(const ProjectiveLine& l, std::uint64_t seed,
                            const std::vector<HomogeneousPoint>& keep_finite) {
  for (std::uint64_t k = 0; k < 64; ++k) {
    const LineChart chart = chart_of(l, seed + k);
    bool ok = true;
    for (const auto& p : keep_finite) {
      const ChartParam t = param_of_point(chart, p);
      if (t.at_infinity || std::abs(t.t) > tol::chart_param_cap) {
        ok = false;
        break;
      }
    }
    if (ok) return chart;
  }
  fail(errc::degenerate_geometry, "no chart keeps all required points in a tame region");
}

ChartParam param_of_point(const LineChart& chart, const HomogeneousPoint& p) {
  if (!chart.line().contains(p, 1e-8)) fail(errc::point_off_line, "param_of_point: p not on line");
  if (p.projectively_equal(chart.direction())) return {cplx{}, true};
  // cross(base, p) + t * cross(direction, p) = 0, solved at the largest entry.
  const Triple cb = cross(chart.base().coords(), p.coords());
  const Triple cd = cross(chart.direction().coords(), p.coords());
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(cd[i]) > std::abs(cd[k])) k = i;
  if (std::abs(cd[k]) < tol::projective_eps) return {cplx{}, true};
  return {-cb[k] / cd[k], false};
}

} // namespace covercount::geom
