#pragma once

#include <array>
#include <vector>

#include "covercount/common.hpp"

namespace covercount::geom {

using Triple = std::array<cplx, 3>;

// max_k |v_k|
double max_modulus(const Triple& v);

// v / max_modulus(v); the scaling is by a positive real, so phases survive.
// This is the normalization convention every evaluation and comparison uses.
Triple normalize(const Triple& v);

Triple cross(const Triple& a, const Triple& b);

// a.x*b.x + a.y*b.y + a.z*b.z (bilinear, no conjugation)
cplx dot(const Triple& a, const Triple& b);

// Point of the complex projective plane, stored max-modulus normalized.
class HomogeneousPoint {
public:
  explicit HomogeneousPoint(const Triple& coords);
  HomogeneousPoint(cplx x, cplx y, cplx z) : HomogeneousPoint(Triple{x, y, z}) {}

  const Triple& coords() const noexcept { return v_; }
  cplx operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }

  bool projectively_equal(const HomogeneousPoint& other, double eps = tol::projective_eps) const;

private:
  Triple v_;
};

// Line a*x + b*y + c*z = 0, coefficients max-modulus normalized.
class ProjectiveLine {
public:
  explicit ProjectiveLine(const Triple& coeffs);
  ProjectiveLine(cplx a, cplx b, cplx c) : ProjectiveLine(Triple{a, b, c}) {}

  const Triple& coeffs() const noexcept { return c_; }

  bool projectively_equal(const ProjectiveLine& other, double eps = tol::projective_eps) const;
  bool contains(const HomogeneousPoint& p, double eps = tol::incidence_eps) const;
  // |a*x + b*y + c*z| at the normalized representative of p
  double residual(const HomogeneousPoint& p) const;

private:
  Triple c_;
};

ProjectiveLine line_through(const HomogeneousPoint& p, const HomogeneousPoint& q);
HomogeneousPoint intersect(const ProjectiveLine& l1, const ProjectiveLine& l2);

// Parameter on a chart; at_infinity marks the direction point.
struct ChartParam {
  cplx t{};
  bool at_infinity = false;
};

// Affine coordinate t -> base + t*direction on a projective line. base and
// direction are stored as their normalized representatives, which fixes the
// trivialization used by every restriction on this chart.
class LineChart {
public:
  LineChart(const ProjectiveLine& line, const HomogeneousPoint& base,
            const HomogeneousPoint& direction);

  const ProjectiveLine& line() const noexcept { return line_; }
  const HomogeneousPoint& base() const noexcept { return base_; }
  const HomogeneousPoint& direction() const noexcept { return dir_; }

  // Raw affine representative base + t*direction (not re-normalized).
  Triple at_raw(cplx t) const;
  HomogeneousPoint at(cplx t) const;

private:
  ProjectiveLine line_;
  HomogeneousPoint base_;
  HomogeneousPoint dir_;
};

// Deterministic seeded chart on l. Base and direction are drawn on the line
// with pairwise separation >= 0.1 (cross-product modulus of the normalized
// representatives).
LineChart chart_of(const ProjectiveLine& l, std::uint64_t seed);

// As chart_of, but redrawn (seed, seed+1, ...) until every point of
// keep_finite has parameter modulus <= tol::chart_param_cap and none of them
// sits at the chart's infinity.
LineChart chart_of_avoiding(const ProjectiveLine& l, std::uint64_t seed,
                            const std::vector<HomogeneousPoint>& keep_finite);

ChartParam param_of_point(const LineChart& chart, const HomogeneousPoint& p);

} // namespace covercount::geom
