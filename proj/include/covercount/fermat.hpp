#pragma once

#include <string>
#include <vector>

#include "covercount/geometry.hpp"
#include "covercount/polynomials.hpp"

namespace covercount::fermat {

// zeta_{2*mu}^k = exp(i*pi*k/mu)
cplx root_of_unity_2mu(int mu, long long k);

// Index (mu, family, j) of a total inflection point / tangent line of the
// degree-mu Fermat curve: family 1 points (1 : z^{2j-1} : 0), family 2
// (0 : 1 : z^{2j-1}), family 3 (z^{2j-1} : 0 : 1), with z = zeta_{2mu}.
struct FermatTangentIndex {
  int mu = 2;
  int family = 1; // 1, 2, or 3
  int j = 1;      // 1..mu
};

void check_index(const FermatTangentIndex& idx);

poly::TrivariateForm fermat_form(int mu); // x^mu + y^mu + z^mu
geom::HomogeneousPoint inflection_point(const FermatTangentIndex& idx);
geom::ProjectiveLine tangent_line(const FermatTangentIndex& idx);
// Defining linear form of tangent_line(idx) with the sign convention
// z^{2j-1}x - y (and its cyclic variants).
poly::TrivariateForm tangent_form(const FermatTangentIndex& idx);

// Configuration of the degree b = mu*nu branch curve f1*f2*f3*g + h_mu^nu,
// with g a seeded random form of degree b-3 (g = 1 when b = 3).
struct ArtalFamilyConfig {
  int b = 4;
  int mu = 2;
  std::uint64_t seed = 0;
  std::array<FermatTangentIndex, 3> line_triple{}; // defaulted by make()

  // nu = b/mu; line triple defaults to (1,1), (2,1), (3,mu)
  static ArtalFamilyConfig make(int b, int mu, std::uint64_t seed);
  static ArtalFamilyConfig make(int b, int mu, std::uint64_t seed, int j1, int j2, int j3);
  int nu() const { return b / mu; }
};

void check_config(const ArtalFamilyConfig& cfg);

poly::TrivariateForm artal_branch_curve(const ArtalFamilyConfig& cfg);

// Per-flag validity of a k-Artal arrangement (B plus tangent lines) for a
// degree-m cyclic cover; see the field comments.
struct ArtalValidity {
  bool lines_totally_tangent = false; // one root cluster of multiplicity deg B per line
  bool no_triple_points = false;      // no three lines concurrent
  bool intersections_off_branch = false; // |B| bounded away from 0 at pairwise intersections
  bool curve_minus_branch_connected = false;
  bool degree_divisible = false; // deg B == 0 mod m
  std::vector<std::string> failures;

  bool all() const {
    return lines_totally_tangent && no_triple_points && intersections_off_branch &&
           curve_minus_branch_connected && degree_divisible;
  }
};

ArtalValidity validate_k_artal(const poly::TrivariateForm& B,
                               const std::vector<geom::ProjectiveLine>& lines, int m,
                               std::uint64_t seed = 0);

// Samples `count` seeded points of the zero set of B near `center` (roots of
// restrictions to random lines through perturbed anchors) and reports the
// smallest gradient modulus, relative to the coefficient scale of B. A
// genuinely singular point nearby drives the result toward zero.
double smoothness_spot_check(const poly::TrivariateForm& B, const geom::HomogeneousPoint& center,
                             int count, std::uint64_t seed);

} // namespace covercount::fermat
