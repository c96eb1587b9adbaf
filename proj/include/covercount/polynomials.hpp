#pragma once

#include <array>
#include <vector>

#include "covercount/common.hpp"
#include "covercount/geometry.hpp"
#include "covercount/parallel.hpp"

namespace covercount::poly {

// Dense homogeneous trivariate form of fixed degree. Coefficients are indexed
// by the monomial x^a y^b z^c with a+b+c = degree, in the canonical order
// produced by monomial_index.
class TrivariateForm {
public:
  TrivariateForm() : degree_(0), coef_(1, cplx{}) {} // zero constant
  explicit TrivariateForm(int degree);

  static TrivariateForm zero(int degree) { return TrivariateForm(degree); }
  static TrivariateForm constant(cplx value);
  // Linear form a*x + b*y + c*z
  static TrivariateForm linear(cplx a, cplx b, cplx c);

  int degree() const noexcept { return degree_; }
  std::size_t term_count() const noexcept { return coef_.size(); }
  static std::size_t dimension(int degree);
  static std::size_t monomial_index(int degree, int a, int b, int c);

  cplx coef(int a, int b, int c) const;
  void set_coef(int a, int b, int c, cplx value);
  const std::vector<cplx>& coefficients() const noexcept { return coef_; }
  std::vector<cplx>& coefficients() noexcept { return coef_; }

  // Visits (a, b, c, coefficient) in index order.
  template <class F>
  void for_each_term(F&& f) const {
    std::size_t idx = 0;
    for (int a = degree_; a >= 0; --a)
      for (int b = degree_ - a; b >= 0; --b, ++idx) f(a, b, degree_ - a - b, coef_[idx]);
  }

  double coefficient_scale() const; // sum of coefficient moduli
  bool is_zero(double rel_eps = 1e-14) const;

private:
  int degree_;
  std::vector<cplx> coef_;
};

// Univariate polynomial, coefficients ascending. The coefficient list always
// has nominal_degree()+1 entries; trailing near-zero entries encode roots at
// the chart's infinity and are kept (effective_degree trims them on demand).
class UnivariatePoly {
public:
  UnivariatePoly() : coef_(1, cplx{}) {}
  explicit UnivariatePoly(std::vector<cplx> ascending) : coef_(std::move(ascending)) {
    if (coef_.empty()) coef_.assign(1, cplx{});
  }

  int nominal_degree() const noexcept { return static_cast<int>(coef_.size()) - 1; }
  int effective_degree(double rel_eps = 1e-12) const;
  const std::vector<cplx>& coefficients() const noexcept { return coef_; }
  cplx operator[](int k) const { return coef_[static_cast<std::size_t>(k)]; }

  bool is_zero(double rel_eps = 1e-12) const;
  double coefficient_scale() const;

  cplx eval(cplx t) const;
  // sum_k |c_k| |t|^k, the scale entering the evaluation noise floor
  double eval_magnitude(double abs_t) const;
  UnivariatePoly derivative() const;
  // k-th derivative divided by k!
  cplx taylor_coefficient(cplx center, int k) const;

  UnivariatePoly operator*(const UnivariatePoly& rhs) const;
  UnivariatePoly pow(int k) const;

private:
  std::vector<cplx> coef_;
};

struct RootCluster {
  cplx center{};
  int multiplicity = 0;
};

cplx evaluate(const TrivariateForm& f, const geom::HomogeneousPoint& p);
std::array<cplx, 3> gradient(const TrivariateForm& f, const geom::HomogeneousPoint& p);

TrivariateForm multiply(const TrivariateForm& f, const TrivariateForm& g,
                        par::ExecMode mode = par::ExecMode::Serial);
TrivariateForm power(const TrivariateForm& f, int k,
                     par::ExecMode mode = par::ExecMode::Serial);

// Substitutes the chart parametrization; the result has exactly deg(f)+1
// coefficients in the chart trivialization fixed by base and direction.
UnivariatePoly restrict_to_line(const TrivariateForm& f, const geom::LineChart& chart);

struct RootFindOptions {
  double cluster_eps = tol::cluster_eps;
  int max_iterations = 200;
  double convergence = 1e-13; // correction <= convergence*(1+|root|)
  par::ExecMode mode = par::ExecMode::Serial;
};

// All finite roots of q (Aberth-Ehrlich simultaneous iteration), clustered
// into multiple roots. Multiplicity sum equals the effective degree; the
// difference to the nominal degree is the caller's infinity deficiency.
// Clusters come back sorted by (re, im) of the center.
std::vector<RootCluster> roots_with_multiplicity(const UnivariatePoly& q, double cluster_eps);
std::vector<RootCluster> roots_with_multiplicity(const UnivariatePoly& q,
                                                 const RootFindOptions& opt);

// Raw Aberth-Ehrlich roots of the trimmed polynomial, unclustered.
std::vector<cplx> find_roots(const UnivariatePoly& q, const RootFindOptions& opt);

// Radius within which a k-fold root of q near center is indistinguishable
// from its double-precision coefficient noise. Used by the clustering pass
// and by the monodromy engine to keep paths out of the smeared zone.
double attainable_root_radius(const UnivariatePoly& q, cplx center, int k);

} // namespace covercount::poly
