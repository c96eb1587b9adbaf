#include "covercount/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace covercount::poly {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

// ---------------------------------------------------------------------------
// TrivariateForm

TrivariateForm::TrivariateForm(int degree) : degree_(degree) {
  if (degree < 0) fail(errc::bad_input, "negative degree");
  coef_.assign(dimension(degree), cplx{});
}

TrivariateForm TrivariateForm::constant(cplx value) {
  TrivariateForm f(0);
  f.coef_[0] = value;
  return f;
}

TrivariateForm TrivariateForm::linear(cplx a, cplx b, cplx c) {
  TrivariateForm f(1);
  f.set_coef(1, 0, 0, a);
  f.set_coef(0, 1, 0, b);
  f.set_coef(0, 0, 1, c);
  return f;
}

std::size_t TrivariateForm::dimension(int degree) {
  return static_cast<std::size_t>((degree + 1) * (degree + 2) / 2);
}

std::size_t TrivariateForm::monomial_index(int degree, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0 || a + b + c != degree)
    fail(errc::bad_input, "monomial exponents must be nonnegative and sum to the degree");
  // terms ordered a descending, then b descending; the a'-block (a' > a) has
  // degree-a'+1 entries, so the skipped prefix sums to a triangular number
  const int before_a = degree - a;
  const std::size_t skipped = static_cast<std::size_t>(before_a) * (before_a + 1) / 2;
  return skipped + static_cast<std::size_t>(degree - a - b);
}

cplx TrivariateForm::coef(int a, int b, int c) const {
  return coef_[monomial_index(degree_, a, b, c)];
}

void TrivariateForm::set_coef(int a, int b, int c, cplx value) {
  coef_[monomial_index(degree_, a, b, c)] = value;
}

double TrivariateForm::coefficient_scale() const {
  double s = 0;
  for (const cplx& c : coef_) s += std::abs(c);
  return s;
}

bool TrivariateForm::is_zero(double rel_eps) const {
  double m = 0;
  for (const cplx& c : coef_) m = std::max(m, std::abs(c));
  return m <= rel_eps;
}

cplx evaluate(const TrivariateForm& f, const geom::HomogeneousPoint& p) {
  const int d = f.degree();
  // power tables over the normalized representative
  std::vector<cplx> px(d + 1, 1.0), py(d + 1, 1.0), pz(d + 1, 1.0);
  for (int k = 1; k <= d; ++k) {
    px[k] = px[k - 1] * p[0];
    py[k] = py[k - 1] * p[1];
    pz[k] = pz[k - 1] * p[2];
  }
  cplx acc{};
  f.for_each_term([&](int a, int b, int c, cplx co) { acc += co * px[a] * py[b] * pz[c]; });
  return acc;
}

std::array<cplx, 3> gradient(const TrivariateForm& f, const geom::HomogeneousPoint& p) {
  const int d = f.degree();
  std::vector<cplx> px(d + 1, 1.0), py(d + 1, 1.0), pz(d + 1, 1.0);
  for (int k = 1; k <= d; ++k) {
    px[k] = px[k - 1] * p[0];
    py[k] = py[k - 1] * p[1];
    pz[k] = pz[k - 1] * p[2];
  }
  std::array<cplx, 3> g{};
  f.for_each_term([&](int a, int b, int c, cplx co) {
    if (a > 0) g[0] += co * static_cast<double>(a) * px[a - 1] * py[b] * pz[c];
    if (b > 0) g[1] += co * static_cast<double>(b) * px[a] * py[b - 1] * pz[c];
    if (c > 0) g[2] += co * static_cast<double>(c) * px[a] * py[b] * pz[c - 1];
  });
  return g;
}

TrivariateForm multiply(const TrivariateForm& f, const TrivariateForm& g, par::ExecMode mode) {
  const int df = f.degree(), dg = g.degree(), dh = df + dg;
  TrivariateForm h(dh);
  auto& out = h.coefficients();

  // Gather form: each output coefficient sums its own pair list in a fixed
  // order, so serial and OpenMP runs are bit-identical.
  std::vector<std::array<int, 3>> out_mono(out.size());
  {
    std::size_t idx = 0;
    for (int a = dh; a >= 0; --a)
      for (int b = dh - a; b >= 0; --b, ++idx) out_mono[idx] = {a, b, dh - a - b};
  }
  par::parallel_for(out.size(), mode, [&](std::size_t idx) {
    const auto [a, b, c] = out_mono[idx];
    cplx acc{};
    for (int af = std::min(a, df); af >= 0; --af) {
      const int rem_f = df - af; // bf + cf
      for (int bf = std::min(b, rem_f); bf >= std::max(0, rem_f - c); --bf) {
        const int cf = rem_f - bf;
        acc += f.coef(af, bf, cf) * g.coef(a - af, b - bf, c - cf);
      }
    }
    out[idx] = acc;
  });
  return h;
}

TrivariateForm power(const TrivariateForm& f, int k, par::ExecMode mode) {
  if (k < 0) fail(errc::bad_input, "negative power");
  if (k == 0) return TrivariateForm::constant(1.0);
  TrivariateForm acc = f;
  for (int i = 1; i < k; ++i) acc = multiply(acc, f, mode);
  return acc;
}

// ---------------------------------------------------------------------------
// UnivariatePoly

int UnivariatePoly::effective_degree(double rel_eps) const {
  const double scale = coefficient_scale();
  const double cut = rel_eps * (scale > 0 ? scale : 1.0);
  for (int k = nominal_degree(); k >= 0; --k)
    if (std::abs(coef_[static_cast<std::size_t>(k)]) > cut) return k;
  return -1; // identically zero
}

bool UnivariatePoly::is_zero(double rel_eps) const { return effective_degree(rel_eps) < 0; }

double UnivariatePoly::coefficient_scale() const {
  double s = 0;
  for (const cplx& c : coef_) s = std::max(s, std::abs(c));
  return s;
}

cplx UnivariatePoly::eval(cplx t) const {
  cplx acc{};
  for (std::size_t k = coef_.size(); k-- > 0;) acc = acc * t + coef_[k];
  return acc;
}

double UnivariatePoly::eval_magnitude(double abs_t) const {
  double acc = 0;
  for (std::size_t k = coef_.size(); k-- > 0;) acc = acc * abs_t + std::abs(coef_[k]);
  return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
  if (coef_.size() <= 1) return UnivariatePoly();
  std::vector<cplx> d(coef_.size() - 1);
  for (std::size_t k = 1; k < coef_.size(); ++k) d[k - 1] = coef_[k] * static_cast<double>(k);
  return UnivariatePoly(std::move(d));
}

cplx UnivariatePoly::taylor_coefficient(cplx center, int k) const {
  // q^(k)(center)/k! by repeated synthetic division with (t - center); the
  // round-r remainder is the order-r Taylor coefficient
  std::vector<cplx> work(coef_);
  cplx rem{};
  for (int round = 0; round <= k; ++round) {
    if (work.empty()) return cplx{};
    const std::size_t n = work.size() - 1;
    std::vector<cplx> quot(n);
    cplx carry{};
    for (std::size_t j = n; j >= 1; --j) {
      carry = work[j] + center * carry;
      quot[j - 1] = carry;
    }
    rem = work[0] + center * carry;
    work = std::move(quot);
  }
  return rem;
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& rhs) const {
  std::vector<cplx> out(coef_.size() + rhs.coef_.size() - 1, cplx{});
  for (std::size_t i = 0; i < coef_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coef_.size(); ++j) out[i + j] += coef_[i] * rhs.coef_[j];
  return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::pow(int k) const {
  if (k < 0) fail(errc::bad_input, "negative power");
  UnivariatePoly acc(std::vector<cplx>{cplx{1.0}});
  for (int i = 0; i < k; ++i) acc = acc * (*this);
  return acc;
}

// ---------------------------------------------------------------------------
// Restriction

UnivariatePoly restrict_to_line(const TrivariateForm& f, const geom::LineChart& chart) {
  const int d = f.degree();
  const auto& b = chart.base().coords();
  const auto& dir = chart.direction().coords();

  // (b_i + t*d_i)^k for every coordinate and power, each a vector of k+1
  // ascending coefficients
  std::array<std::vector<std::vector<cplx>>, 3> pw;
  for (int c = 0; c < 3; ++c) {
    pw[c].resize(d + 1);
    pw[c][0] = {cplx{1.0}};
    for (int k = 1; k <= d; ++k) {
      const auto& prev = pw[c][k - 1];
      std::vector<cplx> cur(k + 1, cplx{});
      for (int j = 0; j < k; ++j) {
        cur[j] += prev[j] * b[static_cast<std::size_t>(c)];
        cur[j + 1] += prev[j] * dir[static_cast<std::size_t>(c)];
      }
      pw[c][k] = std::move(cur);
    }
  }

  std::vector<cplx> out(d + 1, cplx{});
  std::vector<cplx> tmp, tmp2;
  f.for_each_term([&](int a, int bb, int cc, cplx co) {
    if (co == cplx{}) return;
    const auto& A = pw[0][a];
    const auto& B = pw[1][bb];
    const auto& C = pw[2][cc];
    tmp.assign(A.size() + B.size() - 1, cplx{});
    for (std::size_t i = 0; i < A.size(); ++i)
      for (std::size_t j = 0; j < B.size(); ++j) tmp[i + j] += A[i] * B[j];
    tmp2.assign(tmp.size() + C.size() - 1, cplx{});
    for (std::size_t i = 0; i < tmp.size(); ++i)
      for (std::size_t j = 0; j < C.size(); ++j) tmp2[i + j] += tmp[i] * C[j];
    for (std::size_t k = 0; k < tmp2.size(); ++k) out[k] += co * tmp2[k];
  });
  return UnivariatePoly(std::move(out));
}

// ---------------------------------------------------------------------------
// Aberth-Ehrlich

static std::vector<cplx> trimmed(const UnivariatePoly& q) {
  const int eff = q.effective_degree();
  if (eff < 0) fail(errc::bad_input, "root finding on the zero polynomial");
  return {q.coefficients().begin(), q.coefficients().begin() + eff + 1};
}

std::vector<cplx> find_roots(const UnivariatePoly& q, const RootFindOptions& opt) {
  const std::vector<cplx> c = trimmed(q);
  const int n = static_cast<int>(c.size()) - 1;
  if (n == 0) return {};
  if (n == 1) return {-c[0] / c[1]};

  // Initial guesses on a circle sized by a Cauchy-type bound.
  double radius = 0;
  for (int k = 0; k < n; ++k)
    radius = std::max(radius, std::pow(std::abs(c[k] / c[n]), 1.0 / (n - k)));
  radius = 1.0 + 2.0 * radius;
  std::vector<cplx> z(n), w(n);
  for (int i = 0; i < n; ++i) {
    const double th = 2.0 * M_PI * i / n + 0.4 / n + 0.5;
    z[i] = radius * cplx(std::cos(th), std::sin(th));
  }

  UnivariatePoly qq{std::vector<cplx>(c)};
  UnivariatePoly dq = qq.derivative();
  const double floor_kappa = 4.0 * (n + 1) * kEps;

  std::vector<char> settled(n, 0);
  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    // Jacobi-style sweep: every correction uses the previous iterate only,
    // which keeps the OpenMP path bit-identical to the serial one.
    par::parallel_for(static_cast<std::size_t>(n), opt.mode, [&](std::size_t i) {
      if (settled[i]) {
        w[i] = cplx{};
        return;
      }
      const cplx fi = qq.eval(z[i]);
      if (std::abs(fi) <= floor_kappa * qq.eval_magnitude(std::abs(z[i]))) {
        // at the evaluation noise floor: as converged as doubles allow
        settled[i] = 1;
        w[i] = cplx{};
        return;
      }
      const cplx di = dq.eval(z[i]);
      cplx newton = (std::abs(di) > 0) ? fi / di : cplx{1.0};
      cplx repulsion{};
      for (int j = 0; j < n; ++j) {
        if (j == static_cast<int>(i)) continue;
        const cplx diff = z[i] - z[j];
        if (std::abs(diff) > 1e-300) repulsion += 1.0 / diff;
      }
      const cplx denom = 1.0 - newton * repulsion;
      w[i] = (std::abs(denom) > 1e-300) ? newton / denom : newton;
    });
    bool all = true;
    for (int i = 0; i < n; ++i) {
      if (settled[i]) continue;
      z[i] -= w[i];
      if (std::abs(w[i]) <= opt.convergence * (1.0 + std::abs(z[i])))
        settled[i] = 1;
      else
        all = false;
    }
    if (all) return z;
  }
  fail(errc::root_finding_diverged, "Aberth iteration cap exceeded");
}

double attainable_root_radius(const UnivariatePoly& q, cplx center, int k) {
  const int n = q.effective_degree();
  const double noise = 4.0 * (n + 2) * kEps * q.eval_magnitude(std::abs(center));
  const double lead = std::abs(q.taylor_coefficient(center, k));
  if (lead < 1e-300) return std::numeric_limits<double>::infinity();
  return std::pow(noise / lead, 1.0 / k);
}

std::vector<RootCluster> roots_with_multiplicity(const UnivariatePoly& q, double cluster_eps) {
  RootFindOptions opt;
  opt.cluster_eps = cluster_eps;
  return roots_with_multiplicity(q, opt);
}

// A k-fold root of q is a simple root of q^(k-1); Newton there recovers the
// center far below the k-th-root noise smear of the individual roots.
static cplx polish_cluster_center(const UnivariatePoly& q, cplx centroid, int k, double radius) {
  UnivariatePoly p = q;
  for (int i = 1; i < k; ++i) p = p.derivative();
  const UnivariatePoly dp = p.derivative();
  cplx z = centroid;
  for (int it = 0; it < 40; ++it) {
    const cplx d = dp.eval(z);
    if (std::abs(d) < 1e-300) break;
    const cplx step = p.eval(z) / d;
    z -= step;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) break;
  }
  return (std::abs(z - centroid) <= radius) ? z : centroid;
}

std::vector<RootCluster> roots_with_multiplicity(const UnivariatePoly& q,
                                                 const RootFindOptions& opt) {
  std::vector<cplx> roots = find_roots(q, opt);
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  // A k-cluster is accepted when its spread is explained either by the
  // requested radius or by the attainable accuracy of a k-fold root of q at
  // the centroid. Larger multiplicities are tried first; without the second
  // criterion a smeared high-order root would shatter into singletons.
  std::vector<RootCluster> out;
  std::vector<char> used(roots.size(), 0);
  std::size_t remaining = roots.size();
  while (remaining > 0) {
    bool placed = false;
    for (int k = static_cast<int>(remaining); k >= 1 && !placed; --k) {
      for (std::size_t s = 0; s < roots.size() && !placed; ++s) {
        if (used[s]) continue;
        // k nearest unused roots to the seed, including the seed
        std::vector<std::size_t> cand;
        for (std::size_t j = 0; j < roots.size(); ++j)
          if (!used[j]) cand.push_back(j);
        std::stable_sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
          return std::abs(roots[a] - roots[s]) < std::abs(roots[b] - roots[s]);
        });
        cand.resize(static_cast<std::size_t>(k));
        cplx centroid{};
        for (std::size_t j : cand) centroid += roots[j];
        centroid /= static_cast<double>(k);
        double spread = 0;
        for (std::size_t j : cand) spread = std::max(spread, std::abs(roots[j] - centroid));
        const double radius =
            std::max(opt.cluster_eps, 8.0 * attainable_root_radius(q, centroid, k));
        if (spread <= radius) {
          for (std::size_t j : cand) used[j] = 1;
          remaining -= static_cast<std::size_t>(k);
          out.push_back({polish_cluster_center(q, centroid, k, std::max(spread, radius)), k});
          placed = true;
        }
      }
    }
    if (!placed) fail(errc::root_finding_diverged, "cluster assignment failed");
  }
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
    return a.center.imag() < b.center.imag();
  });
  return out;
}

} // namespace covercount::poly
