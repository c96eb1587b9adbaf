#include "covercount/fermat.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace covercount::fermat {

using geom::HomogeneousPoint;
using geom::ProjectiveLine;
using poly::TrivariateForm;

cplx root_of_unity_2mu(int mu, long long k) {
  if (mu < 2) fail(errc::config_invalid, "mu must be >= 2");
  const long long order = 2LL * mu;
  long long r = k % order;
  if (r < 0) r += order;
  return std::polar(1.0, M_PI * static_cast<double>(r) / static_cast<double>(mu));
}

void check_index(const FermatTangentIndex& idx) {
  if (idx.mu < 2) fail(errc::config_invalid, "mu must be >= 2");
  if (idx.family < 1 || idx.family > 3) fail(errc::config_invalid, "family must be 1, 2 or 3");
  if (idx.j < 1 || idx.j > idx.mu) fail(errc::config_invalid, "j must be in 1..mu");
}

TrivariateForm fermat_form(int mu) {
  if (mu < 2) fail(errc::config_invalid, "mu must be >= 2");
  TrivariateForm h(mu);
  h.set_coef(mu, 0, 0, 1.0);
  h.set_coef(0, mu, 0, 1.0);
  h.set_coef(0, 0, mu, 1.0);
  return h;
}

HomogeneousPoint inflection_point(const FermatTangentIndex& idx) {
  check_index(idx);
  const cplx z = root_of_unity_2mu(idx.mu, 2 * idx.j - 1);
  switch (idx.family) {
    case 1: return HomogeneousPoint(1.0, z, 0.0);
    case 2: return HomogeneousPoint(0.0, 1.0, z);
    default: return HomogeneousPoint(z, 0.0, 1.0);
  }
}

TrivariateForm tangent_form(const FermatTangentIndex& idx) {
  check_index(idx);
  const cplx z = root_of_unity_2mu(idx.mu, 2 * idx.j - 1);
  switch (idx.family) {
    case 1: return TrivariateForm::linear(z, -1.0, 0.0);
    case 2: return TrivariateForm::linear(0.0, z, -1.0);
    default: return TrivariateForm::linear(-1.0, 0.0, z);
  }
}

ProjectiveLine tangent_line(const FermatTangentIndex& idx) {
  const TrivariateForm f = tangent_form(idx);
  return ProjectiveLine(f.coef(1, 0, 0), f.coef(0, 1, 0), f.coef(0, 0, 1));
}

ArtalFamilyConfig ArtalFamilyConfig::make(int b, int mu, std::uint64_t seed) {
  return make(b, mu, seed, 1, 1, mu);
}

ArtalFamilyConfig ArtalFamilyConfig::make(int b, int mu, std::uint64_t seed, int j1, int j2,
                                          int j3) {
  ArtalFamilyConfig cfg;
  cfg.b = b;
  cfg.mu = mu;
  cfg.seed = seed;
  cfg.line_triple = {FermatTangentIndex{mu, 1, j1}, FermatTangentIndex{mu, 2, j2},
                     FermatTangentIndex{mu, 3, j3}};
  check_config(cfg);
  return cfg;
}

void check_config(const ArtalFamilyConfig& cfg) {
  if (cfg.mu < 2) fail(errc::config_invalid, "mu must be >= 2");
  if (cfg.b < 3) fail(errc::config_invalid, "b must be >= 3");
  if (cfg.b % cfg.mu != 0) fail(errc::config_invalid, "mu must divide b");
  bool seen[4] = {false, false, false, false};
  for (const auto& idx : cfg.line_triple) {
    check_index(idx);
    if (idx.mu != cfg.mu) fail(errc::config_invalid, "line triple must live on the same Fermat curve");
    if (seen[idx.family]) fail(errc::config_invalid, "line triple needs pairwise distinct families");
    seen[idx.family] = true;
  }
}

poly::TrivariateForm artal_branch_curve(const ArtalFamilyConfig& cfg) {
  check_config(cfg);
  const int nu = cfg.nu();

  TrivariateForm g = TrivariateForm::constant(1.0);
  if (cfg.b > 3) {
    g = TrivariateForm(cfg.b - 3);
    Rng rng(cfg.seed ^ 0xA57A1ULL);
    for (auto& c : g.coefficients()) c = rng.next_unit_disk();
  }

  TrivariateForm lines = tangent_form(cfg.line_triple[0]);
  lines = poly::multiply(lines, tangent_form(cfg.line_triple[1]));
  lines = poly::multiply(lines, tangent_form(cfg.line_triple[2]));
  const TrivariateForm lhs = poly::multiply(lines, g);
  const TrivariateForm rhs = poly::power(fermat_form(cfg.mu), nu);

  TrivariateForm F(cfg.b);
  for (std::size_t i = 0; i < F.term_count(); ++i)
    F.coefficients()[i] = lhs.coefficients()[i] + rhs.coefficients()[i];
  return F;
}

ArtalValidity validate_k_artal(const TrivariateForm& B, const std::vector<ProjectiveLine>& lines,
                               int m, std::uint64_t seed) {
  ArtalValidity v;
  const int deg = B.degree();
  const double scale = B.coefficient_scale();

  v.degree_divisible = (m >= 2) && (deg % m == 0);
  if (!v.degree_divisible) v.failures.push_back("deg B not divisible by m");

  // (a) total tangency line by line
  v.lines_totally_tangent = true;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto chart = geom::chart_of(lines[i], seed + i);
    const auto q = poly::restrict_to_line(B, chart);
    if (q.coefficient_scale() <= 1e-12 * scale) {
      v.lines_totally_tangent = false;
      v.failures.push_back("line " + std::to_string(i) + " lies inside B");
      continue;
    }
    const auto clusters = poly::roots_with_multiplicity(q, tol::cluster_eps);
    if (clusters.size() != 1 || clusters[0].multiplicity != deg) {
      v.lines_totally_tangent = false;
      v.failures.push_back("line " + std::to_string(i) + " is not totally tangent");
    }
  }

  // (b) no triple points, (c) pairwise intersections off B, (d) connectivity
  v.no_triple_points = true;
  v.intersections_off_branch = true;
  std::vector<std::vector<std::size_t>> adj(lines.size());
  std::vector<HomogeneousPoint> crossings;
  std::vector<std::pair<std::size_t, std::size_t>> crossing_pairs;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].projectively_equal(lines[j])) {
        v.no_triple_points = false;
        v.failures.push_back("lines " + std::to_string(i) + "," + std::to_string(j) + " coincide");
        continue;
      }
      const auto P = geom::intersect(lines[i], lines[j]);
      crossings.push_back(P);
      crossing_pairs.push_back({i, j});
      const double val = std::abs(poly::evaluate(B, P));
      if (val >= tol::on_branch_eps * scale) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      } else {
        v.intersections_off_branch = false;
        v.failures.push_back("intersection of lines " + std::to_string(i) + "," +
                             std::to_string(j) + " lies on B");
      }
    }
  }
  for (std::size_t a = 0; a < crossings.size(); ++a)
    for (std::size_t b = a + 1; b < crossings.size(); ++b)
      if (crossings[a].projectively_equal(crossings[b])) {
        v.no_triple_points = false;
        v.failures.push_back("three lines meet at one point");
      }

  // connectivity of the line arrangement through off-B crossings
  if (lines.empty()) {
    v.curve_minus_branch_connected = false;
  } else {
    std::vector<char> visited(lines.size(), 0);
    std::vector<std::size_t> stack{0};
    visited[0] = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[u])
        if (!visited[w]) {
          visited[w] = 1;
          stack.push_back(w);
        }
    }
    v.curve_minus_branch_connected = true;
    for (char f : visited)
      if (!f) v.curve_minus_branch_connected = false;
    if (!v.curve_minus_branch_connected)
      v.failures.push_back("arrangement minus B is disconnected");
  }
  return v;
}

double smoothness_spot_check(const TrivariateForm& B, const HomogeneousPoint& center, int count,
                             std::uint64_t seed) {
  Rng rng(seed ^ 0x5107ULL);
  const double scale = B.coefficient_scale() * B.degree();
  double worst = std::numeric_limits<double>::infinity();
  int sampled = 0;
  for (int attempt = 0; attempt < 16 * count && sampled < count; ++attempt) {
    // random secant through a perturbed anchor near the center
    geom::Triple anchor = center.coords();
    for (auto& c : anchor) c += 0.05 * rng.next_unit_disk();
    const geom::Triple dir{rng.next_unit_disk(), rng.next_unit_disk(), rng.next_unit_disk()};
    if (geom::max_modulus(geom::cross(anchor, dir)) < 1e-3) continue;
    geom::ProjectiveLine secant(geom::cross(anchor, dir)); // line through anchor and dir
    const auto chart = geom::chart_of(secant, rng.next_u64());
    const auto q = poly::restrict_to_line(B, chart);
    if (q.is_zero()) continue;
    std::vector<poly::RootCluster> clusters;
    try {
      clusters = poly::roots_with_multiplicity(q, tol::cluster_eps);
    } catch (const Error&) {
      continue;
    }
    // nearest curve point to the center along this secant
    double best_dist = std::numeric_limits<double>::infinity();
    cplx best_t{};
    for (const auto& cl : clusters) {
      const auto p = chart.at(cl.center);
      const double d = geom::max_modulus(geom::cross(p.coords(), center.coords()));
      if (d < best_dist) {
        best_dist = d;
        best_t = cl.center;
      }
    }
    if (!std::isfinite(best_dist)) continue;
    const auto p = chart.at(best_t);
    const auto grad = poly::gradient(B, p);
    const double g =
        std::max({std::abs(grad[0]), std::abs(grad[1]), std::abs(grad[2])});
    worst = std::min(worst, g / scale);
    ++sampled;
  }
  if (sampled == 0) fail(errc::degenerate_geometry, "no curve samples found near the center");
  return worst;
}

} // namespace covercount::fermat
