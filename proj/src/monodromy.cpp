#include "covercount/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <numeric>

namespace covercount::mono {

using geom::HomogeneousPoint;
using geom::LineChart;
using geom::ProjectiveLine;
using poly::UnivariatePoly;

namespace {
constexpr double kTau = 2.0 * M_PI;

double arg_2pi(cplx z) {
  double a = std::arg(z);
  if (a < 0) a += kTau;
  return a;
}
} // namespace

// ---------------------------------------------------------------------------
// WeightedBranchDivisor

WeightedBranchDivisor::WeightedBranchDivisor(int m, std::vector<Part> parts)
    : m_(m), parts_(std::move(parts)) {
  if (m_ < 2) fail(errc::config_invalid, "cover degree m must be >= 2");
  if (parts_.empty()) fail(errc::config_invalid, "branch divisor needs at least one part");
  long long weighted_degree = 0;
  for (const auto& p : parts_) {
    if (p.weight < 1 || p.weight >= m_)
      fail(errc::config_invalid, "part weights must lie in 1..m-1");
    if (p.form.degree() < 1 || p.form.is_zero())
      fail(errc::config_invalid, "branch parts must be nonzero forms of positive degree");
    weighted_degree += static_cast<long long>(p.weight) * p.form.degree();
  }
  if (weighted_degree % m_ != 0)
    fail(errc::config_invalid, "weighted branch degree must be divisible by m");
  F_ = poly::power(parts_[0].form, parts_[0].weight);
  for (std::size_t i = 1; i < parts_.size(); ++i)
    F_ = poly::multiply(F_, poly::power(parts_[i].form, parts_[i].weight));
  n_ = static_cast<int>(weighted_degree / m_);
}

double WeightedBranchDivisor::relative_value_at(const HomogeneousPoint& p) const {
  return std::abs(poly::evaluate(F_, p)) / F_.coefficient_scale();
}

// ---------------------------------------------------------------------------
// Fiber helpers

std::vector<cplx> mth_roots_phase_ordered(cplx w, int m) {
  const double r = std::pow(std::abs(w), 1.0 / m);
  const double th = arg_2pi(w);
  std::vector<cplx> roots(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k)
    roots[static_cast<std::size_t>(k)] = std::polar(r, (th + kTau * k) / m);
  // phases (th + 2*pi*k)/m are already increasing in [0, 2*pi)
  return roots;
}

// ---------------------------------------------------------------------------
// component_data

// Smallest circle radius around a k-fold root at which the computed values of
// q dominate the Horner noise floor by a factor of 30, so continuation around
// the circle sees reliable phases. Starts from the a-priori perturbation
// bound and grows until the measured values pass.
static double measured_danger_radius(const UnivariatePoly& q, cplx center, int k) {
  const int n = q.effective_degree();
  const double kappa = 4.0 * (n + 2) * std::numeric_limits<double>::epsilon();
  double r = std::max(poly::attainable_root_radius(q, center, k), 1e-4);
  for (int grow = 0; grow < 80; ++grow) {
    bool ok = true;
    for (int s = 0; s < 16 && ok; ++s) {
      const cplx t = center + std::polar(r, 2.0 * M_PI * s / 16 + 0.37);
      ok = std::abs(q.eval(t)) >= 30.0 * kappa * q.eval_magnitude(std::abs(t));
    }
    if (ok) return r;
    r *= 1.3;
  }
  fail(errc::degenerate_geometry, "no radius clears the evaluation noise around a branch point");
}

namespace {

// One chart candidate, fully analyzed. `healthy` means: no deficiency, every
// required point tame and well clear of the numerical danger zones, and
// detour circles pairwise disjoint.
struct ChartCandidate {
  ComponentCoverData data;
  bool healthy = false;
  std::string defect;
};

ChartCandidate analyze_chart(const WeightedBranchDivisor& cover, const ProjectiveLine& line,
                             std::uint64_t chart_seed,
                             const std::vector<HomogeneousPoint>& keep_tame) {
  const int m = cover.m();
  ChartCandidate cand{ComponentCoverData{geom::chart_of_avoiding(line, chart_seed, keep_tame)}};
  ComponentCoverData& data = cand.data;
  data.m = m;

  UnivariatePoly q_total(std::vector<cplx>{cplx{1.0}});
  int weighted_deficiency = 0;
  for (const auto& part : cover.parts()) {
    UnivariatePoly q = poly::restrict_to_line(part.form, data.chart);
    // an all-tiny restriction is zero relative to the form, not to itself
    if (q.coefficient_scale() <= 1e-12 * part.form.coefficient_scale())
      fail(errc::line_inside_branch_divisor, "component lies inside a branch part");
    weighted_deficiency += part.weight * (q.nominal_degree() - q.effective_degree());
    q_total = q_total * q.pow(part.weight);
    data.part_restrictions.push_back(std::move(q));
  }
  data.restriction = q_total;
  data.infinity_multiplicity = weighted_deficiency % m;

  // Branch points: per-part root clusters, merged across parts.
  struct RawPoint {
    cplx t;
    int weighted = 0;
  };
  std::vector<RawPoint> raw;
  for (std::size_t i = 0; i < cover.parts().size(); ++i) {
    const int w = cover.parts()[i].weight;
    for (const auto& cl :
         poly::roots_with_multiplicity(data.part_restrictions[i], tol::cluster_eps)) {
      bool merged = false;
      for (auto& rp : raw) {
        if (std::abs(rp.t - cl.center) <= 1e-6 * (1.0 + std::abs(cl.center))) {
          rp.weighted += w * cl.multiplicity;
          merged = true;
          break;
        }
      }
      if (!merged) raw.push_back({cl.center, w * cl.multiplicity});
    }
  }
  std::sort(raw.begin(), raw.end(), [](const RawPoint& a, const RawPoint& b) {
    if (a.t.real() != b.t.real()) return a.t.real() < b.t.real();
    return a.t.imag() < b.t.imag();
  });
  for (const auto& rp : raw) {
    BranchPoint bp;
    bp.t = rp.t;
    bp.multiplicity = rp.weighted;
    bp.danger = measured_danger_radius(q_total, rp.t, rp.weighted);
    data.branch_points.push_back(bp);
  }

  double d_min = std::numeric_limits<double>::infinity();
  double diam = 0;
  for (std::size_t i = 0; i < data.branch_points.size(); ++i) {
    for (std::size_t j = i + 1; j < data.branch_points.size(); ++j) {
      const double d = std::abs(data.branch_points[i].t - data.branch_points[j].t);
      d_min = std::min(d_min, d);
      diam = std::max(diam, d);
    }
  }
  data.clearance = std::clamp(std::min(0.45 * d_min, 0.1 * diam + 0.05), 0.02, 0.25);
  for (auto& bp : data.branch_points) bp.avoid = std::max(1.1 * bp.danger, data.clearance);

  // health assessment
  cand.healthy = true;
  if (data.infinity_multiplicity != 0 || weighted_deficiency != 0) {
    cand.healthy = false;
    cand.defect = "restriction deficient at chart infinity";
  }
  for (std::size_t i = 0; i < data.branch_points.size() && cand.healthy; ++i)
    for (std::size_t j = i + 1; j < data.branch_points.size(); ++j)
      if (data.branch_points[i].avoid + data.branch_points[j].avoid >
          0.9 * std::abs(data.branch_points[i].t - data.branch_points[j].t)) {
        cand.healthy = false;
        cand.defect = "branch points closer than their numerical danger zones";
        break;
      }
  for (const auto& p : keep_tame) {
    if (!cand.healthy) break;
    const geom::ChartParam tp = geom::param_of_point(data.chart, p);
    if (tp.at_infinity) {
      cand.healthy = false;
      cand.defect = "required point at chart infinity";
      break;
    }
    for (const auto& bp : data.branch_points)
      if (std::abs(tp.t - bp.t) < 1.6 * bp.avoid) {
        cand.healthy = false;
        cand.defect = "required point inside a numerical danger margin";
        break;
      }
  }
  return cand;
}

} // namespace

ComponentCoverData component_data(const WeightedBranchDivisor& cover, const ProjectiveLine& line,
                                  std::uint64_t seed,
                                  const std::vector<HomogeneousPoint>& keep_tame) {
  // Seeded redraw ladder: high-multiplicity tangencies smear the restriction's
  // roots, and some charts park required targets too close to the smear. The
  // first healthy chart wins, deterministically per seed.
  std::optional<ChartCandidate> picked;
  std::string first_defect;
  for (std::uint64_t k = 0; k < 24 && !picked; ++k) {
    ChartCandidate cand = analyze_chart(cover, line, seed + 101 * k, keep_tame);
    if (cand.healthy)
      picked = std::move(cand);
    else if (first_defect.empty())
      first_defect = cand.defect;
  }
  if (!picked)
    fail(errc::degenerate_geometry, "no chart passes the health checks (" + first_defect + ")");
  ComponentCoverData data = std::move(picked->data);

  // Base point: seeded, comfortably off every branch point.
  double reach = 1.0;
  for (const auto& bp : data.branch_points)
    reach = std::max(reach, std::abs(bp.t) + 2.0 * bp.avoid);
  Rng rng(seed ^ 0xBA5EULL);
  bool placed = false;
  for (int attempt = 0; attempt < 512 && !placed; ++attempt) {
    const cplx cand = 1.5 * reach * rng.next_unit_disk();
    bool ok = true;
    for (const auto& bp : data.branch_points)
      if (std::abs(cand - bp.t) < 1.5 * bp.avoid) ok = false;
    if (ok) {
      data.base_param = cand;
      placed = true;
    }
  }
  if (!placed) fail(errc::degenerate_geometry, "no base point clears the branch set");

  const cplx w0 = data.restriction.eval(data.base_param);
  if (std::abs(w0) == 0.0) fail(errc::degenerate_geometry, "base point evaluates to zero");
  data.base_fiber = mth_roots_phase_ordered(w0, cover.m());
  return data;
}

// ---------------------------------------------------------------------------
// plan_path

static cplx segment_point(const PathSegment& s, double u) { // u in [0,1]
  if (!s.is_arc) return s.from + u * (s.to - s.from);
  return s.center + std::polar(s.radius, s.ang0 + u * (s.ang1 - s.ang0));
}

static double segment_length(const PathSegment& s) {
  if (!s.is_arc) return std::abs(s.to - s.from);
  return s.radius * std::abs(s.ang1 - s.ang0);
}

PathPlan plan_path(const ComponentCoverData& data, cplx t_target) {
  PathPlan plan;
  plan.clearance = data.clearance;
  plan.start = data.base_param;

  cplx target = t_target;
  // A target inside an avoidance disk (a tangency endpoint) is moved out to
  // the circle; callers that need the exact point verify the endpoint.
  for (const auto& bp : data.branch_points) {
    const double d = std::abs(target - bp.t);
    if (d < bp.avoid) {
      const cplx dir = d > 1e-14 ? (target - bp.t) / d : (data.base_param - bp.t) /
                                                             std::abs(data.base_param - bp.t);
      target = bp.t + bp.avoid * dir;
      break;
    }
  }
  plan.end = target;

  const cplx a = data.base_param;
  const cplx delta = target - a;
  const double len = std::abs(delta);
  if (len < 1e-15) return plan; // empty plan: target is the base

  const cplx u = delta / len;
  // obstacles whose avoidance circle the segment actually crosses, by entry order
  struct Cut {
    double s1, s2;
    cplx center;
  };
  std::vector<Cut> cuts;
  for (const auto& bp : data.branch_points) {
    const cplx rel = (bp.t - a) / u; // segment frame: path runs along [0, len]
    const double x = rel.real(), y = rel.imag();
    const double r = bp.avoid * (1.0 - 1e-12);
    if (std::abs(y) >= r) continue;
    const double half = std::sqrt(r * r - y * y);
    double s1 = x - half, s2 = x + half;
    if (s2 <= 0.0 || s1 >= len) continue;
    s1 = std::max(s1, 0.0);
    s2 = std::min(s2, len);
    if (s2 - s1 < 1e-15) continue;
    cuts.push_back({s1, s2, bp.t});
  }
  std::sort(cuts.begin(), cuts.end(), [](const Cut& l, const Cut& r) { return l.s1 < r.s1; });
  for (std::size_t i = 1; i < cuts.size(); ++i)
    if (cuts[i].s1 < cuts[i - 1].s2 + 1e-15)
      // two detour shadows overlap along this route; a reseeded chart or base
      // point resolves it upstream
      fail(errc::degenerate_geometry, "detour circles overlap along the planned route");

  double cursor = 0;
  for (const auto& cut : cuts) {
    const cplx entry = a + cut.s1 * u;
    const cplx exit = a + cut.s2 * u;
    if (cut.s1 > cursor + 1e-15) {
      PathSegment seg;
      seg.from = a + cursor * u;
      seg.to = entry;
      plan.segments.push_back(seg);
    }
    PathSegment arc;
    arc.is_arc = true;
    arc.center = cut.center;
    // both endpoints sit on (or numerically next to) the circle; detour ccw
    arc.ang0 = std::arg(entry - cut.center);
    arc.ang1 = std::arg(exit - cut.center);
    while (arc.ang1 <= arc.ang0) arc.ang1 += kTau;
    if (arc.ang1 - arc.ang0 > kTau - 1e-9) arc.ang1 -= kTau; // grazing contact
    // snap endpoints onto the exact radius
    arc.radius = 0.5 * (std::abs(entry - cut.center) + std::abs(exit - cut.center));
    plan.segments.push_back(arc);
    cursor = cut.s2;
  }
  if (len > cursor + 1e-15) {
    PathSegment seg;
    seg.from = a + cursor * u;
    seg.to = target;
    plan.segments.push_back(seg);
  }
  return plan;
}

// ---------------------------------------------------------------------------
// track

static PathPlan reversed(const PathPlan& plan) {
  PathPlan out;
  out.clearance = plan.clearance;
  out.start = plan.end;
  out.end = plan.start;
  for (auto it = plan.segments.rbegin(); it != plan.segments.rend(); ++it) {
    PathSegment s = *it;
    if (s.is_arc)
      std::swap(s.ang0, s.ang1);
    else
      std::swap(s.from, s.to);
    out.segments.push_back(s);
  }
  return out;
}

SheetTransport track(const ComponentCoverData& data, const PathPlan& plan,
                     const TrackOptions& opt) {
  const int m = data.m;
  const UnivariatePoly& q = data.restriction;

  SheetTransport out;
  out.values = data.base_fiber;
  out.target_param = plan.segments.empty() ? plan.start : plan.end;

  // the plan must chain without jumps: the state is continued, never reset
  {
    cplx cursor = plan.start;
    for (const auto& seg : plan.segments) {
      const cplx head = segment_point(seg, 0.0);
      if (std::abs(head - cursor) > 1e-7 * (1.0 + std::abs(cursor)))
        fail(errc::degenerate_geometry, "path plan is discontinuous");
      cursor = segment_point(seg, 1.0);
    }
  }

  std::vector<cplx> prev = out.values, next(out.values.size());
  double step = data.clearance / 4.0;
  int accept_streak = 0;

  for (const auto& seg : plan.segments) {
    const double len = segment_length(seg);
    if (len < 1e-15) continue;
    double s = 0;
    while (s < len) {
      const double h = std::min(step, len - s);
      const cplx t_new = segment_point(seg, (s + h) / len);
      const cplx q_new = q.eval(t_new);
      const double q_scale = 1.0 + std::abs(q_new);

      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        cplx z = prev[static_cast<std::size_t>(i)];
        bool converged = false;
        for (int it = 0; it < opt.corrector_iters; ++it) {
          cplx zp = z;
          cplx pw = 1.0;
          for (int k = 0; k < m - 1; ++k) pw *= zp;
          const cplx f = pw * zp - q_new;          // z^m - q
          const cplx df = static_cast<double>(m) * pw; // m z^(m-1)
          if (std::abs(df) < 1e-300) break;
          z = zp - f / df;
          if (std::abs(z * std::pow(z, m - 1) - q_new) <= opt.corrector_tol * q_scale) {
            converged = true;
            break;
          }
        }
        if (!converged) {
          ok = false;
          break;
        }
        next[static_cast<std::size_t>(i)] = z;
      }

      if (ok) {
        // each continued value must stay nearest its own predecessor
        for (int i = 0; i < m && ok; ++i) {
          const double d_self = std::abs(next[static_cast<std::size_t>(i)] -
                                         prev[static_cast<std::size_t>(i)]);
          for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            const double d_other = std::abs(next[static_cast<std::size_t>(i)] -
                                            prev[static_cast<std::size_t>(j)]);
            if (d_other < opt.separation_factor * d_self) {
              ok = false;
              break;
            }
          }
        }
      }

      if (!ok) {
        step *= 0.5;
        accept_streak = 0;
        if (step < opt.step_floor) fail(errc::step_underflow, "tracking step fell below the floor");
        continue;
      }

      double fiber_scale = 0;
      for (const cplx& v : next) fiber_scale = std::max(fiber_scale, std::abs(v));
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          if (std::abs(next[static_cast<std::size_t>(i)] - next[static_cast<std::size_t>(j)]) <
              1e-9 * fiber_scale)
            fail(errc::sheet_collision, "two sheets collided on an accepted step");

      double worst = 0;
      for (const cplx& v : next)
        worst = std::max(worst, std::abs(std::pow(v, m) - q_new) / q_scale);
      out.max_residual = std::max(out.max_residual, worst);

      prev = next;
      s += h;
      ++out.steps;
      if (++accept_streak >= 4) {
        step = std::min(step * 2.0, data.clearance / 4.0);
        accept_streak = 0;
      }
    }
  }

  out.values = prev;
  return out;
}

// ---------------------------------------------------------------------------
// local_monodromy

std::vector<int> local_monodromy(const ComponentCoverData& data, std::size_t branch_index,
                                 const TrackOptions& opt) {
  if (branch_index >= data.branch_points.size())
    fail(errc::bad_input, "branch index out of range");
  const BranchPoint& bp = data.branch_points[branch_index];
  const int m = data.m;
  // loop at clearance/2, pushed out when the numerical danger zone is wider
  const double rho = std::max(data.clearance / 2.0, 1.05 * bp.danger);
  const cplx dir = (data.base_param - bp.t) / std::abs(data.base_param - bp.t);
  const cplx w1 = bp.t + bp.avoid * dir; // on the avoidance circle
  const cplx w0 = bp.t + rho * dir;      // loop start

  // out to the clearance circle, radially in, once around counterclockwise,
  // radially out, and back the same way
  const PathPlan out_leg = plan_path(data, w1);
  PathPlan full = out_leg;
  PathSegment radial_in;
  radial_in.from = w1;
  radial_in.to = w0;
  full.segments.push_back(radial_in);
  PathSegment circle;
  circle.is_arc = true;
  circle.center = bp.t;
  circle.radius = rho;
  circle.ang0 = std::arg(w0 - bp.t);
  circle.ang1 = circle.ang0 + kTau;
  full.segments.push_back(circle);
  PathSegment radial_out;
  radial_out.from = w0;
  radial_out.to = w1;
  full.segments.push_back(radial_out);
  for (const auto& s : reversed(out_leg).segments) full.segments.push_back(s);
  full.end = full.start;

  const SheetTransport tr = track(data, full, opt);

  // match the returned values against the base fiber
  std::vector<int> perm(static_cast<std::size_t>(m), -1);
  double fiber_scale = 0;
  for (const cplx& v : data.base_fiber) fiber_scale = std::max(fiber_scale, std::abs(v));
  for (int i = 0; i < m; ++i) {
    double best = std::numeric_limits<double>::infinity();
    int arg = -1;
    for (int j = 0; j < m; ++j) {
      const double d = std::abs(tr.values[static_cast<std::size_t>(i)] -
                                data.base_fiber[static_cast<std::size_t>(j)]);
      if (d < best) {
        best = d;
        arg = j;
      }
    }
    if (best > 1e-6 * fiber_scale)
      fail(errc::monodromy_mismatch, "loop transport did not land on the base fiber");
    perm[static_cast<std::size_t>(i)] = arg;
  }

  // the tracked permutation must be the cyclic shift by I_P
  const int shift = ((bp.multiplicity % m) + m) % m;
  for (int i = 0; i < m; ++i)
    if (perm[static_cast<std::size_t>(i)] != (i + shift) % m)
      fail(errc::monodromy_mismatch, "tracked local monodromy is not the predicted cyclic shift");
  return perm;
}

// ---------------------------------------------------------------------------
// splitting_count

int splitting_count(const ComponentCoverData& data, const TrackOptions& opt) {
  const int m = data.m;
  long long g = m;
  for (const auto& bp : data.branch_points) g = std::gcd(g, static_cast<long long>(bp.multiplicity));
  if (data.infinity_multiplicity > 0)
    g = std::gcd(g, static_cast<long long>(data.infinity_multiplicity));

  // orbit count of the tracked permutations must agree
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (std::size_t bi = 0; bi < data.branch_points.size(); ++bi) {
    const std::vector<int> perm = local_monodromy(data, bi, opt);
    for (int i = 0; i < m; ++i) unite(i, perm[static_cast<std::size_t>(i)]);
  }
  if (data.infinity_multiplicity > 0) {
    const int shift = data.infinity_multiplicity % m;
    for (int i = 0; i < m; ++i) unite(i, (i + shift) % m);
  }
  int orbits = 0;
  for (int i = 0; i < m; ++i)
    if (find(i) == i) ++orbits;
  if (orbits != static_cast<int>(g))
    fail(errc::monodromy_mismatch, "gcd splitting count disagrees with tracked orbits");
  return static_cast<int>(g);
}

// ---------------------------------------------------------------------------
// offset_at

OffsetResult offset_at(const ComponentCoverData& data_i, const ComponentCoverData& data_j,
                       const WeightedBranchDivisor& cover, const HomogeneousPoint& P, double tol,
                       const TrackOptions& opt) {
  const int m = cover.m();
  if (cover.relative_value_at(P) < tol)
    fail(errc::intersection_on_branch_locus, "intersection point lies on the branch divisor");

  const HomogeneousPoint p_norm = P; // stored normalized by construction
  const cplx canonical = poly::evaluate(cover.defining_form(), p_norm);

  auto transported = [&](const ComponentCoverData& data) {
    const geom::ChartParam tp = geom::param_of_point(data.chart, P);
    if (tp.at_infinity) fail(errc::degenerate_geometry, "intersection at chart infinity");
    const PathPlan plan = plan_path(data, tp.t);
    if (std::abs(plan.end - tp.t) > 1e-9 * (1.0 + std::abs(tp.t)))
      fail(errc::degenerate_geometry, "intersection parameter sits inside a clearance disk");
    SheetTransport tr = track(data, plan, opt);
    // rescale from the chart trivialization to the canonical fiber over the
    // normalized representative: chart point = c * p_norm, so dividing the
    // sheet values by c^n turns them into m-th roots of F(p_norm)
    const geom::Triple rep = data.chart.at_raw(tp.t);
    std::size_t k = 0;
    for (std::size_t c = 1; c < 3; ++c)
      if (std::abs(p_norm[static_cast<int>(c)]) > std::abs(p_norm[static_cast<int>(k)])) k = c;
    const cplx scale = rep[k] / p_norm[static_cast<int>(k)];
    const cplx rescale = std::pow(scale, cover.n());
    for (cplx& v : tr.values) v /= rescale;
    return tr;
  };

  const SheetTransport ti = transported(data_i);
  const SheetTransport tj = transported(data_j);

  const double fiber_scale = std::pow(std::abs(canonical), 1.0 / m);

  OffsetResult res;
  res.fiber_value = canonical;
  res.max_residual = std::max(ti.max_residual, tj.max_residual);
  std::vector<int> match(static_cast<std::size_t>(m), -1);
  std::vector<char> taken(static_cast<std::size_t>(m), 0);
  for (int r = 0; r < m; ++r) {
    double best = std::numeric_limits<double>::infinity();
    double second = best;
    int arg = -1;
    for (int s = 0; s < m; ++s) {
      const double d = std::abs(ti.values[static_cast<std::size_t>(r)] -
                                tj.values[static_cast<std::size_t>(s)]);
      if (d < best) {
        second = best;
        best = d;
        arg = s;
      } else if (d < second) {
        second = d;
      }
    }
    if (best > 1e-6 * std::max(fiber_scale, 1e-30))
      fail(errc::matching_ambiguous, "transports do not land on a common fiber");
    if (second < 10.0 * std::max(best, tol * fiber_scale))
      fail(errc::matching_ambiguous, "two fiber values are too close to match sheets");
    if (arg < 0 || taken[static_cast<std::size_t>(arg)])
      fail(errc::matching_ambiguous, "sheet matching is not a bijection");
    taken[static_cast<std::size_t>(arg)] = 1;
    match[static_cast<std::size_t>(r)] = arg;
    res.matching.push_back({r, arg});
  }

  // matchings of two regular m-gons with equal values are index shifts
  const int a = match[0];
  for (int r = 0; r < m; ++r)
    if (match[static_cast<std::size_t>(r)] != (r + a) % m)
      fail(errc::matching_ambiguous, "sheet matching is not a cyclic shift");
  res.a_P = a;
  return res;
}

} // namespace covercount::mono
