#include "covercount/connectivity.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace covercount::conn {

using geom::HomogeneousPoint;
using geom::ProjectiveLine;

namespace {

// one off-B pairwise intersection, in canonical (i < j) order
struct Crossing {
  std::size_t i, j;
  HomogeneousPoint point;
  bool on_branch;
};

std::vector<Crossing> crossings_of(const Arrangement& arr, double on_branch_tol) {
  std::vector<Crossing> out;
  for (std::size_t i = 0; i < arr.components.size(); ++i) {
    for (std::size_t j = i + 1; j < arr.components.size(); ++j) {
      const HomogeneousPoint P = geom::intersect(arr.components[i], arr.components[j]);
      const bool on_b = arr.cover.relative_value_at(P) < on_branch_tol;
      out.push_back({i, j, P, on_b});
    }
  }
  return out;
}

std::string point_str(const HomogeneousPoint& p) {
  std::ostringstream os;
  os << "(" << p[0].real() << "+" << p[0].imag() << "i : " << p[1].real() << "+" << p[1].imag()
     << "i : " << p[2].real() << "+" << p[2].imag() << "i)";
  return os.str();
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
  int classes() {
    int n = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      if (find(i) == i) ++n;
    return n;
  }
};

} // namespace

void check_preconditions(const Arrangement& arr, const EngineOptions& opt) {
  if (arr.components.empty()) fail(errc::config_invalid, "arrangement has no components");
  for (std::size_t i = 0; i < arr.components.size(); ++i)
    for (std::size_t j = i + 1; j < arr.components.size(); ++j)
      if (arr.components[i].projectively_equal(arr.components[j]))
        fail(errc::config_invalid, "arrangement components must be pairwise distinct");

  // non-containment: a line inside a part restricts to the zero polynomial
  // (zero measured against the form's own coefficient scale)
  for (std::size_t i = 0; i < arr.components.size(); ++i) {
    const auto chart = geom::chart_of(arr.components[i], opt.seed + 7 * i);
    for (const auto& part : arr.cover.parts())
      if (poly::restrict_to_line(part.form, chart).coefficient_scale() <=
          1e-12 * part.form.coefficient_scale())
        fail(errc::component_inside_branch, "component " + std::to_string(i) +
                                                " is contained in the branch divisor");
  }

  // C minus B connected, using only off-B intersections
  Dsu dsu(arr.components.size());
  for (const auto& cr : crossings_of(arr, opt.on_branch_tol))
    if (!cr.on_branch) dsu.unite(static_cast<int>(cr.i), static_cast<int>(cr.j));
  if (dsu.classes() != 1)
    fail(errc::curve_minus_branch_disconnected,
         "components are not connected through off-branch intersections");
}

static GluingGraph gluing_graph_attempt(const Arrangement& arr, const EngineOptions& opt) {
  const int m = arr.cover.m();
  const std::size_t k = arr.components.size();

  GluingGraph g;
  g.m = m;
  g.component_count = k;

  const std::vector<Crossing> crossings = crossings_of(arr, opt.on_branch_tol);
  for (const auto& cr : crossings)
    if (cr.on_branch)
      g.warnings.push_back("intersection of components " + std::to_string(cr.i) + "," +
                           std::to_string(cr.j) + " at " + point_str(cr.point) +
                           " lies on B; no gluing edge");

  // per-component cover data, in parallel; each job fills its own slot
  std::vector<std::optional<mono::ComponentCoverData>> data(k);
  std::vector<std::exception_ptr> job_errors(k);
  par::parallel_for(k, opt.mode, [&](std::size_t i) {
    try {
      std::vector<HomogeneousPoint> keep;
      for (const auto& cr : crossings)
        if (!cr.on_branch && (cr.i == i || cr.j == i)) keep.push_back(cr.point);
      data[i] = mono::component_data(arr.cover, arr.components[i],
                                     opt.seed * 1000003ULL + 17ULL * i, keep);
    } catch (...) {
      job_errors[i] = std::current_exception();
    }
  });
  for (std::size_t i = 0; i < k; ++i)
    if (job_errors[i]) std::rethrow_exception(job_errors[i]);

  // local monodromies and splitting counts (tracked, self-validating)
  g.intra.resize(k);
  g.splitting.assign(k, 0);
  par::parallel_for(k, opt.mode, [&](std::size_t i) {
    try {
      for (std::size_t b = 0; b < data[i]->branch_points.size(); ++b)
        g.intra[i].push_back(mono::local_monodromy(*data[i], b, opt.track));
      g.splitting[i] = mono::splitting_count(*data[i], opt.track);
    } catch (...) {
      job_errors[i] = std::current_exception();
    }
  });
  for (std::size_t i = 0; i < k; ++i)
    if (job_errors[i]) std::rethrow_exception(job_errors[i]);

  // inter edges, one job per off-B crossing
  std::vector<std::size_t> live;
  for (std::size_t c = 0; c < crossings.size(); ++c)
    if (!crossings[c].on_branch) live.push_back(c);
  std::vector<std::optional<InterEdge>> edges(live.size());
  std::vector<std::exception_ptr> edge_errors(live.size());
  std::vector<double> edge_residuals(live.size(), 0.0);
  par::parallel_for(live.size(), opt.mode, [&](std::size_t e) {
    const Crossing& cr = crossings[live[e]];
    try {
      const mono::OffsetResult off = mono::offset_at(*data[cr.i], *data[cr.j], arr.cover,
                                                     cr.point, opt.on_branch_tol, opt.track);
      InterEdge edge;
      edge.comp_i = cr.i;
      edge.comp_j = cr.j;
      edge.point = cr.point.coords();
      edge.a_P = off.a_P;
      edge.matching = off.matching;
      edges[e] = std::move(edge);
      edge_residuals[e] = off.max_residual;
    } catch (...) {
      edge_errors[e] = std::current_exception();
    }
  });
  for (std::size_t e = 0; e < live.size(); ++e) {
    if (edge_errors[e]) std::rethrow_exception(edge_errors[e]);
    g.inter.push_back(*edges[e]);
    g.max_track_residual = std::max(g.max_track_residual, edge_residuals[e]);
  }
  return g;
}

GluingGraph gluing_graph(const Arrangement& arr, const EngineOptions& opt) {
  check_preconditions(arr, opt);
  // A chart draw can still land in a numerically hostile spot; retries walk a
  // deterministic seed ladder, so reports stay reproducible per seed.
  const auto retryable = [](errc c) {
    return c == errc::step_underflow || c == errc::sheet_collision ||
           c == errc::monodromy_mismatch || c == errc::matching_ambiguous ||
           c == errc::degenerate_geometry || c == errc::root_finding_diverged;
  };
  EngineOptions attempt_opt = opt;
  for (int attempt = 0;; ++attempt) {
    try {
      return gluing_graph_attempt(arr, attempt_opt);
    } catch (const Error& e) {
      if (attempt >= 5 || !retryable(e.code())) throw;
      attempt_opt.seed = opt.seed + 7919ULL * static_cast<std::uint64_t>(attempt + 1);
    }
  }
}

namespace {

int count_classes(const GluingGraph& g) {
  const int m = g.m;
  Dsu dsu(g.component_count * static_cast<std::size_t>(m));
  const auto node = [m](std::size_t comp, int sheet) {
    return static_cast<int>(comp) * m + sheet;
  };
  for (std::size_t i = 0; i < g.component_count; ++i)
    for (const auto& perm : g.intra[i])
      for (int r = 0; r < m; ++r) dsu.unite(node(i, r), node(i, perm[static_cast<std::size_t>(r)]));
  for (const auto& e : g.inter)
    for (const auto& [r, s] : e.matching) dsu.unite(node(e.comp_i, r), node(e.comp_j, s));
  return dsu.classes();
}

// Gauge-fixed offset-subgroup generators: potentials over a canonical
// spanning tree of the component graph; every edge then contributes
// phi(i) + a_P - phi(j) (tree edges contribute 0, extra edges the cycle sums,
// repeated intersections of one pair the pairwise differences).
std::vector<int> offset_generators(const GluingGraph& g) {
  const int m = g.m;
  const std::size_t k = g.component_count;
  std::vector<int> phi(k, 0);
  std::vector<char> reached(k, 0);
  std::vector<char> edge_in_tree(g.inter.size(), 0);
  reached[0] = 1;
  bool grew = true;
  while (grew) { // edges are canonically ordered, so the tree is canonical
    grew = false;
    for (std::size_t e = 0; e < g.inter.size(); ++e) {
      const auto& edge = g.inter[e];
      if (reached[edge.comp_i] && !reached[edge.comp_j]) {
        phi[edge.comp_j] = (phi[edge.comp_i] + edge.a_P) % m;
        reached[edge.comp_j] = 1;
        edge_in_tree[e] = 1;
        grew = true;
      } else if (reached[edge.comp_j] && !reached[edge.comp_i]) {
        phi[edge.comp_i] = ((phi[edge.comp_j] - edge.a_P) % m + m) % m;
        reached[edge.comp_i] = 1;
        edge_in_tree[e] = 1;
        grew = true;
      }
    }
  }
  std::vector<int> gens;
  for (std::size_t e = 0; e < g.inter.size(); ++e) {
    if (edge_in_tree[e]) continue;
    const auto& edge = g.inter[e];
    gens.push_back(((phi[edge.comp_i] + edge.a_P - phi[edge.comp_j]) % m + m) % m);
  }
  return gens;
}

ConnectedNumberReport build_report(const Arrangement& arr, const EngineOptions& opt) {
  const GluingGraph g = gluing_graph(arr, opt);
  ConnectedNumberReport rep;
  rep.m = g.m;
  rep.warnings = g.warnings;
  rep.max_track_residual = g.max_track_residual;
  rep.per_component_splitting = g.splitting;
  for (const auto& e : g.inter) rep.offsets.push_back({e.point, e.comp_i, e.comp_j, e.a_P});

  rep.c = count_classes(g);

  rep.offset_method_applied =
      std::all_of(g.splitting.begin(), g.splitting.end(), [&](int s) { return s == g.m; });
  if (rep.offset_method_applied) {
    rep.cycle_sums = offset_generators(g);
    long long acc = g.m;
    for (int v : rep.cycle_sums) acc = std::gcd(acc, static_cast<long long>(v));
    rep.c_via_offsets = static_cast<int>(acc);
    rep.method_agreement = (rep.c_via_offsets == rep.c);
  } else {
    rep.method_agreement = true; // only one method ran
  }
  return rep;
}

} // namespace

ConnectedNumberReport connected_number(const Arrangement& arr, const EngineOptions& opt) {
  return build_report(arr, opt);
}

int connected_number_via_offsets(const Arrangement& arr, const EngineOptions& opt) {
  const GluingGraph g = gluing_graph(arr, opt);
  for (int s : g.splitting)
    if (s != g.m)
      fail(errc::not_completely_split,
           "offset-subgroup count requires every component to split completely");
  const std::vector<int> gens = offset_generators(g);
  long long acc = g.m;
  for (int v : gens) acc = std::gcd(acc, static_cast<long long>(v));
  return static_cast<int>(acc);
}

ConnectedNumberReport cross_check(const Arrangement& arr, const EngineOptions& opt) {
  ConnectedNumberReport rep = build_report(arr, opt);
  if (!rep.method_agreement) {
    std::ostringstream os;
    os << "union-find c = " << rep.c << " but offset subgroup gives " << rep.c_via_offsets
       << "; offsets:";
    for (const auto& o : rep.offsets)
      os << " (" << o.comp_i << "," << o.comp_j << ")->" << o.a_P;
    os << "; cycle sums:";
    for (int v : rep.cycle_sums) os << " " << v;
    fail(errc::method_disagreement, os.str());
  }
  return rep;
}

} // namespace covercount::conn
