#pragma once

#include <string>
#include <vector>

#include "covercount/monodromy.hpp"
#include "covercount/parallel.hpp"

namespace covercount::conn {

// The curve C = sum of lines, together with the cover it is examined under.
struct Arrangement {
  mono::WeightedBranchDivisor cover;
  std::vector<geom::ProjectiveLine> components;
  std::vector<std::string> labels; // optional, parallel to components
};

struct EngineOptions {
  std::uint64_t seed = 0;
  double on_branch_tol = tol::on_branch_eps;
  mono::TrackOptions track;
  par::ExecMode mode = par::ExecMode::Serial;
};

// Sheet identification over one off-B intersection point.
struct InterEdge {
  std::size_t comp_i = 0, comp_j = 0; // comp_i < comp_j
  geom::Triple point{};
  int a_P = 0;                             // base label r of i matches r + a_P of j
  std::vector<std::pair<int, int>> matching;
};

// Nodes are (component, sheet 0..m-1); intra edges are the tracked local
// monodromy permutations, inter edges come from offset matchings.
struct GluingGraph {
  int m = 0;
  std::size_t component_count = 0;
  std::vector<std::vector<std::vector<int>>> intra; // [comp][branch point] -> permutation
  std::vector<int> splitting;                       // per component
  std::vector<InterEdge> inter;
  std::vector<std::string> warnings; // e.g. skipped on-B intersections
  double max_track_residual = 0;
};

struct OffsetRecord {
  geom::Triple point{};
  std::size_t comp_i = 0, comp_j = 0;
  int a_P = 0;
};

struct ConnectedNumberReport {
  int c = 0;
  int m = 0;
  std::vector<int> per_component_splitting;
  std::vector<OffsetRecord> offsets;
  std::vector<int> cycle_sums; // offset-subgroup generators, gauge-fixed
  bool offset_method_applied = false;
  int c_via_offsets = 0; // 0 when the offset method does not apply
  bool method_agreement = false;
  std::vector<std::string> warnings;
  double max_track_residual = 0;
};

// Definition preconditions: no component inside B, distinct components, and
// C minus B connected through off-B intersection points.
void check_preconditions(const Arrangement& arr, const EngineOptions& opt = {});

GluingGraph gluing_graph(const Arrangement& arr, const EngineOptions& opt = {});

// Union-find count of connected components of the cover over C minus B.
ConnectedNumberReport connected_number(const Arrangement& arr, const EngineOptions& opt = {});

// Offset-subgroup count: requires every component completely split. Returns
// gcd(m, gauge-fixed cycle sums and repeated-intersection differences).
int connected_number_via_offsets(const Arrangement& arr, const EngineOptions& opt = {});

// Runs both methods and insists they agree (MethodDisagreement otherwise).
ConnectedNumberReport cross_check(const Arrangement& arr, const EngineOptions& opt = {});

} // namespace covercount::conn
