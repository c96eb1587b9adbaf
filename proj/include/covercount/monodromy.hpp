#pragma once

#include <utility>
#include <vector>

#include "covercount/geometry.hpp"
#include "covercount/polynomials.hpp"

namespace covercount::mono {

// Branch data B = sum_i weight_i * part_i for a cyclic cover of degree m,
// with F = prod part^weight the defining form of the weighted divisor.
class WeightedBranchDivisor {
public:
  struct Part {
    poly::TrivariateForm form;
    int weight = 1;
  };

  WeightedBranchDivisor(int m, std::vector<Part> parts);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  const std::vector<Part>& parts() const noexcept { return parts_; }
  const poly::TrivariateForm& defining_form() const noexcept { return F_; }

  // |F| at the normalized representative, relative to the coefficient scale;
  // the engine's "is this point on B" measure
  double relative_value_at(const geom::HomogeneousPoint& p) const;

private:
  int m_;
  int n_;
  std::vector<Part> parts_;
  poly::TrivariateForm F_;
};

struct BranchPoint {
  cplx t{};             // chart parameter of the branch point
  int multiplicity = 0; // I_P = sum over parts of weight * local multiplicity
  double danger = 0;    // radius inside which q is numerically unreliable
  double avoid = 0;     // detour radius used by path plans; >= danger
};

// Everything the tracker needs about the cover restricted to one line: the
// chart, the restriction q (so the fiber over t is the m-th roots of q(t)),
// branch points with weighted multiplicities, and a base fiber ordered by
// phase. The base label r is the sheet identity used everywhere downstream.
struct ComponentCoverData {
  explicit ComponentCoverData(geom::LineChart c) : chart(std::move(c)) {}

  geom::LineChart chart;
  poly::UnivariatePoly restriction;          // prod of part restrictions^weight
  std::vector<poly::UnivariatePoly> part_restrictions;
  std::vector<BranchPoint> branch_points;
  int infinity_multiplicity = 0; // weighted deficiency; 0 after chart redraws
  int m = 0;
  double clearance = 0;
  cplx base_param{};
  std::vector<cplx> base_fiber; // m values, phase-ordered
};

// Piecewise path in the t-plane: straight runs plus circular detour arcs.
struct PathSegment {
  bool is_arc = false;
  cplx from{}, to{};  // straight segment endpoints
  cplx center{};      // arc data
  double radius = 0;
  double ang0 = 0, ang1 = 0; // traversed linearly; ang1 > ang0 means ccw
};

struct PathPlan {
  std::vector<PathSegment> segments;
  double clearance = 0;
  cplx start{}, end{};
};

struct SheetTransport {
  cplx target_param{};
  std::vector<cplx> values; // index-aligned with base_fiber
  double max_residual = 0;  // max |s^m - q(t)|/(1+|q(t)|) over accepted steps
  std::size_t steps = 0;
};

struct TrackOptions {
  double corrector_tol = 1e-12; // |s^m - q| <= tol*(1+|q|)
  int corrector_iters = 8;
  double separation_factor = 3.0;
  double step_floor = 1e-12;
};

// Sheet matching between two components over a common point: base label r of
// the first component pairs with label r + a_P (mod m) of the second.
struct OffsetResult {
  int a_P = 0;
  std::vector<std::pair<int, int>> matching;
  cplx fiber_value{};       // the canonical F(P) value both fibers are roots of
  double max_residual = 0;  // worst accepted-step residual over both transports
};

std::vector<cplx> mth_roots_phase_ordered(cplx w, int m);

ComponentCoverData component_data(const WeightedBranchDivisor& cover,
                                  const geom::ProjectiveLine& line, std::uint64_t seed,
                                  const std::vector<geom::HomogeneousPoint>& keep_tame = {});

PathPlan plan_path(const ComponentCoverData& data, cplx t_target);

SheetTransport track(const ComponentCoverData& data, const PathPlan& plan,
                     const TrackOptions& opt = {});

// Permutation of base labels induced by a counterclockwise loop around the
// given branch point (tracked out, around, and back). Must equal the cyclic
// shift r -> r + I_P (mod m); a mismatch throws MonodromyMismatch.
std::vector<int> local_monodromy(const ComponentCoverData& data, std::size_t branch_index,
                                 const TrackOptions& opt = {});

// Number of connected pieces of the cover over this line minus the branch
// points: gcd of m with all weighted local multiplicities (including the
// chart's infinity when deficient), cross-checked against the orbit count of
// the tracked local monodromies.
int splitting_count(const ComponentCoverData& data, const TrackOptions& opt = {});

// Transport both base fibers to the common intersection point P (off B),
// rescale to the canonical fiber over the normalized representative of P,
// and match. tol controls the on-branch test and the matching ambiguity
// threshold.
OffsetResult offset_at(const ComponentCoverData& data_i, const ComponentCoverData& data_j,
                       const WeightedBranchDivisor& cover, const geom::HomogeneousPoint& P,
                       double tol = tol::on_branch_eps, const TrackOptions& opt = {});

} // namespace covercount::mono
