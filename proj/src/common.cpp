#include "covercount/common.hpp"

namespace covercount {

const char* errc_name(errc c) {
  switch (c) {
    case errc::coincident_points: return "CoincidentPoints";
    case errc::coincident_lines: return "CoincidentLines";
    case errc::point_off_line: return "PointOffLine";
    case errc::root_finding_diverged: return "RootFindingDiverged";
    case errc::config_invalid: return "ConfigInvalid";
    case errc::not_a_divisor: return "NotADivisor";
    case errc::numerical_rank_ambiguous: return "NumericalRankAmbiguous";
    case errc::line_inside_branch_divisor: return "LineInsideBranchDivisor";
    case errc::degenerate_geometry: return "DegenerateGeometry";
    case errc::step_underflow: return "StepUnderflow";
    case errc::sheet_collision: return "SheetCollision";
    case errc::monodromy_mismatch: return "MonodromyMismatch";
    case errc::intersection_on_branch_locus: return "IntersectionOnBranchLocus";
    case errc::matching_ambiguous: return "MatchingAmbiguous";
    case errc::component_inside_branch: return "ComponentInsideBranch";
    case errc::curve_minus_branch_disconnected: return "CurveMinusBranchDisconnected";
    case errc::not_completely_split: return "NotCompletelySplit";
    case errc::method_disagreement: return "MethodDisagreement";
    case errc::bad_input: return "BadInput";
  }
  return "UnknownError";
}

} // namespace covercount
