#include "isolat/error.hpp"

namespace isolat {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::zero_vector: return "ZeroVector";
    case Errc::duplicate_vector: return "DuplicateVector";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::not_generating: return "NotGenerating";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::empty_set: return "EmptySet";
    case Errc::not_disjoint: return "NotDisjoint";
    case Errc::size_not_in_table: return "SizeNotInTable";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::infeasible_enumeration: return "InfeasibleEnumeration";
    case Errc::leading_coefficient_mismatch: return "LeadingCoefficientMismatch";
    case Errc::degenerate_dimension: return "DegenerateDimension";
    case Errc::degenerate_hull: return "DegenerateHull";
    case Errc::assertion_failed: return "AssertionFailed";
    case Errc::invalid_input: return "InvalidInput";
  }
  return "UnknownError";
}

}  // namespace isolat
