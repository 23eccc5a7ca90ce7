#pragma once

#include "fmf/cohomology.hpp"

namespace fmf {

/// H^i(P^n, O(d)) computed from the explicit Cech complex on the standard
/// (n+1)-chart cover, with ranks obtained by exact integer elimination over
/// Laurent-monomial bases.  Independent of line_bundle_cohomology.
///
/// Desk-scale bounds: n <= 3 and |d| <= 6; anything else raises
/// unsupported_range.
CohomologyTable cech_oracle(int n, int d);

} // namespace fmf
