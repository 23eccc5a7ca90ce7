#pragma once

#include <map>
#include <vector>

#include "fmf/ints.hpp"

namespace fmf {

/// Componentwise twist on a product of projective spaces.
using MultiDegree = std::vector<int>;

/// A finite product of projective spaces P^{n_1} x ... x P^{n_r}.
/// r = 0 is a point.
class MultiProjSpace {
public:
    MultiProjSpace() = default;
    explicit MultiProjSpace(std::vector<int> factors);

    static MultiProjSpace point() { return MultiProjSpace{}; }

    const std::vector<int>& factors() const { return factors_; }
    std::size_t factor_count() const { return factors_.size(); }
    int total_dimension() const;

    friend bool operator==(const MultiProjSpace&, const MultiProjSpace&) = default;

private:
    std::vector<int> factors_;
};

/// Graded dimension table: cohomological degree -> exact dimension.
/// Absent keys mean zero; stored values are strictly positive.
class CohomologyTable {
public:
    CohomologyTable() = default;

    Int at(int degree) const;
    void add(int degree, const Int& dim);
    bool empty() const { return dims_.empty(); }

    const std::map<int, Int>& dims() const { return dims_; }

    /// Degrees shifted by s (a summand placed in cohomological degree s
    /// contributes its H^j at key j + s).
    CohomologyTable shifted(int s) const;
    CohomologyTable scaled(const Int& factor) const;

    Int alternating_sum() const;

    /// Graded tensor product: out[i+j] += a[i] * b[j].
    static CohomologyTable convolve(const CohomologyTable& a, const CohomologyTable& b);

    /// Nonzero in exactly one degree?
    bool concentrated_in(int degree) const;

    friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;

private:
    std::map<int, Int> dims_;
};

/// Bott formula on P^n: H^0 for d >= 0, H^n for d <= -n-1, nothing between.
/// n = 0 is a point, where O(d) is trivial for every d.
CohomologyTable line_bundle_cohomology(int n, long long d);

/// Kunneth convolution of the per-factor tables.
CohomologyTable box_cohomology(const MultiProjSpace& space, const MultiDegree& deg);

/// Componentwise -d_j - n_j - 1; an involution.
MultiDegree serre_dual_degree(const MultiProjSpace& space, const MultiDegree& deg);

/// Product over factors of the binomial polynomial C(n_j + d_j, n_j).
Int euler_characteristic(const MultiProjSpace& space, const MultiDegree& deg);

} // namespace fmf
