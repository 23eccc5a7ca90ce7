#pragma once

#include <map>

#include "fmf/criteria.hpp"
#include "fmf/transform.hpp"

namespace fmf {

/// Standard flip: centers P^l in X and P^k in Y, both with normal bundle
/// O(-1) summands, dim X = dim Y = k + l + 1.
struct FlipParams {
    int k = 1;
    int l = 1;
};

/// Mukai flop: center P^n in X with cotangent normal bundle, dim X = 2n.
struct FlopParams {
    int n = 2;
};

/// Elementary divisors of an ample line bundle on a g-dimensional abelian
/// variety; h^0 is their product and the associated isogeny has degree
/// (product)^2.  The divisibility chain is not required: only the product
/// enters any computed quantity.
class PolarizationType {
public:
    PolarizationType(int g, std::vector<Int> divisors);

    int g() const { return g_; }
    const std::vector<Int>& divisors() const { return divisors_; }
    Int h0() const;

private:
    int g_;
    std::vector<Int> divisors_;
};

/// Tor data of the flip kernel pairing, twisted by the relative canonical:
/// higher tor_i is a split bundle on P^l x P^l x P^k, and tor_0 extends
/// the canonical diagonal part by two correction terms whose pushforward
/// to X x X must vanish.
struct TorZeroDescriptor {
    /// O(0, -l, -k) on the center product P^l x P^l x P^k.
    SplitObject center_correction;
    /// O(-l, -k) on the small diagonal product P^l x P^k.
    SplitObject small_diagonal_quotient;
};

struct TorTable {
    /// i -> O(0, -l, -k+i) with multiplicity C(l-1, i), for 1 <= i <= l-1.
    /// Empty when l = 1.
    std::map<int, SplitObject> higher;
    TorZeroDescriptor tor0;
};

TorTable flip_tor_table(const FlipParams& p);

/// E2 grid of the flip: the diagonal target entry plus one CenterProduct
/// entry per nonvanishing pushforward of a higher tor.  The tor_0
/// correction terms are re-verified to push to zero, never assumed.
ContributionGrid flip_grid(const FlipParams& p);

Verdict flip_verdict(const FlipParams& p);

/// Fiber-degree shapes of the flop tor computation: each higher tor and
/// the tor_0 quotient restrict on fibers to line bundles in the acyclic
/// range, and the one surviving summand restricts on general fibers of
/// the center-product projection to O(-(n-1)) on P^{n-2}.
struct FlopTorShapes {
    struct HigherTor {
        int tor_index;
        int fiber_dim;
        int fiber_degree;
        Int mult;
    };
    std::vector<HigherTor> higher;
    int quotient_fiber_dim;
    int quotient_fiber_degree;
    int obstruction_fiber_dim;
    int obstruction_fiber_degree;
};

FlopTorShapes flop_tor_shapes(const FlopParams& p);

/// E2 grid of the flop: the diagonal target entry plus a generic-rank
/// CenterProduct entry from the general-fiber pushforward.  The encoded
/// vanishing shapes are verified via the Bott formula before emitting;
/// a failure is an internal error, never silently ignored.
ContributionGrid flop_grid(const FlopParams& p);

Verdict flop_verdict(const FlopParams& p);

/// Index theorem on a g-dimensional abelian variety: L^m has cohomology
/// |m|^g * prod(d_i) in degree 0 (m > 0) or degree g (m < 0).  m = 0 is
/// out of scope here; the trivial bundle is handled by the support loci.
CohomologyTable abelian_cohomology(const PolarizationType& t, long long m);

/// Degree of the polarization isogeny: h^0(L)^2.
Int isogeny_degree(const PolarizationType& t);

/// Poincare-kernel dimension count.  The Kunneth table of
/// L^2 box L box L^{-1} must concentrate in degree g; dividing by the
/// isogeny degree must be exact and reproduce h^0(L^2).
struct PoincareReport {
    CohomologyTable kunneth_table;
    int expected_degree = 0; // g
    Int isogeny;
    Int quotient;
    Int expected_quotient; // h^0(L^2)
    bool pass = false;
    /// Downstream transform table {g -> h^0(L^2)} (set when concentrated).
    CohomologyTable transform_table;

    /// FullyFaithful on pass; a failing count is an engine inconsistency.
    Verdict verdict() const;
};

PoincareReport poincare_ff_check(const PolarizationType& t);

/// V^i(O_X) over Pic^0 of a g-dimensional abelian variety: the single
/// point 0 for every 0 <= i <= g (the trivial bundle has h^i = C(g, i) and
/// every nontrivial degree-zero bundle is cohomologically trivial).
SupportLocusTable poincare_support_loci(int g);

/// Bundle the Poincare scenario for the three-way equivalence harness.
GvScenario poincare_gv_scenario(const PolarizationType& t);

} // namespace fmf
