#include "fmf/scenarios.hpp"

#include <sstream>

namespace fmf {

namespace {

void check_flip(const FlipParams& p) {
    if (p.k < 1 || p.l < 1) throw input_error("flip: k and l must be >= 1");
}

void check_flop(const FlopParams& p) {
    if (p.n < 2) throw input_error("flop: n must be >= 2");
}

} // namespace

TorTable flip_tor_table(const FlipParams& p) {
    check_flip(p);
    const MultiProjSpace center_product{{p.l, p.l, p.k}};

    TorTable t{.higher = {},
               .tor0 = {.center_correction = SplitObject{center_product},
                        .small_diagonal_quotient = SplitObject{MultiProjSpace{{p.l, p.k}}}}};

    for (int i = 1; i <= p.l - 1; ++i) {
        SplitObject tor_i{center_product};
        tor_i.add({0, -p.l, -p.k + i}, 0, binomial(p.l - 1, i));
        t.higher.emplace(i, std::move(tor_i));
    }
    t.tor0.center_correction.add({0, -p.l, -p.k}, 0, 1);
    t.tor0.small_diagonal_quotient.add({-p.l, -p.k}, 0, 1);
    return t;
}

ContributionGrid flip_grid(const FlipParams& p) {
    const TorTable tor = flip_tor_table(p);

    // Both tor_0 correction terms carry degree -k on the P^k factor, which
    // is acyclic; verify rather than assume.
    if (!pushforward_split(tor.tor0.center_correction, {2}).empty())
        throw internal_error("flip_grid: center correction term does not push to zero");
    if (!pushforward_split(tor.tor0.small_diagonal_quotient, {1}).empty())
        throw internal_error("flip_grid: small-diagonal quotient does not push to zero");

    ContributionGrid grid(p.k + p.l + 1);
    // Surviving tor_0 part: the blowdown pushes the diagonal canonical
    // sheaf to the diagonal of X x X in degree zero.
    grid.add(make_contribution(0, 0, SupportLabel::DiagonalX, Rank::exact(1)));

    for (const auto& [i, tor_i] : tor.higher) {
        const SplitObject pushed = pushforward_split(tor_i, {2});
        for (const auto& s : pushed.summands()) {
            grid.add(make_contribution(i, s.shift, SupportLabel::CenterProduct,
                                       Rank::exact(s.mult), s.deg));
        }
    }
    return grid;
}

Verdict flip_verdict(const FlipParams& p) { return assemble_verdict(flip_grid(p)); }

FlopTorShapes flop_tor_shapes(const FlopParams& p) {
    check_flop(p);
    FlopTorShapes shapes{.higher = {},
                         .quotient_fiber_dim = p.n - 1,
                         .quotient_fiber_degree = -(p.n - 1),
                         .obstruction_fiber_dim = p.n - 2,
                         .obstruction_fiber_degree = -(p.n - 1)};
    // Twisted tor_i restricted to general P^{n-2} fibers of the
    // center-product projection, i = 1 .. n-2.
    for (int i = 1; i <= p.n - 2; ++i) {
        shapes.higher.push_back({.tor_index = i,
                                 .fiber_dim = p.n - 2,
                                 .fiber_degree = -(p.n - 1) + i,
                                 .mult = binomial(p.n - 2, i)});
    }
    return shapes;
}

namespace {

// A fiber shape as a one-factor split object, pushed along its only factor.
SplitObject fiber_bundle(int fiber_dim, int fiber_degree, Int mult) {
    SplitObject obj{MultiProjSpace{{fiber_dim}}};
    obj.add({fiber_degree}, 0, std::move(mult));
    return obj;
}

} // namespace

ContributionGrid flop_grid(const FlopParams& p) {
    const FlopTorShapes shapes = flop_tor_shapes(p);

    for (const auto& h : shapes.higher) {
        if (!pushforward_split(fiber_bundle(h.fiber_dim, h.fiber_degree, h.mult), {0}).empty()) {
            std::ostringstream msg;
            msg << "flop_grid: higher tor_" << h.tor_index << " does not push to zero";
            throw internal_error(msg.str());
        }
    }
    if (!pushforward_split(
             fiber_bundle(shapes.quotient_fiber_dim, shapes.quotient_fiber_degree, 1), {0})
             .empty())
        throw internal_error("flop_grid: tor_0 quotient term does not push to zero");

    ContributionGrid grid(2 * p.n);
    grid.add(make_contribution(0, 0, SupportLabel::DiagonalX, Rank::exact(1)));

    // The surviving summand lives over the center product; its rank is
    // known only on a dense open set of P x P.
    for (const auto& [j, rank] :
         generic_fiber_pushforward(shapes.obstruction_fiber_dim, shapes.obstruction_fiber_degree)) {
        (void)rank;
        grid.add(make_contribution(0, j, SupportLabel::CenterProduct, Rank::generic()));
    }
    return grid;
}

Verdict flop_verdict(const FlopParams& p) { return assemble_verdict(flop_grid(p)); }

PolarizationType::PolarizationType(int g, std::vector<Int> divisors)
    : g_(g), divisors_(std::move(divisors)) {
    if (g_ < 1) throw input_error("PolarizationType: g must be >= 1");
    if (divisors_.size() != static_cast<std::size_t>(g_))
        throw input_error("PolarizationType: expected one elementary divisor per dimension");
    for (const Int& d : divisors_) {
        if (d < 1) throw input_error("PolarizationType: elementary divisors must be positive");
    }
}

Int PolarizationType::h0() const {
    Int prod = 1;
    for (const Int& d : divisors_) prod *= d;
    return prod;
}

CohomologyTable abelian_cohomology(const PolarizationType& t, long long m) {
    if (m == 0) throw input_error("abelian_cohomology: m must be nonzero");
    const Int value = int_pow(Int(m < 0 ? -m : m), static_cast<unsigned>(t.g())) * t.h0();
    CohomologyTable out;
    out.add(m > 0 ? 0 : t.g(), value);
    return out;
}

Int isogeny_degree(const PolarizationType& t) { return t.h0() * t.h0(); }

Verdict PoincareReport::verdict() const {
    if (!pass) throw internal_error("PoincareReport: count mismatch, engine inconsistency");
    return Verdict::fully_faithful();
}

PoincareReport poincare_ff_check(const PolarizationType& t) {
    PoincareReport report;
    report.expected_degree = t.g();
    report.kunneth_table = CohomologyTable::convolve(
        CohomologyTable::convolve(abelian_cohomology(t, 2), abelian_cohomology(t, 1)),
        abelian_cohomology(t, -1));
    report.isogeny = isogeny_degree(t);
    report.expected_quotient = abelian_cohomology(t, 2).at(0);

    if (!report.kunneth_table.concentrated_in(t.g())) {
        report.pass = false;
        return report;
    }
    const Int top = report.kunneth_table.at(t.g());
    if (top % report.isogeny != 0)
        throw internal_error("poincare_ff_check: isogeny degree does not divide the count");
    report.quotient = top / report.isogeny;
    report.transform_table.add(t.g(), report.quotient);
    report.pass = report.quotient == report.expected_quotient;
    return report;
}

SupportLocusTable poincare_support_loci(int g) {
    if (g < 1) throw input_error("poincare_support_loci: g must be >= 1");
    SupportLocusTable table(g);
    for (int i = 0; i <= g; ++i) table.set_dimension(i, 0);
    return table;
}

GvScenario poincare_gv_scenario(const PolarizationType& t) {
    const PoincareReport report = poincare_ff_check(t);
    return GvScenario{.support_loci = poincare_support_loci(t.g()),
                      .transform_table = report.transform_table,
                      .dim_y = t.g(),
                      .expected_top = report.expected_quotient};
}

} // namespace fmf
