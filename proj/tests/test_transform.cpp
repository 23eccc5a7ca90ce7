#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fmf/transform.hpp"
#include "test_oracles.hpp"

using namespace fmf;

namespace {

SplitObject random_split_object(std::mt19937& rng) {
    std::uniform_int_distribution<int> arity(1, 3), dim(0, 4), deg(-6, 6), shift(-2, 2),
        nsummands(0, 3), mult(1, 5);
    std::vector<int> factors;
    for (int j = 0, r = arity(rng); j < r; ++j) factors.push_back(dim(rng));
    SplitObject obj{MultiProjSpace{factors}};
    for (int s = 0, count = nsummands(rng); s < count; ++s) {
        MultiDegree d;
        for (std::size_t j = 0; j < factors.size(); ++j) d.push_back(deg(rng));
        obj.add(d, shift(rng), mult(rng));
    }
    return obj;
}

std::set<std::size_t> random_factor_subset(std::mt19937& rng, std::size_t count,
                                           std::size_t max_size) {
    std::uniform_int_distribution<std::size_t> pick(0, count - 1);
    std::set<std::size_t> subset{pick(rng)};
    while (subset.size() < max_size && subset.size() < count) {
        if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) break;
        subset.insert(pick(rng));
    }
    return subset;
}

ContributionGrid grid_at(std::initializer_list<GridPosition> positions, int dim_target = 3) {
    ContributionGrid grid(dim_target);
    for (const auto& pos : positions) {
        REQUIRE(pos.q <= 0);
        grid.add(make_contribution(-pos.q, pos.p,
                                   pos == GridPosition{0, 0} ? SupportLabel::DiagonalX
                                                             : SupportLabel::CenterProduct,
                                   Rank::exact(1)));
    }
    return grid;
}

} // namespace

TEST_CASE("split objects merge equal summands and drop zero multiplicities") {
    SplitObject obj{MultiProjSpace{{1, 1}}};
    obj.add({2, -2}, 0, 1);
    obj.add({2, -2}, 0, 2);
    obj.add({0, 0}, 1, 0);
    REQUIRE(obj.summands().size() == 1);
    CHECK(obj.summands()[0].mult == 3);
    CHECK_THROWS_AS(obj.add({1}, 0, 1), input_error);
}

TEST_CASE("pushforward of split objects along one factor") {
    SUBCASE("surviving sections keep the shift") {
        SplitObject obj{MultiProjSpace{{2, 2, 1}}};
        obj.add({0, -2, 0}, 0, 1);
        const SplitObject pushed = pushforward_split(obj, {2});
        CHECK(pushed.space() == MultiProjSpace{{2, 2}});
        REQUIRE(pushed.summands().size() == 1);
        CHECK(pushed.summands()[0] == SplitObject::Summand{{0, -2}, 0, 1});
    }
    SUBCASE("acyclic twists vanish") {
        SplitObject obj{MultiProjSpace{{2, 2, 2}}};
        obj.add({0, -2, -1}, 0, 1);
        CHECK(pushforward_split(obj, {2}).empty());
    }
    SUBCASE("top degree raises the shift") {
        SplitObject obj{MultiProjSpace{{1, 1}}};
        obj.add({2, -2}, 0, 1);
        const SplitObject pushed = pushforward_split(obj, {1});
        REQUIRE(pushed.summands().size() == 1);
        CHECK(pushed.summands()[0] == SplitObject::Summand{{2}, 1, 1});
    }
}

TEST_CASE("pushforward rejects bad factor sets") {
    SplitObject obj{MultiProjSpace{{1, 1}}};
    obj.add({0, 0}, 0, 1);
    CHECK_THROWS_AS(pushforward_split(obj, {}), input_error);
    CHECK_THROWS_AS(pushforward_split(obj, {2}), input_error);
}

TEST_CASE("pushforward preserves total cohomology") {
    std::mt19937 rng(20240815);
    for (int trial = 0; trial < 500; ++trial) {
        const SplitObject obj = random_split_object(rng);
        const auto subset = random_factor_subset(rng, obj.space().factor_count(),
                                                 obj.space().factor_count());
        CHECK(pushforward_split(obj, subset).total_cohomology() == obj.total_cohomology());
    }
}

TEST_CASE("pushforward composes over disjoint factor sets") {
    std::mt19937 rng(20240816);
    std::uniform_int_distribution<int> dim(0, 4), deg(-6, 6), mult(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        SplitObject obj{MultiProjSpace{{dim(rng), dim(rng), dim(rng)}}};
        for (int s = 0; s < 2; ++s) obj.add({deg(rng), deg(rng), deg(rng)}, 0, mult(rng));

        // push factors {0} then {1}; compare with {0, 1} at once
        const SplitObject stepwise =
            pushforward_split(pushforward_split(obj, {0}), {0}); // factor 1 renumbers to 0
        const SplitObject joint = pushforward_split(obj, {0, 1});
        CHECK(stepwise == joint);
    }
}

TEST_CASE("generic fiber pushforward lists the nonzero degrees") {
    using Pairs = std::vector<std::pair<int, Int>>;
    CHECK(generic_fiber_pushforward(1, -2) == Pairs{{1, 1}});
    CHECK(generic_fiber_pushforward(0, -1) == Pairs{{0, 1}});
    CHECK(generic_fiber_pushforward(2, -3) == Pairs{{2, 1}});
    CHECK(generic_fiber_pushforward(1, -1).empty());
}

TEST_CASE("degeneration certificate is a positional check") {
    CHECK(degeneration_certificate(grid_at({{0, 0}, {0, -1}})).certified);
    const auto blocked = degeneration_certificate(grid_at({{0, 0}, {2, -1}}));
    CHECK_FALSE(blocked.certified);
    REQUIRE(blocked.unblockable.size() == 1);
    CHECK(blocked.unblockable[0] ==
          std::pair<GridPosition, GridPosition>({0, 0}, {2, -1}));
    CHECK(degeneration_certificate(grid_at({{0, 0}, {0, -1}, {0, -2}})).certified);
}

TEST_CASE("certificates are monotone under entry removal") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coord(0, 4);
    for (int trial = 0; trial < 300; ++trial) {
        ContributionGrid grid(3);
        std::set<GridPosition> seen;
        for (int e = 0; e < 5; ++e) {
            const GridPosition pos{coord(rng), -coord(rng)};
            if (!seen.insert(pos).second) continue;
            grid.add(make_contribution(-pos.q, pos.p, SupportLabel::CenterProduct, Rank::exact(1)));
        }
        if (!degeneration_certificate(grid).certified) continue;
        ContributionGrid smaller(3);
        for (std::size_t j = 0; j + 1 < grid.entries().size(); ++j) smaller.add(grid.entries()[j]);
        CHECK(degeneration_certificate(smaller).certified);
    }
}

TEST_CASE("verdict assembly recognizes the identity-kernel shape") {
    ContributionGrid identity(3);
    identity.add(make_contribution(0, 0, SupportLabel::DiagonalX, Rank::exact(1)));
    CHECK(assemble_verdict(identity) == Verdict::fully_faithful());
}

TEST_CASE("verdict assembly flags the extra entry closest to degree zero") {
    ContributionGrid grid(4);
    grid.add(make_contribution(0, 0, SupportLabel::DiagonalX, Rank::exact(1)));
    grid.add(make_contribution(1, 0, SupportLabel::CenterProduct, Rank::exact(1)));
    const Verdict v = assemble_verdict(grid);
    REQUIRE(v.status() == Verdict::Status::NotFullyFaithful);
    CHECK(v.witness_total_degree() == -1);
    CHECK(v.witness().support == SupportLabel::CenterProduct);
}

TEST_CASE("generic ranks witness failure but never the identity shape") {
    ContributionGrid grid(8);
    grid.add(make_contribution(0, 0, SupportLabel::DiagonalX, Rank::exact(1)));
    grid.add(make_contribution(0, 2, SupportLabel::CenterProduct, Rank::generic()));
    const Verdict v = assemble_verdict(grid);
    REQUIRE(v.status() == Verdict::Status::NotFullyFaithful);
    CHECK(v.witness_total_degree() == 2);
    CHECK(v.witness().rank.is_generic());

    ContributionGrid generic_target(3);
    generic_target.add(make_contribution(0, 0, SupportLabel::DiagonalX, Rank::generic()));
    const Verdict undecided = assemble_verdict(generic_target);
    REQUIRE(undecided.status() == Verdict::Status::Indeterminate);
    CHECK(undecided.surviving() == std::vector<GridPosition>{{0, 0}});
}

TEST_CASE("uncertified grids stay indeterminate") {
    ContributionGrid grid(3);
    grid.add(make_contribution(0, 0, SupportLabel::DiagonalX, Rank::exact(1)));
    grid.add(make_contribution(1, 2, SupportLabel::CenterProduct, Rank::exact(1)));
    const Verdict v = assemble_verdict(grid);
    REQUIRE(v.status() == Verdict::Status::Indeterminate);
    CHECK(v.surviving() == std::vector<GridPosition>{{0, 0}, {2, -1}});
}

TEST_CASE("grids without the diagonal target slot are rejected") {
    ContributionGrid grid(3);
    grid.add(make_contribution(0, 1, SupportLabel::CenterProduct, Rank::exact(1)));
    CHECK_THROWS_AS(assemble_verdict(grid), input_error);
}

TEST_CASE("contribution invariants are enforced") {
    CHECK_THROWS_AS(Rank::exact(0), input_error);
    CHECK_THROWS_AS(Rank::exact(-2), input_error);
    CHECK_THROWS_AS(Rank::generic().value(), input_error);
    CHECK_THROWS_AS(make_contribution(-1, 0, SupportLabel::DiagonalX, Rank::exact(1)),
                    input_error);
    CHECK_THROWS_AS(make_contribution(0, -1, SupportLabel::DiagonalX, Rank::exact(1)),
                    input_error);
}

TEST_CASE("grids refuse duplicate entries") {
    ContributionGrid grid(3);
    grid.add(make_contribution(0, 0, SupportLabel::DiagonalX, Rank::exact(1)));
    CHECK_THROWS_AS(grid.add(make_contribution(0, 0, SupportLabel::DiagonalX, Rank::exact(2))),
                    input_error);
}

TEST_CASE("fully faithful verdicts require every entry at total degree zero") {
    std::mt19937 rng(20240818);
    std::uniform_int_distribution<int> coord(0, 3), extra(0, 2);
    for (int trial = 0; trial < 300; ++trial) {
        ContributionGrid grid(3);
        grid.add(make_contribution(0, 0, SupportLabel::DiagonalX, Rank::exact(1)));
        std::set<GridPosition> seen{{0, 0}};
        bool nonzero_degree = false;
        for (int e = 0, count = extra(rng); e < count; ++e) {
            const GridPosition pos{coord(rng), -coord(rng)};
            if (!seen.insert(pos).second) continue;
            nonzero_degree = nonzero_degree || pos.p + pos.q != 0;
            grid.add(make_contribution(-pos.q, pos.p, SupportLabel::CenterProduct, Rank::exact(1)));
        }
        const Verdict v = assemble_verdict(grid);
        if (nonzero_degree) CHECK_FALSE(v.is_fully_faithful());
        if (v.is_fully_faithful()) CHECK(grid.entries().size() == 1);
    }
}
