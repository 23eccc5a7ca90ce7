#pragma once

#include <compare>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "fmf/cohomology.hpp"

namespace fmf {

/// Where an E2 contribution lives.  DiagonalX is the diagonal of X x X
/// (carrying the canonical bundle of the target shape); CenterProduct is
/// the product of the surgery centers.
enum class SupportLabel { DiagonalX, CenterProduct, Ambient, Zero };

const char* support_label_name(SupportLabel label);

/// Exact positive rank, or the generic-fiber marker: nonvanishing on a
/// dense open subset of the support, with no claim over special loci.
class Rank {
public:
    static Rank exact(Int value);
    static Rank generic() { return Rank(); }

    bool is_generic() const { return !value_.has_value(); }
    const Int& value() const;

    friend bool operator==(const Rank&, const Rank&) = default;

private:
    Rank() = default;
    std::optional<Int> value_;
};

struct GridPosition {
    int p = 0;
    int q = 0;
    friend auto operator<=>(const GridPosition&, const GridPosition&) = default;
};

/// One nonzero E2 entry R^p(tor_i) at position (p, q) with q = -i.
struct Contribution {
    int tor_index = 0;
    int push_degree = 0;
    SupportLabel support = SupportLabel::Zero;
    Rank rank = Rank::exact(1);
    std::optional<MultiDegree> bundle;

    GridPosition position() const { return {push_degree, -tor_index}; }
    int total_degree() const { return push_degree - tor_index; }

    friend bool operator==(const Contribution&, const Contribution&) = default;
};

Contribution make_contribution(int tor_index, int push_degree, SupportLabel support, Rank rank,
                               std::optional<MultiDegree> bundle = std::nullopt);

/// All nonzero E2 entries of one scenario, normalized so the target entry
/// of a fully faithful kernel sits at (0, 0) with support DiagonalX.
class ContributionGrid {
public:
    explicit ContributionGrid(int dim_target) : dim_target_(dim_target) {}

    void add(Contribution c);
    const std::vector<Contribution>& entries() const { return entries_; }
    int dim_target() const { return dim_target_; }

    friend bool operator==(const ContributionGrid&, const ContributionGrid&) = default;

private:
    int dim_target_;
    std::vector<Contribution> entries_;
};

/// Formal finite sum of line-bundle summands with shift and multiplicity
/// on a product of projective spaces.  Zero summands are dropped and
/// summands with equal (degree, shift) merge.
class SplitObject {
public:
    struct Summand {
        MultiDegree deg;
        int shift = 0;
        Int mult = 1;
        friend bool operator==(const Summand&, const Summand&) = default;
    };

    explicit SplitObject(MultiProjSpace space) : space_(std::move(space)) {}

    void add(MultiDegree deg, int shift, Int mult);
    const MultiProjSpace& space() const { return space_; }
    const std::vector<Summand>& summands() const { return summands_; }
    bool empty() const { return summands_.empty(); }

    /// Graded global-sections table: sum over summands of the Kunneth
    /// table of the degree, shifted and scaled.
    CohomologyTable total_cohomology() const;

    friend bool operator==(const SplitObject&, const SplitObject&) = default;

private:
    MultiProjSpace space_;
    std::vector<Summand> summands_;
};

/// Push a split object along the chosen (zero-based) factor indices.
/// Exact for split objects: each summand contributes, for every j with
/// H^j nonzero on the pushed factors, a summand on the remaining factors
/// with shift raised by j and multiplicity scaled by h^j.
SplitObject pushforward_split(const SplitObject& obj, const std::set<std::size_t>& factor_set);

/// Nonzero cohomology of O(e) on a generic fiber P^m, as (degree, rank)
/// pairs.  Nonvanishing on a dense open set suffices to witness failure;
/// jumping over special loci is not modeled.
std::vector<std::pair<int, Int>> generic_fiber_pushforward(int fiber_dim, int fiber_degree);

/// Positional degeneration certificate: certified when no differential of
/// any page could connect two nonzero entries, i.e. no pair occupies
/// (p, q) and (p + r, q - r + 1) for any r >= 2.  Certified grids equal
/// their own abutment.
struct DegenerationCertificate {
    bool certified = false;
    /// Position pairs a possible differential could still connect.
    std::vector<std::pair<GridPosition, GridPosition>> unblockable;
};

DegenerationCertificate degeneration_certificate(const ContributionGrid& grid);

/// Outcome of comparing a certified grid with the identity-kernel shape.
class Verdict {
public:
    enum class Status { FullyFaithful, NotFullyFaithful, Indeterminate };

    static Verdict fully_faithful();
    static Verdict not_fully_faithful(Contribution witness);
    static Verdict indeterminate(std::vector<GridPosition> surviving);

    Status status() const { return status_; }
    bool is_fully_faithful() const { return status_ == Status::FullyFaithful; }

    /// NotFullyFaithful only: the offending entry and its total degree.
    const Contribution& witness() const;
    int witness_total_degree() const { return witness().total_degree(); }

    /// Indeterminate only: positions where degeneration was not certified.
    const std::vector<GridPosition>& surviving() const;

    friend bool operator==(const Verdict&, const Verdict&) = default;

private:
    explicit Verdict(Status status) : status_(status) {}
    Status status_;
    std::optional<Contribution> witness_;
    std::vector<GridPosition> surviving_;
};

const char* verdict_status_name(Verdict::Status status);

/// Compare the surviving entries with the target shape: exactly one
/// DiagonalX entry of rank one at (0, 0).  An uncertified grid yields
/// Indeterminate, never a guess; otherwise any extra entry refutes full
/// faithfulness and the one closest to total degree zero is the witness.
Verdict assemble_verdict(const ContributionGrid& grid);

} // namespace fmf
