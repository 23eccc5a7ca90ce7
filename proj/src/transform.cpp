#include "fmf/transform.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace fmf {

const char* support_label_name(SupportLabel label) {
    switch (label) {
        case SupportLabel::DiagonalX: return "DiagonalX";
        case SupportLabel::CenterProduct: return "CenterProduct";
        case SupportLabel::Ambient: return "Ambient";
        case SupportLabel::Zero: return "Zero";
    }
    throw internal_error("support_label_name: unknown label");
}

Rank Rank::exact(Int value) {
    if (value <= 0) throw input_error("Rank: exact rank must be positive");
    Rank r;
    r.value_ = std::move(value);
    return r;
}

const Int& Rank::value() const {
    if (is_generic()) throw input_error("Rank: generic rank has no exact value");
    return *value_;
}

Contribution make_contribution(int tor_index, int push_degree, SupportLabel support, Rank rank,
                               std::optional<MultiDegree> bundle) {
    if (tor_index < 0) throw input_error("Contribution: tor index must be nonnegative");
    if (push_degree < 0) throw input_error("Contribution: push degree must be nonnegative");
    Contribution c;
    c.tor_index = tor_index;
    c.push_degree = push_degree;
    c.support = support;
    c.rank = std::move(rank);
    c.bundle = std::move(bundle);
    return c;
}

void ContributionGrid::add(Contribution c) {
    for (const auto& e : entries_) {
        if (e.position() == c.position() && e.support == c.support && e.bundle == c.bundle)
            throw input_error("ContributionGrid: duplicate (p, q, support, bundle) entry");
    }
    entries_.push_back(std::move(c));
}

void SplitObject::add(MultiDegree deg, int shift, Int mult) {
    if (deg.size() != space_.factor_count())
        throw input_error("SplitObject: degree length does not match space");
    if (mult < 0) throw input_error("SplitObject: negative multiplicity");
    if (mult == 0) return;
    for (auto& s : summands_) {
        if (s.deg == deg && s.shift == shift) {
            s.mult += mult;
            return;
        }
    }
    summands_.push_back(Summand{std::move(deg), shift, std::move(mult)});
}

CohomologyTable SplitObject::total_cohomology() const {
    CohomologyTable total;
    for (const auto& s : summands_) {
        const CohomologyTable piece = box_cohomology(space_, s.deg).shifted(s.shift).scaled(s.mult);
        for (const auto& [i, v] : piece.dims()) total.add(i, v);
    }
    return total;
}

SplitObject pushforward_split(const SplitObject& obj, const std::set<std::size_t>& factor_set) {
    if (factor_set.empty()) throw input_error("pushforward_split: empty factor set");
    for (std::size_t f : factor_set) {
        if (f >= obj.space().factor_count())
            throw input_error("pushforward_split: factor index out of range");
    }

    std::vector<int> pushed_factors;
    std::vector<int> kept_factors;
    for (std::size_t j = 0; j < obj.space().factor_count(); ++j) {
        (factor_set.count(j) ? pushed_factors : kept_factors).push_back(obj.space().factors()[j]);
    }
    const MultiProjSpace pushed_space{pushed_factors};

    SplitObject out{MultiProjSpace{kept_factors}};
    for (const auto& s : obj.summands()) {
        MultiDegree pushed_deg;
        MultiDegree kept_deg;
        for (std::size_t j = 0; j < s.deg.size(); ++j)
            (factor_set.count(j) ? pushed_deg : kept_deg).push_back(s.deg[j]);

        const CohomologyTable fiberwise = box_cohomology(pushed_space, pushed_deg);
        for (const auto& [j, h] : fiberwise.dims()) out.add(kept_deg, s.shift + j, s.mult * h);
    }
    return out;
}

std::vector<std::pair<int, Int>> generic_fiber_pushforward(int fiber_dim, int fiber_degree) {
    if (fiber_dim < 0) throw input_error("generic_fiber_pushforward: fiber dimension < 0");
    const CohomologyTable fiber = line_bundle_cohomology(fiber_dim, fiber_degree);
    std::vector<std::pair<int, Int>> out;
    for (const auto& [j, h] : fiber.dims()) out.emplace_back(j, h);
    return out;
}

DegenerationCertificate degeneration_certificate(const ContributionGrid& grid) {
    std::set<GridPosition> positions;
    for (const auto& e : grid.entries()) positions.insert(e.position());

    DegenerationCertificate cert;
    for (const auto& from : positions) {
        for (const auto& to : positions) {
            const int r = to.p - from.p;
            if (r >= 2 && to.q == from.q - r + 1) cert.unblockable.emplace_back(from, to);
        }
    }
    cert.certified = cert.unblockable.empty();
    return cert;
}

Verdict Verdict::fully_faithful() { return Verdict(Status::FullyFaithful); }

Verdict Verdict::not_fully_faithful(Contribution witness) {
    Verdict v(Status::NotFullyFaithful);
    v.witness_ = std::move(witness);
    return v;
}

Verdict Verdict::indeterminate(std::vector<GridPosition> surviving) {
    if (surviving.empty()) throw internal_error("Verdict: indeterminate without positions");
    Verdict v(Status::Indeterminate);
    v.surviving_ = std::move(surviving);
    return v;
}

const Contribution& Verdict::witness() const {
    if (!witness_) throw input_error("Verdict: no witness on this status");
    return *witness_;
}

const std::vector<GridPosition>& Verdict::surviving() const {
    if (status_ != Status::Indeterminate)
        throw input_error("Verdict: surviving positions only on Indeterminate");
    return surviving_;
}

const char* verdict_status_name(Verdict::Status status) {
    switch (status) {
        case Verdict::Status::FullyFaithful: return "FullyFaithful";
        case Verdict::Status::NotFullyFaithful: return "NotFullyFaithful";
        case Verdict::Status::Indeterminate: return "Indeterminate";
    }
    throw internal_error("verdict_status_name: unknown status");
}

Verdict assemble_verdict(const ContributionGrid& grid) {
    const auto is_target_slot = [](const Contribution& e) {
        return e.support == SupportLabel::DiagonalX && e.position() == GridPosition{0, 0};
    };
    if (std::none_of(grid.entries().begin(), grid.entries().end(), is_target_slot))
        throw input_error("assemble_verdict: grid has no DiagonalX entry at (0, 0)");

    const DegenerationCertificate cert = degeneration_certificate(grid);
    if (!cert.certified) {
        std::set<GridPosition> involved;
        for (const auto& [from, to] : cert.unblockable) {
            involved.insert(from);
            involved.insert(to);
        }
        return Verdict::indeterminate({involved.begin(), involved.end()});
    }

    // The target slot must hold a definite rank-one entry; a generic rank
    // there neither certifies the identity shape nor witnesses an excess.
    std::vector<Contribution> extras;
    bool target_consumed = false;
    bool target_generic = false;
    for (const auto& e : grid.entries()) {
        if (!target_consumed && is_target_slot(e)) {
            target_consumed = true;
            if (e.rank.is_generic()) {
                target_generic = true;
            } else if (e.rank.value() != 1) {
                extras.push_back(e);
            }
            continue;
        }
        extras.push_back(e);
    }

    if (extras.empty()) {
        if (target_generic) return Verdict::indeterminate({GridPosition{0, 0}});
        return Verdict::fully_faithful();
    }

    // Witness: the surviving excess closest to the target degree.
    const auto witness_order = [](const Contribution& a, const Contribution& b) {
        const auto key = [](const Contribution& c) {
            return std::tuple(std::abs(c.total_degree()), c.tor_index, c.push_degree,
                              static_cast<int>(c.support));
        };
        return key(a) < key(b);
    };
    return Verdict::not_fully_faithful(
        *std::min_element(extras.begin(), extras.end(), witness_order));
}

} // namespace fmf
