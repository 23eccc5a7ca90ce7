#pragma once

#include <map>
#include <optional>

#include "fmf/cohomology.hpp"

namespace fmf {

/// Dimensions of cohomological support loci over a parameter space.
/// An absent or EMPTY index means the locus is empty; dimension 0 means a
/// nonempty finite set.  The two are distinct: the codimension bound is
/// vacuous for empty loci and binding for finite ones.
class SupportLocusTable {
public:
    explicit SupportLocusTable(int ambient_dim);

    void set_dimension(int index, int dim);
    void set_empty(int index);

    int ambient_dim() const { return ambient_dim_; }
    /// Recorded value: nullopt when absent or explicitly EMPTY.
    std::optional<int> locus_dimension(int index) const;
    const std::map<int, std::optional<int>>& entries() const { return entries_; }

    friend bool operator==(const SupportLocusTable&, const SupportLocusTable&) = default;

private:
    int ambient_dim_;
    std::map<int, std::optional<int>> entries_;
};

struct GvCheckResult {
    bool pass = false;
    std::optional<int> first_violation;
};

/// Generic-vanishing shape: loci empty in negative index, codimension at
/// least the index otherwise.  On failure reports the smallest violating
/// index.
GvCheckResult geometric_gv_check(const SupportLocusTable& table);

/// Weak index theorem with index dim_y: the transform is a single sheaf
/// concentrated there.  The zero table fails; the expected transform is a
/// sheaf on the diagonal, never zero.
bool wit_check(const CohomologyTable& transform_table, int dim_y);

/// High-ample-power test: zero away from dim_y and the stated value there.
bool condition_c_check(const CohomologyTable& h_table, int dim_y, const Int& expected_top);

/// Hom(Phi(k_x), Phi(k_x)) data on and off the diagonal.
struct HomDiagonalCondition {
    Int diag_hom_dim = 1;
    bool offdiag_vanishes = true;

    friend bool operator==(const HomDiagonalCondition&, const HomDiagonalCondition&) = default;
};

enum class SimplicityClause {
    NegativeSupport, // (a) W^i empty for i < 0
    DimensionBound,  // (b) dim W^i <= 2 dim X - i
    HomDiagonal,     // (c) Hom = k on the diagonal, 0 off it
};

const char* simplicity_clause_name(SimplicityClause clause);

struct StrongSimplicityResult {
    bool pass = false;
    std::optional<SimplicityClause> violated;
    std::optional<int> violating_index;
};

/// Strong-simplicity criterion over W^i dimension data; ambient must be
/// 2 dim X.  Reports the first violated clause.
StrongSimplicityResult strong_simplicity_check(const SupportLocusTable& w_tables, int dim_x,
                                               const HomDiagonalCondition& hom);

enum class BoClassification { Empty, ContainedInDiagonal };

struct BondalOrlovReduction {
    SupportLocusTable table;
    StrongSimplicityResult result;
};

/// Bondal-Orlov hypothesis shape: W^i contained in the diagonal for
/// 0 <= i <= dim X and empty elsewhere.  Containment is a classification
/// flag, not geometry; the reduction bounds each diagonal locus by dim X
/// and delegates.  Clause (b) then holds automatically.
BondalOrlovReduction bondal_orlov_reduce(const std::map<int, BoClassification>& classification,
                                         int dim_x, const HomDiagonalCondition& hom);

/// One scenario's worth of data for all three equivalent checks.
struct GvScenario {
    SupportLocusTable support_loci;
    CohomologyTable transform_table;
    int dim_y = 0;
    Int expected_top = 1;
};

struct AgreementReport {
    GvCheckResult gv;
    bool wit = false;
    bool c = false;

    /// The three checks are equivalent by theorem; disagreement on real
    /// scenario data means corrupted inputs or an engine bug.
    bool agree() const { return gv.pass == wit && wit == c; }
    bool all_pass() const { return gv.pass && wit && c; }
};

AgreementReport gv_equivalence_harness(const GvScenario& scenario);

} // namespace fmf
