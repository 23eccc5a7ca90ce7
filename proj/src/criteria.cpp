#include "fmf/criteria.hpp"

#include <sstream>

namespace fmf {

SupportLocusTable::SupportLocusTable(int ambient_dim) : ambient_dim_(ambient_dim) {
    if (ambient_dim < 0) throw input_error("SupportLocusTable: ambient dimension < 0");
}

void SupportLocusTable::set_dimension(int index, int dim) {
    if (dim < 0 || dim > ambient_dim_) {
        std::ostringstream msg;
        msg << "SupportLocusTable: dimension " << dim << " outside [0, " << ambient_dim_ << "]";
        throw input_error(msg.str());
    }
    entries_[index] = dim;
}

void SupportLocusTable::set_empty(int index) { entries_[index] = std::nullopt; }

std::optional<int> SupportLocusTable::locus_dimension(int index) const {
    auto it = entries_.find(index);
    return it == entries_.end() ? std::nullopt : it->second;
}

GvCheckResult geometric_gv_check(const SupportLocusTable& table) {
    for (const auto& [i, dim] : table.entries()) {
        if (!dim.has_value()) continue; // empty locus: both conditions vacuous
        if (i < 0) return {false, i};
        if (table.ambient_dim() - *dim < i) return {false, i};
    }
    return {true, std::nullopt};
}

bool wit_check(const CohomologyTable& transform_table, int dim_y) {
    return transform_table.concentrated_in(dim_y);
}

bool condition_c_check(const CohomologyTable& h_table, int dim_y, const Int& expected_top) {
    if (expected_top <= 0) throw input_error("condition_c_check: expected top value must be positive");
    return h_table.concentrated_in(dim_y) && h_table.at(dim_y) == expected_top;
}

const char* simplicity_clause_name(SimplicityClause clause) {
    switch (clause) {
        case SimplicityClause::NegativeSupport: return "a";
        case SimplicityClause::DimensionBound: return "b";
        case SimplicityClause::HomDiagonal: return "c";
    }
    throw internal_error("simplicity_clause_name: unknown clause");
}

StrongSimplicityResult strong_simplicity_check(const SupportLocusTable& w_tables, int dim_x,
                                               const HomDiagonalCondition& hom) {
    if (dim_x < 0) throw input_error("strong_simplicity_check: dim X < 0");
    if (w_tables.ambient_dim() != 2 * dim_x)
        throw input_error("strong_simplicity_check: ambient dimension must be 2 dim X");
    if (hom.diag_hom_dim < 1)
        throw input_error("strong_simplicity_check: diagonal Hom dimension must be >= 1");

    for (const auto& [i, dim] : w_tables.entries()) {
        if (!dim.has_value()) continue;
        if (i < 0) return {false, SimplicityClause::NegativeSupport, i};
    }
    for (const auto& [i, dim] : w_tables.entries()) {
        if (!dim.has_value() || i < 0) continue;
        if (*dim > 2 * dim_x - i) return {false, SimplicityClause::DimensionBound, i};
    }
    if (hom.diag_hom_dim != 1 || !hom.offdiag_vanishes)
        return {false, SimplicityClause::HomDiagonal, std::nullopt};
    return {true, std::nullopt, std::nullopt};
}

BondalOrlovReduction bondal_orlov_reduce(const std::map<int, BoClassification>& classification,
                                         int dim_x, const HomDiagonalCondition& hom) {
    if (dim_x < 0) throw input_error("bondal_orlov_reduce: dim X < 0");
    SupportLocusTable table(2 * dim_x);
    for (const auto& [i, cls] : classification) {
        if (cls == BoClassification::Empty) {
            table.set_empty(i);
            continue;
        }
        if (i < 0 || i > dim_x) {
            std::ostringstream msg;
            msg << "bondal_orlov_reduce: nonempty locus at index " << i << " outside [0, "
                << dim_x << "]";
            throw input_error(msg.str());
        }
        // contained in the diagonal: dimension at most dim X
        table.set_dimension(i, dim_x);
    }
    return {table, strong_simplicity_check(table, dim_x, hom)};
}

AgreementReport gv_equivalence_harness(const GvScenario& scenario) {
    if (scenario.transform_table.empty())
        throw input_error("gv_equivalence_harness: scenario transform table is empty");
    AgreementReport report;
    report.gv = geometric_gv_check(scenario.support_loci);
    report.wit = wit_check(scenario.transform_table, scenario.dim_y);
    report.c = condition_c_check(scenario.transform_table, scenario.dim_y, scenario.expected_top);
    return report;
}

} // namespace fmf
