#include "fmf/cohomology.hpp"

#include <sstream>

namespace fmf {

MultiProjSpace::MultiProjSpace(std::vector<int> factors) : factors_(std::move(factors)) {
    for (int n : factors_) {
        if (n < 0) throw input_error("MultiProjSpace: factor dimensions must be nonnegative");
    }
}

int MultiProjSpace::total_dimension() const {
    int total = 0;
    for (int n : factors_) total += n;
    return total;
}

Int CohomologyTable::at(int degree) const {
    auto it = dims_.find(degree);
    return it == dims_.end() ? Int(0) : it->second;
}

void CohomologyTable::add(int degree, const Int& dim) {
    if (dim < 0) throw internal_error("CohomologyTable: negative dimension");
    if (dim == 0) return;
    dims_[degree] += dim;
}

CohomologyTable CohomologyTable::shifted(int s) const {
    CohomologyTable out;
    for (const auto& [i, v] : dims_) out.dims_.emplace(i + s, v);
    return out;
}

CohomologyTable CohomologyTable::scaled(const Int& factor) const {
    if (factor < 0) throw internal_error("CohomologyTable: negative scale");
    CohomologyTable out;
    if (factor == 0) return out;
    for (const auto& [i, v] : dims_) out.dims_.emplace(i, v * factor);
    return out;
}

Int CohomologyTable::alternating_sum() const {
    Int chi = 0;
    for (const auto& [i, v] : dims_) chi += (i % 2 == 0) ? v : -v;
    return chi;
}

CohomologyTable CohomologyTable::convolve(const CohomologyTable& a, const CohomologyTable& b) {
    CohomologyTable out;
    for (const auto& [i, u] : a.dims_)
        for (const auto& [j, v] : b.dims_) out.add(i + j, u * v);
    return out;
}

bool CohomologyTable::concentrated_in(int degree) const {
    return dims_.size() == 1 && dims_.begin()->first == degree;
}

CohomologyTable line_bundle_cohomology(int n, long long d) {
    if (n < 0) throw input_error("line_bundle_cohomology: n must be nonnegative");
    CohomologyTable t;
    if (n == 0) {
        t.add(0, 1);
    } else if (d >= 0) {
        t.add(0, binomial(n + d, n));
    } else if (d <= -n - 1) {
        t.add(n, binomial(-d - 1, n));
    }
    return t;
}

static void check_lengths(const MultiProjSpace& space, const MultiDegree& deg, const char* op) {
    if (space.factor_count() != deg.size()) {
        std::ostringstream msg;
        msg << op << ": degree length " << deg.size() << " does not match factor count "
            << space.factor_count();
        throw input_error(msg.str());
    }
}

CohomologyTable box_cohomology(const MultiProjSpace& space, const MultiDegree& deg) {
    check_lengths(space, deg, "box_cohomology");
    CohomologyTable out;
    out.add(0, 1);
    for (std::size_t j = 0; j < space.factor_count(); ++j)
        out = CohomologyTable::convolve(out, line_bundle_cohomology(space.factors()[j], deg[j]));
    return out;
}

MultiDegree serre_dual_degree(const MultiProjSpace& space, const MultiDegree& deg) {
    check_lengths(space, deg, "serre_dual_degree");
    MultiDegree out(deg.size());
    for (std::size_t j = 0; j < deg.size(); ++j) out[j] = -deg[j] - space.factors()[j] - 1;
    return out;
}

Int euler_characteristic(const MultiProjSpace& space, const MultiDegree& deg) {
    check_lengths(space, deg, "euler_characteristic");
    Int chi = 1;
    for (std::size_t j = 0; j < deg.size(); ++j)
        chi *= binomial(static_cast<long long>(space.factors()[j]) + deg[j], space.factors()[j]);
    return chi;
}

} // namespace fmf
