#include "fmf/cech.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <vector>

// The Cech complex of O(d) on the standard cover of P^n splits as a direct
// sum over Laurent multidegrees a with sum(a) = d: the monomial x^a is a
// section over the chart intersection U_I exactly when a_j >= 0 for every
// j outside I.  The differential preserves the multidegree, so ranks are
// accumulated block by block.  Exponents are truncated to a per-coordinate
// box; a multidegree is either enumerated with its whole block or not at
// all, so truncation never cuts a block in half.  The box is wide enough
// to contain every section (all exponents in [0, d]) and every residue
// monomial (all exponents in [d+n, -1]), and the result is recomputed with
// a widened box as a stability guard.

namespace fmf {
namespace {

// Fraction-free Gaussian elimination; exact over Int.
int integer_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    int rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Int f = m[i][c];
            const Int p = m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * p - m[r][j] * f;
        }
        ++r;
        ++rank;
    }
    return rank;
}

// Per-level dimensions and differential ranks of the block indexed by the
// chart sets I with neg_mask subset of I.  level p holds the sets of size
// p + 1.  The block shape depends only on neg_mask, so callers memoize.
std::vector<Int> block_cohomology(int n, std::uint32_t neg_mask) {
    const int nvars = n + 1;
    const std::uint32_t full = (1u << nvars) - 1u;

    // level[s] holds the chart sets of size s; the top differential needs
    // an (empty) target one past the full set
    std::vector<std::vector<std::uint32_t>> level(static_cast<std::size_t>(nvars) + 2);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if ((mask & neg_mask) != neg_mask) continue;
        level[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    }

    std::vector<int> dim(static_cast<std::size_t>(nvars) + 1, 0);
    std::vector<int> rank(static_cast<std::size_t>(nvars) + 1, 0);
    for (int p = 0; p <= n; ++p) {
        const auto& src = level[static_cast<std::size_t>(p) + 1];
        const auto& dst = level[static_cast<std::size_t>(p) + 2];
        dim[static_cast<std::size_t>(p)] = static_cast<int>(src.size());
        if (src.empty() || dst.empty()) continue;

        std::vector<std::vector<Int>> mat(dst.size(), std::vector<Int>(src.size(), Int(0)));
        for (std::size_t col = 0; col < src.size(); ++col) {
            const std::uint32_t I = src[col];
            for (int j = 0; j < nvars; ++j) {
                const std::uint32_t bit = 1u << j;
                if (I & bit) continue;
                const std::uint32_t J = I | bit;
                // position of j among the sorted elements of J
                const int pos = std::popcount(J & (bit - 1u));
                for (std::size_t row = 0; row < dst.size(); ++row) {
                    if (dst[row] == J) {
                        mat[row][col] = (pos % 2 == 0) ? 1 : -1;
                        break;
                    }
                }
            }
        }
        rank[static_cast<std::size_t>(p)] = integer_rank(std::move(mat));
    }

    std::vector<Int> h(static_cast<std::size_t>(n) + 1, Int(0));
    for (int i = 0; i <= n; ++i) {
        Int hi = dim[static_cast<std::size_t>(i)] - rank[static_cast<std::size_t>(i)];
        if (i > 0) hi -= rank[static_cast<std::size_t>(i) - 1];
        h[static_cast<std::size_t>(i)] = hi;
    }
    return h;
}

std::vector<Int> cohomology_with_box(int n, int d, int box) {
    const int nvars = n + 1;
    std::vector<Int> h(static_cast<std::size_t>(n) + 1, Int(0));
    std::vector<std::vector<Int>> cache(1u << nvars);
    std::vector<bool> cached(1u << nvars, false);

    std::vector<int> a(static_cast<std::size_t>(nvars), 0);
    // enumerate a_0..a_{n-1} in [-box, box]; a_n is forced by the degree
    auto recurse = [&](auto&& self, int idx, int partial) -> void {
        if (idx == nvars - 1) {
            const int last = d - partial;
            if (last < -box || last > box) return;
            a[static_cast<std::size_t>(idx)] = last;
            std::uint32_t neg_mask = 0;
            for (int j = 0; j < nvars; ++j)
                if (a[static_cast<std::size_t>(j)] < 0) neg_mask |= 1u << j;
            if (!cached[neg_mask]) {
                cache[neg_mask] = block_cohomology(n, neg_mask);
                cached[neg_mask] = true;
            }
            for (int i = 0; i <= n; ++i)
                h[static_cast<std::size_t>(i)] += cache[neg_mask][static_cast<std::size_t>(i)];
            return;
        }
        for (int v = -box; v <= box; ++v) {
            a[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1, partial + v);
        }
    };
    recurse(recurse, 0, 0);
    return h;
}

} // namespace

CohomologyTable cech_oracle(int n, int d) {
    if (n < 0 || n > 3 || d < -6 || d > 6)
        throw unsupported_range("cech_oracle: supported range is 0 <= n <= 3, |d| <= 6");

    const int box = std::abs(d) + 2;
    const std::vector<Int> h = cohomology_with_box(n, d, box);
    if (h != cohomology_with_box(n, d, box + 2))
        throw internal_error("cech_oracle: truncation instability");

    CohomologyTable out;
    for (int i = 0; i <= n; ++i) out.add(i, h[static_cast<std::size_t>(i)]);
    return out;
}

} // namespace fmf
