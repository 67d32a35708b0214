#pragma once

// Census of k x m matrices over F_q by rank and h-trace (sum of the first h
// diagonal entries). Shapes are normalized to k <= m internally: transposing
// preserves both the rank and every partial diagonal trace. h = 0 means "no
// trace condition".

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rmc/bigint.hpp"

namespace rmc {

inline constexpr std::uint64_t kDefaultCensusBudget = 16777216;  // 2^24 matrices

// Matrices of rank r, no trace condition: [m, r] prod_{i<r} (q^k - q^i)
// after normalizing to k <= m.
Int count_rank(std::uint32_t q, int k, int m, int r);

// Matrices of rank r with zero h-trace, via the duality transform of the
// one-dimensional code spanned by the rank-h partial identity.
Int count_rank_htrace_recursive(std::uint32_t q, int k, int m, int r, int h);

// Same count by the standalone alternating formula
//   (1/q) sum_s (-1)^{r-s} q^{ms + C(r-s,2)} [k-s, k-r] ([k,s] + (q-1)[k-h,s]);
// independent of the transform route, exact division by q checked.
Int count_rank_htrace_explicit(std::uint32_t q, int k, int m, int r, int h);

// Matrices of rank r whose h-trace equals a fixed nonzero value:
// (count_rank - count_rank_htrace) / (q - 1), independent of the value.
// `value` is the packed element and must be nonzero.
Int count_rank_trace_value(std::uint32_t q, int k, int m, int r, int h, std::uint32_t value);

// Dispatcher: h = 0 routes to count_rank, otherwise to the recursive route.
Int count_matrices(std::uint32_t q, int k, int m, int r, int h);

// Exhaustive census over all q^{km} matrices. Ground truth for everything
// above; q must be a prime power and q^{km} must fit the budget.
class CensusTable {
public:
    std::uint32_t q() const { return q_; }
    int k() const { return k_; }  // normalized: k <= m
    int m() const { return m_; }

    // matrices of rank r
    Int rank_count(int r) const;
    // matrices of rank r whose h-trace equals `value` (packed), 1 <= h <= k
    Int count(int r, int h, std::uint32_t value) const;

private:
    friend CensusTable census_bruteforce(std::uint32_t, int, int, std::uint64_t);
    std::uint32_t q_ = 0;
    int k_ = 0, m_ = 0;
    std::vector<std::uint64_t> rank_;    // [r]
    std::vector<std::uint64_t> cells_;   // [((h-1)*(k+1) + r)*q + value]
};

CensusTable census_bruteforce(std::uint32_t q, int k, int m,
                              std::uint64_t budget = kDefaultCensusBudget);

// CSV with header q,k,m,r,h,trace_value,count. h = 0 rows carry the rank
// marginals with trace_value "-"; remaining rows cover every (r, h, value).
void write_census_csv(std::ostream& os, const CensusTable& t);

}  // namespace rmc
