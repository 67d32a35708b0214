#pragma once

// Exact q-calculus: Gaussian binomial coefficients, rank distributions, the
// duality transform between the rank distribution of a code and that of its
// trace-orthogonal dual (implemented twice, by the triangular recursion and
// by the explicit alternating-sign formula), moment identities, and the
// closed-form distribution shared by all MRD codes. Everything is exact
// arbitrary-precision integer arithmetic; divisions are checked and a failed
// division is a first-class error, not a rounding.

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "rmc/bigint.hpp"
#include "rmc/errors.hpp"

namespace rmc {

// [s,t]_q with the convention: 0 if s<0, t<0 or t>s; 1 if t==0 and s>=0;
// otherwise the Gaussian recurrence [s,t] = [s-1,t-1] + q^t [s-1,t].
// Computed as exact integers (never by rational division) and memoized per q.
Int q_binomial(std::uint32_t q, int s, int t);

class QBinomialTable {
public:
    explicit QBinomialTable(std::uint32_t q);
    std::uint32_t q() const { return q_; }
    Int get(int s, int t) const;

private:
    std::uint32_t q_;
    mutable std::mutex mu_;  // memo is a pure cache; safe under concurrent get
    mutable std::map<std::pair<int, int>, Int> memo_;
};

// Rank distribution of a subspace of Mat(k x m, F_q). The shape is
// normalized to k <= m on construction (rank distributions are invariant
// under transposition), counts are indexed 0..min(k,m) and nonnegative.
class RankDistribution {
public:
    RankDistribution(std::uint32_t q, int k, int m, std::vector<Int> counts);

    std::uint32_t q() const { return q_; }
    int k() const { return k_; }  // min(k,m) of the original shape
    int m() const { return m_; }  // max(k,m)
    int max_index() const { return k_; }

    // counts beyond min(k,m) read as zero
    Int at(int i) const;
    const std::vector<Int>& counts() const { return counts_; }
    Int total() const;

    // log_q(total); throws domain_error if the total is not a power of q.
    int code_dim() const;

    friend bool operator==(const RankDistribution& a, const RankDistribution& b) {
        return a.q_ == b.q_ && a.k_ == b.k_ && a.m_ == b.m_ && a.counts_ == b.counts_;
    }
    friend bool operator!=(const RankDistribution& a, const RankDistribution& b) {
        return !(a == b);
    }

private:
    std::uint32_t q_;
    int k_, m_;
    std::vector<Int> counts_;  // size k_+1
};

// Left side of the duality moment identity:
//   sum_{i} A_i [k-i, nu],  0 <= nu <= k.
Int moment_lhs(const RankDistribution& a, int nu);

// Right side: (|C| / q^{m nu}) sum_j B_j [k-j, nu-j], as an exact rational.
// For a genuine dual pair both sides are equal integers.
Rat moment_rhs(const RankDistribution& b, const Int& code_size, int nu);

// Distribution of the dual of a dim_c-dimensional code with distribution a,
// by the triangular recursion B_0 = 1, B_nu = a_nu - sum_{j<nu} B_j [k-j, nu-j]
// where a_nu = q^{m nu} (sum_i A_i [k-i, nu]) / |C|. A non-integral a_nu or a
// negative output means the input is not the distribution of any linear code.
RankDistribution dual_distribution_recursive(const RankDistribution& a, int dim_c);

// Same map by the explicit alternating formula
//   B_j = (1/|C|) sum_i A_i sum_s (-1)^{j-s} q^{ms + C(j-s,2)} [k-s,k-j][k-i,s].
// Independent implementation kept as a cross-check of the recursion.
RankDistribution dual_distribution_explicit(const RankDistribution& a, int dim_c);

// The rank distribution every MRD code of minimum rank d in Mat(k x m, F_q),
// k <= m, shares: A_0 = 1, A_d = (q^m - 1)[k, k-d] and the triangular
// recursion upward. Total is q^{m(k-d+1)}.
RankDistribution mrd_distribution(std::uint32_t q, int k, int m, int d);

}  // namespace rmc
