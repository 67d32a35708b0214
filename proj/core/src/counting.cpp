#include "rmc/counting.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "rmc/errors.hpp"
#include "rmc/finite_field.hpp"
#include "rmc/qcalc.hpp"

namespace rmc {

namespace {

void normalize_shape(int& k, int& m) {
    if (k < 1 || m < 1) throw domain_error("matrix shape must be positive");
    if (k > m) std::swap(k, m);
}

void check_rank_range(int k, int r) {
    if (r < 0 || r > k) throw domain_error("rank must lie in [0, min(k,m)]");
}

void check_h_range(int k, int h) {
    if (h < 1 || h > k) throw domain_error("trace depth must lie in [1, min(k,m)]");
}

std::uint32_t prime_of(std::uint32_t q) {
    if (q < 2) throw domain_error("field size must be at least 2");
    for (std::uint32_t p = 2; p * p <= q; ++p)
        if (q % p == 0) return p;
    return q;
}

int binom2(int r) { return r * (r - 1) / 2; }

}  // namespace

Int count_rank(std::uint32_t q, int k, int m, int r) {
    normalize_shape(k, m);
    check_rank_range(k, r);
    Int out = q_binomial(q, m, r);
    for (int i = 0; i < r; ++i)
        out *= pow_q(q, static_cast<unsigned>(k)) - pow_q(q, static_cast<unsigned>(i));
    return out;
}

Int count_rank_htrace_recursive(std::uint32_t q, int k, int m, int r, int h) {
    normalize_shape(k, m);
    check_rank_range(k, r);
    check_h_range(k, h);
    // The matrices with zero h-trace are the dual of the one-dimensional code
    // spanned by the rank-h partial identity, whose distribution is
    // A_0 = 1, A_h = q - 1.
    std::vector<Int> a(static_cast<std::size_t>(k) + 1, Int(0));
    a[0] = 1;
    a[static_cast<std::size_t>(h)] = Int(q) - 1;
    RankDistribution b = dual_distribution_recursive(RankDistribution(q, k, m, a), 1);
    return b.at(r);
}

Int count_rank_htrace_explicit(std::uint32_t q, int k, int m, int r, int h) {
    normalize_shape(k, m);
    check_rank_range(k, r);
    check_h_range(k, h);
    Int acc = 0;
    for (int s = 0; s <= r; ++s) {
        Int term = pow_q(q, static_cast<unsigned>(m * s + binom2(r - s))) *
                   q_binomial(q, k - s, k - r) *
                   (q_binomial(q, k, s) + (Int(q) - 1) * q_binomial(q, k - h, s));
        if ((r - s) % 2) term = -term;
        acc += term;
    }
    if (acc % q != 0) throw domain_error("alternating sum is not divisible by q");
    return acc / q;
}

Int count_rank_trace_value(std::uint32_t q, int k, int m, int r, int h, std::uint32_t value) {
    if (value == 0) throw domain_error("trace value must be nonzero; use the zero-trace counts");
    if (value >= q) throw domain_error("trace value must be a field element");
    Int diff = count_rank(q, k, m, r) - count_rank_htrace_recursive(q, k, m, r, h);
    if (diff % (Int(q) - 1) != 0) throw domain_error("nonzero-trace bucket is not integral");
    return diff / (Int(q) - 1);
}

Int count_matrices(std::uint32_t q, int k, int m, int r, int h) {
    if (h == 0) return count_rank(q, k, m, r);
    return count_rank_htrace_recursive(q, k, m, r, h);
}

Int CensusTable::rank_count(int r) const {
    check_rank_range(k_, r);
    return Int(rank_[static_cast<std::size_t>(r)]);
}

Int CensusTable::count(int r, int h, std::uint32_t value) const {
    check_rank_range(k_, r);
    check_h_range(k_, h);
    if (value >= q_) throw domain_error("trace value must be a field element");
    return Int(cells_[(static_cast<std::size_t>(h - 1) * (k_ + 1) + static_cast<std::size_t>(r)) * q_ +
                      value]);
}

CensusTable census_bruteforce(std::uint32_t q, int k, int m, std::uint64_t budget) {
    normalize_shape(k, m);
    const std::uint32_t p = prime_of(q);
    unsigned n = 0;
    std::uint32_t t = q;
    while (t > 1) {
        if (t % p != 0) throw domain_error("field size must be a prime power");
        t /= p;
        ++n;
    }
    FieldSpecPtr fp = FieldSpec::get(p, n);
    const FieldSpec& f = *fp;

    const int cells = k * m;
    if (pow_q(q, static_cast<unsigned>(cells)) > budget)
        throw budget_error("census of " + pow_q(q, static_cast<unsigned>(cells)).str() +
                           " matrices exceeds the budget " + std::to_string(budget));

    CensusTable out;
    out.q_ = q;
    out.k_ = k;
    out.m_ = m;
    out.rank_.assign(static_cast<std::size_t>(k) + 1, 0);
    out.cells_.assign(static_cast<std::size_t>(k) * (k + 1) * q, 0);

    std::vector<std::uint32_t> v(static_cast<std::size_t>(cells), 0);
    std::vector<std::uint32_t> scratch(static_cast<std::size_t>(cells));
    std::vector<std::uint32_t> traces(static_cast<std::size_t>(k));
    for (;;) {
        // rank by plain elimination on a packed copy
        scratch = v;
        int rank = 0;
        for (int col = 0; col < m && rank < k; ++col) {
            int pivot = -1;
            for (int row = rank; row < k; ++row)
                if (scratch[static_cast<std::size_t>(row) * m + col] != 0) {
                    pivot = row;
                    break;
                }
            if (pivot < 0) continue;
            if (pivot != rank)
                for (int j = col; j < m; ++j)
                    std::swap(scratch[static_cast<std::size_t>(pivot) * m + j],
                              scratch[static_cast<std::size_t>(rank) * m + j]);
            const std::uint32_t inv = f.inv_v(scratch[static_cast<std::size_t>(rank) * m + col]);
            for (int row = rank + 1; row < k; ++row) {
                const std::uint32_t lead = scratch[static_cast<std::size_t>(row) * m + col];
                if (lead == 0) continue;
                const std::uint32_t factor = f.mul_v(lead, inv);
                for (int j = col; j < m; ++j)
                    scratch[static_cast<std::size_t>(row) * m + j] =
                        f.sub_v(scratch[static_cast<std::size_t>(row) * m + j],
                                f.mul_v(factor, scratch[static_cast<std::size_t>(rank) * m + j]));
            }
            ++rank;
        }
        out.rank_[static_cast<std::size_t>(rank)] += 1;

        std::uint32_t running = 0;
        for (int h = 1; h <= k; ++h) {
            running = f.add_v(running, v[static_cast<std::size_t>(h - 1) * m + (h - 1)]);
            traces[static_cast<std::size_t>(h - 1)] = running;
        }
        for (int h = 1; h <= k; ++h)
            out.cells_[(static_cast<std::size_t>(h - 1) * (k + 1) + static_cast<std::size_t>(rank)) *
                           q +
                       traces[static_cast<std::size_t>(h - 1)]] += 1;

        int pos = cells - 1;
        while (pos >= 0 && v[static_cast<std::size_t>(pos)] == q - 1)
            v[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        v[static_cast<std::size_t>(pos)] += 1;
    }
    return out;
}

void write_census_csv(std::ostream& os, const CensusTable& t) {
    os << "q,k,m,r,h,trace_value,count\n";
    for (int r = 0; r <= t.k(); ++r)
        os << t.q() << ',' << t.k() << ',' << t.m() << ',' << r << ",0,-," << t.rank_count(r)
           << '\n';
    for (int h = 1; h <= t.k(); ++h)
        for (int r = 0; r <= t.k(); ++r)
            for (std::uint32_t v = 0; v < t.q(); ++v)
                os << t.q() << ',' << t.k() << ',' << t.m() << ',' << r << ',' << h << ',' << v
                   << ',' << t.count(r, h, v) << '\n';
}

}  // namespace rmc
