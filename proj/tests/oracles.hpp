#pragma once

// Test-side oracles, deliberately implemented with different algorithms than
// the library: plain polynomial arithmetic instead of log tables, row-span
// counting instead of elimination, ordered-tuple counting instead of the
// Pascal-style recurrence, and full-space membership scans instead of kernel
// solves. Agreement between the two paths is what the tests assert.

#include <cstdint>
#include <map>
#include <vector>

#include "rmc/bigint.hpp"
#include "rmc/delsarte.hpp"
#include "rmc/matrix_space.hpp"
#include "rmc/qcalc.hpp"

namespace oracle {

// GF(p^n) on packed values (sum of digit*p^i), no precomputed tables.
struct SmallField {
    std::uint32_t p;
    unsigned n;
    std::vector<std::uint32_t> mod;  // monic modulus digits, ascending, size n+1

    std::uint32_t card() const {
        std::uint32_t c = 1;
        for (unsigned i = 0; i < n; ++i) c *= p;
        return c;
    }
    std::vector<std::uint32_t> digits(std::uint32_t v) const {
        std::vector<std::uint32_t> d(n, 0);
        for (unsigned i = 0; i < n; ++i) {
            d[i] = v % p;
            v /= p;
        }
        return d;
    }
    std::uint32_t pack(const std::vector<std::uint32_t>& d) const {
        std::uint32_t v = 0;
        for (unsigned i = n; i-- > 0;) v = v * p + d[i];
        return v;
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        auto da = digits(a), db = digits(b);
        for (unsigned i = 0; i < n; ++i) da[i] = (da[i] + db[i]) % p;
        return pack(da);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        auto da = digits(a), db = digits(b);
        std::vector<std::uint32_t> prod(2 * n - 1, 0);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        for (unsigned d = 2 * n - 2; d + 1 > n; --d) {
            const std::uint32_t c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            // x^d = -mod_lower * x^{d-n}
            for (unsigned i = 0; i < n; ++i)
                prod[d - n + i] = (prod[d - n + i] + c * (p - mod[i] % p)) % p;
        }
        prod.resize(n);
        return pack(prod);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint32_t inv(std::uint32_t a) const { return pow(a, card() - 2); }
};

// rank via |row span| = q^rank, no elimination
inline int rank_by_rowspan(const rmc::MatrixFq& m) {
    const rmc::FieldSpec& f = m.field();
    const std::uint32_t q = f.cardinality();
    const int rows = m.rows(), cols = m.cols();
    std::uint64_t combos = 1;
    for (int i = 0; i < rows; ++i) combos *= q;
    std::map<std::vector<std::uint32_t>, bool> seen;
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
        std::vector<std::uint32_t> acc(static_cast<std::size_t>(cols), 0);
        std::uint64_t rest = idx;
        for (int i = 0; i < rows; ++i) {
            const auto c = f.element(static_cast<std::uint32_t>(rest % q));
            rest /= q;
            for (int j = 0; j < cols; ++j)
                acc[static_cast<std::size_t>(j)] =
                    (c * m.at(i, j) + f.element(acc[static_cast<std::size_t>(j)])).value();
        }
        seen[acc] = true;
    }
    int r = 0;
    std::uint64_t span = seen.size();
    while (span > 1) {
        span /= q;
        ++r;
    }
    return r;
}

// t-dim subspaces of F_q^s counted as ordered independent tuples over ordered
// bases, both sides by brute force over all q^{st} tuples
inline rmc::Int count_subspaces(std::uint32_t q, int s, int t) {
    if (t < 0 || t > s) return 0;
    if (t == 0) return 1;
    auto ordered_tuples = [q](int amb, int len) {
        // tuples of independent vectors, independence tested by span growth
        rmc::FieldSpecPtr fp;
        {
            std::uint32_t p = 2;
            while (q % p != 0) ++p;
            unsigned n = 0;
            std::uint32_t rest = q;
            while (rest > 1) {
                rest /= p;
                ++n;
            }
            fp = rmc::FieldSpec::get(p, n);
        }
        std::uint64_t total = 1;
        for (int i = 0; i < amb * len; ++i) total *= q;
        rmc::Int count = 0;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<std::vector<rmc::FieldElement>> vecs;
            std::uint64_t rest = idx;
            for (int v = 0; v < len; ++v) {
                std::vector<rmc::FieldElement> vec;
                for (int j = 0; j < amb; ++j) {
                    vec.push_back(fp->element(static_cast<std::uint32_t>(rest % q)));
                    rest /= q;
                }
                vecs.push_back(std::move(vec));
            }
            if (rmc::VectorSubspace::span(*fp, amb, vecs).dim() == len) count += 1;
        }
        return count;
    };
    return ordered_tuples(s, t) / ordered_tuples(t, t);
}

// dual rank distribution by scanning the whole ambient space for matrices
// orthogonal to every generator (no kernel solve, no transform)
inline std::vector<rmc::Int> dual_dist_bruteforce(const rmc::DelsarteCode& c) {
    const rmc::FieldSpec& f = c.field();
    const std::uint32_t q = f.cardinality();
    const int k = c.k(), m = c.m();
    std::vector<rmc::Int> dist(static_cast<std::size_t>(std::min(k, m)) + 1, rmc::Int(0));
    std::uint64_t total = 1;
    for (int i = 0; i < k * m; ++i) total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        rmc::MatrixFq w(f, k, m);
        std::uint64_t rest = idx;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < m; ++j) {
                w.set(i, j, f.element(static_cast<std::uint32_t>(rest % q)));
                rest /= q;
            }
        bool ortho = true;
        for (const auto& g : c.generators())
            if (!rmc::trace_product(w, g).is_zero()) {
                ortho = false;
                break;
            }
        if (ortho) dist[static_cast<std::size_t>(rmc::rank(w))] += 1;
    }
    return dist;
}

}  // namespace oracle
