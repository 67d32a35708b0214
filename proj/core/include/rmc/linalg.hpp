#pragma once

// Generic dense linear algebra over a field element type E with value
// semantics and +, -, unary -, *, inverse(), is_zero(), ==. Matrices are
// vectors of equal-length rows. Everything returns the canonical reduced
// row echelon form so that subspace equality is plain structural equality.

#include <optional>
#include <vector>

#include "rmc/errors.hpp"

namespace rmc::linalg {

// In-place reduced row echelon form: pivots are 1 and their columns are
// cleared, rows are ordered by pivot column, zero rows are dropped.
// Returns the rank.
template <class E>
int rref(std::vector<std::vector<E>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        if (!rows[r][c].is_one()) {
            const E inv = rows[r][c].inverse();
            for (std::size_t j = c; j < ncols; ++j) rows[r][j] = rows[r][j] * inv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const E f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return static_cast<int>(r);
}

template <class E>
int rank_of(std::vector<std::vector<E>> rows) {
    return rref(rows);
}

// First nonzero column of a row, or row size if none.
template <class E>
std::size_t pivot_of(const std::vector<E>& row) {
    std::size_t p = 0;
    while (p < row.size() && row[p].is_zero()) ++p;
    return p;
}

// Membership of v in the row space spanned by rows in RREF.
template <class E>
bool in_row_space(const std::vector<std::vector<E>>& rref_rows, std::vector<E> v) {
    for (const auto& row : rref_rows) {
        const std::size_t p = pivot_of(row);
        if (p >= v.size() || v[p].is_zero()) continue;
        const E f = v[p];
        for (std::size_t j = p; j < v.size(); ++j) v[j] = v[j] - f * row[j];
    }
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// Canonical basis of {x : sum_j rows[i][j] * x[j] = 0 for all i}.
template <class E>
std::vector<std::vector<E>> kernel(std::vector<std::vector<E>> rows, std::size_t ncols,
                                   const E& zero, const E& one) {
    rref(rows);
    std::vector<std::size_t> pivots;
    std::vector<bool> is_pivot(ncols, false);
    for (const auto& row : rows) {
        const std::size_t p = pivot_of(row);
        pivots.push_back(p);
        is_pivot[p] = true;
    }
    std::vector<std::vector<E>> ker;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<E> v(ncols, zero);
        v[f] = one;
        for (std::size_t i = 0; i < rows.size(); ++i) v[pivots[i]] = -rows[i][f];
        ker.push_back(std::move(v));
    }
    rref(ker);
    return ker;
}

template <class E>
std::optional<std::vector<std::vector<E>>> inverse(const std::vector<std::vector<E>>& m,
                                                   const E& zero, const E& one) {
    const std::size_t n = m.size();
    std::vector<std::vector<E>> aug;
    aug.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw domain_error("matrix is not square");
        std::vector<E> row = m[i];
        for (std::size_t j = 0; j < n; ++j) row.push_back(i == j ? one : zero);
        aug.push_back(std::move(row));
    }
    if (rref(aug) != static_cast<int>(n)) return std::nullopt;
    // pivots that spill into the augmented half mean the left block is
    // singular even though the augmented rows keep the rank at n
    for (const auto& row : aug)
        if (pivot_of(row) >= n) return std::nullopt;
    std::vector<std::vector<E>> inv(n);
    for (std::size_t i = 0; i < n; ++i)
        inv[i].assign(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end());
    return inv;
}

// Zassenhaus: canonical basis of (row space of a) intersect (row space of b).
template <class E>
std::vector<std::vector<E>> intersection(const std::vector<std::vector<E>>& a,
                                         const std::vector<std::vector<E>>& b,
                                         std::size_t ncols, const E& zero) {
    std::vector<std::vector<E>> block;
    block.reserve(a.size() + b.size());
    for (const auto& r : a) {
        std::vector<E> row = r;
        row.insert(row.end(), r.begin(), r.end());
        block.push_back(std::move(row));
    }
    for (const auto& r : b) {
        std::vector<E> row = r;
        row.resize(2 * ncols, zero);
        block.push_back(std::move(row));
    }
    rref(block);
    std::vector<std::vector<E>> inter;
    for (const auto& row : block) {
        if (pivot_of(row) < ncols) continue;
        inter.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(ncols), row.end());
    }
    rref(inter);
    return inter;
}

}  // namespace rmc::linalg
