#include "rmc/matrix_space.hpp"

#include <algorithm>

#include "rmc/linalg.hpp"

namespace rmc {

MatrixFq::MatrixFq(const FieldSpec& field, int rows, int cols)
    : field_(&field), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw domain_error("matrix shape must be nonnegative");
    e_.assign(static_cast<std::size_t>(rows) * cols, field.zero());
}

MatrixFq MatrixFq::from_rows(const FieldSpec& field,
                             const std::vector<std::vector<FieldElement>>& rows) {
    const int k = static_cast<int>(rows.size());
    const int m = k == 0 ? 0 : static_cast<int>(rows[0].size());
    MatrixFq r(field, k, m);
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(rows[i].size()) != m) throw domain_error("ragged matrix rows");
        for (int j = 0; j < m; ++j) r.set(i, j, rows[i][j]);
    }
    return r;
}

MatrixFq MatrixFq::from_flat(const FieldSpec& field, int rows, int cols,
                             std::vector<FieldElement> entries) {
    if (entries.size() != static_cast<std::size_t>(rows) * cols)
        throw domain_error("flat entry count does not match the shape");
    MatrixFq r(field, rows, cols);
    for (const auto& x : entries)
        if (x.field_ptr() != &field) throw field_mismatch_error("entry from a different field");
    r.e_ = std::move(entries);
    return r;
}

std::size_t MatrixFq::check_index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw domain_error("matrix index out of range");
    return static_cast<std::size_t>(i) * cols_ + j;
}

void MatrixFq::set(int i, int j, const FieldElement& v) {
    if (v.field_ptr() != field_) throw field_mismatch_error("entry from a different field");
    e_[check_index(i, j)] = v;
}

MatrixFq MatrixFq::transpose() const {
    MatrixFq t(*field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.e_[static_cast<std::size_t>(j) * rows_ + i] = e_[static_cast<std::size_t>(i) * cols_ + j];
    return t;
}

std::vector<FieldElement> MatrixFq::row(int i) const {
    check_index(i, 0);
    return std::vector<FieldElement>(e_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
                                     e_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
}

std::vector<FieldElement> MatrixFq::col(int j) const {
    check_index(0, j);
    std::vector<FieldElement> c;
    c.reserve(rows_);
    for (int i = 0; i < rows_; ++i) c.push_back(e_[static_cast<std::size_t>(i) * cols_ + j]);
    return c;
}

namespace {
void require_same_shape(const MatrixFq& a, const MatrixFq& b) {
    if (a.field_ptr() != b.field_ptr()) throw field_mismatch_error("matrices over different fields");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw domain_error("matrix shapes do not match");
}
}  // namespace

MatrixFq& MatrixFq::operator+=(const MatrixFq& b) {
    require_same_shape(*this, b);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = e_[i] + b.e_[i];
    return *this;
}

MatrixFq operator+(const MatrixFq& a, const MatrixFq& b) {
    require_same_shape(a, b);
    MatrixFq r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
    return r;
}

MatrixFq operator-(const MatrixFq& a, const MatrixFq& b) {
    require_same_shape(a, b);
    MatrixFq r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] - b.e_[i];
    return r;
}

MatrixFq operator*(const FieldElement& c, const MatrixFq& a) {
    if (c.field_ptr() != a.field_ptr()) throw field_mismatch_error("scalar from a different field");
    MatrixFq r = a;
    for (auto& x : r.e_) x = c * x;
    return r;
}

MatrixFq operator*(const MatrixFq& a, const MatrixFq& b) {
    if (a.field_ptr() != b.field_ptr()) throw field_mismatch_error("matrices over different fields");
    if (a.cols() != b.rows()) throw domain_error("inner dimensions do not match");
    MatrixFq r(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int l = 0; l < a.cols(); ++l) {
            const FieldElement& ail = a.at(i, l);
            if (ail.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j)
                r.e_[static_cast<std::size_t>(i) * b.cols() + j] =
                    r.e_[static_cast<std::size_t>(i) * b.cols() + j] + ail * b.at(l, j);
        }
    return r;
}

int rank(const MatrixFq& m) {
    // Forward elimination on packed values; enumeration hot path.
    const FieldSpec& f = m.field();
    const int k = m.rows(), n = m.cols();
    std::vector<std::uint32_t> a(static_cast<std::size_t>(k) * n);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = m.flat()[i].value();
    int r = 0;
    for (int c = 0; c < n && r < k; ++c) {
        int piv = -1;
        for (int i = r; i < k; ++i)
            if (a[static_cast<std::size_t>(i) * n + c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < n; ++j)
                std::swap(a[static_cast<std::size_t>(r) * n + j],
                          a[static_cast<std::size_t>(piv) * n + j]);
        const std::uint32_t inv = f.inv_v(a[static_cast<std::size_t>(r) * n + c]);
        for (int i = r + 1; i < k; ++i) {
            const std::uint32_t lead = a[static_cast<std::size_t>(i) * n + c];
            if (lead == 0) continue;
            const std::uint32_t factor = f.mul_v(lead, inv);
            for (int j = c; j < n; ++j)
                a[static_cast<std::size_t>(i) * n + j] =
                    f.sub_v(a[static_cast<std::size_t>(i) * n + j],
                            f.mul_v(factor, a[static_cast<std::size_t>(r) * n + j]));
        }
        ++r;
    }
    return r;
}

bool is_invertible(const MatrixFq& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

FieldElement trace_product(const MatrixFq& a, const MatrixFq& b) {
    require_same_shape(a, b);
    FieldElement s = a.field().zero();
    for (std::size_t i = 0; i < a.flat().size(); ++i) s = s + a.flat()[i] * b.flat()[i];
    return s;
}

FieldElement h_trace(const MatrixFq& m, int h) {
    const int bound = std::min(m.rows(), m.cols());
    if (h < 1 || h > bound)
        throw domain_error("h must satisfy 1 <= h <= min(k,m)");
    FieldElement s = m.field().zero();
    for (int i = 0; i < h; ++i) s = s + m.at(i, i);
    return s;
}

// ---------------------------------------------------------------------------
// VectorSubspace

VectorSubspace VectorSubspace::span(const FieldSpec& field, int ambient,
                                    const std::vector<std::vector<FieldElement>>& vectors) {
    if (ambient < 0) throw domain_error("ambient dimension must be nonnegative");
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != ambient)
            throw domain_error("vector length does not match the ambient dimension");
        for (const auto& x : v)
            if (x.field_ptr() != &field) throw field_mismatch_error("vector from a different field");
        rows.push_back(v);
    }
    linalg::rref(rows);
    return VectorSubspace(&field, ambient, std::move(rows));
}

VectorSubspace VectorSubspace::zero_space(const FieldSpec& field, int ambient) {
    return span(field, ambient, {});
}

VectorSubspace VectorSubspace::full_space(const FieldSpec& field, int ambient) {
    std::vector<std::vector<FieldElement>> rows(
        ambient, std::vector<FieldElement>(ambient, field.zero()));
    for (int i = 0; i < ambient; ++i) rows[i][i] = field.one();
    return VectorSubspace(&field, ambient, std::move(rows));
}

bool VectorSubspace::contains(const std::vector<FieldElement>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw domain_error("vector length does not match the ambient dimension");
    return linalg::in_row_space(basis_, v);
}

VectorSubspace column_space(const MatrixFq& m) {
    std::vector<std::vector<FieldElement>> cols;
    cols.reserve(m.cols());
    for (int j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return VectorSubspace::span(m.field(), m.rows(), cols);
}

VectorSubspace subspace_dual(const VectorSubspace& u) {
    const FieldSpec& f = u.field();
    auto ker = linalg::kernel(u.basis(), static_cast<std::size_t>(u.ambient_dim()), f.zero(),
                              f.one());
    return VectorSubspace::span(f, u.ambient_dim(), ker);
}

std::vector<MatrixFq> mat_u_basis(const VectorSubspace& u, int m) {
    if (m < 1) throw domain_error("column count must be positive");
    std::vector<MatrixFq> gens;
    gens.reserve(static_cast<std::size_t>(u.dim()) * m);
    for (const auto& vec : u.basis()) {
        for (int j = 0; j < m; ++j) {
            MatrixFq g(u.field(), u.ambient_dim(), m);
            for (int i = 0; i < u.ambient_dim(); ++i) g.set(i, j, vec[i]);
            gens.push_back(std::move(g));
        }
    }
    return gens;
}

std::vector<std::vector<FieldElement>> enumerate_vectors(const VectorSubspace& u,
                                                         std::uint64_t budget) {
    const FieldSpec& f = u.field();
    const std::uint64_t q = f.cardinality();
    std::uint64_t total = 1;
    for (int i = 0; i < u.dim(); ++i) {
        if (total > budget / q) throw budget_error("subspace too large to enumerate");
        total *= q;
    }
    if (total > budget) throw budget_error("subspace too large to enumerate");
    std::vector<std::vector<FieldElement>> out;
    out.reserve(total);
    std::vector<FieldElement> cur(u.ambient_dim(), f.zero());
    // Recursive lexicographic sweep: coefficient of basis vector 0 varies slowest.
    std::function<void(int, std::vector<FieldElement>&)> rec =
        [&](int level, std::vector<FieldElement>& acc) {
            if (level == u.dim()) {
                out.push_back(acc);
                return;
            }
            for (std::uint32_t c = 0; c < q; ++c) {
                std::vector<FieldElement> next = acc;
                const FieldElement ce = f.element(c);
                if (c != 0)
                    for (int j = 0; j < u.ambient_dim(); ++j)
                        next[j] = next[j] + ce * u.basis()[level][j];
                rec(level + 1, next);
            }
        };
    rec(0, cur);
    return out;
}

std::vector<VectorSubspace> subspaces_of_dim(const FieldSpec& field, int k, int s,
                                             std::uint64_t budget) {
    if (k < 0 || s < 0 || s > k) throw domain_error("need 0 <= s <= k");
    const std::uint64_t q = field.cardinality();
    std::vector<VectorSubspace> out;
    if (s == 0) {
        out.push_back(VectorSubspace::zero_space(field, k));
        return out;
    }
    // Pivot columns in increasing order; free entries sit right of each pivot
    // in non-pivot columns. Each RREF pattern yields each subspace once.
    std::vector<int> piv(s);
    for (int i = 0; i < s; ++i) piv[i] = i;
    while (true) {
        std::vector<bool> is_piv(k, false);
        for (int p : piv) is_piv[p] = true;
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < s; ++i)
            for (int j = piv[i] + 1; j < k; ++j)
                if (!is_piv[j]) free_pos.emplace_back(i, j);
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < free_pos.size(); ++i) {
            if (combos > budget / q) throw budget_error("too many subspaces to enumerate");
            combos *= q;
        }
        if (out.size() + combos > budget) throw budget_error("too many subspaces to enumerate");
        std::vector<std::uint32_t> digits(free_pos.size(), 0);
        while (true) {
            std::vector<std::vector<FieldElement>> rows(
                s, std::vector<FieldElement>(k, field.zero()));
            for (int i = 0; i < s; ++i) rows[i][piv[i]] = field.one();
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                rows[free_pos[t].first][free_pos[t].second] = field.element(digits[t]);
            out.push_back(VectorSubspace::span(field, k, rows));
            std::size_t d = 0;
            while (d < digits.size() && ++digits[d] == q) digits[d++] = 0;
            if (d == digits.size() && !digits.empty()) break;
            if (digits.empty()) break;
        }
        // next pivot combination
        int i = s - 1;
        while (i >= 0 && piv[i] == k - s + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < s; ++j) piv[j] = piv[j - 1] + 1;
    }
    return out;
}

std::vector<VectorSubspace> all_subspaces(const FieldSpec& field, int k, std::uint64_t budget) {
    std::vector<VectorSubspace> out;
    for (int s = 0; s <= k; ++s) {
        auto part = subspaces_of_dim(field, k, s, budget);
        if (out.size() + part.size() > budget) throw budget_error("too many subspaces to enumerate");
        for (auto& u : part) out.push_back(std::move(u));
    }
    return out;
}

}  // namespace rmc
