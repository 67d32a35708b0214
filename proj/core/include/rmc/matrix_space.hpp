#pragma once

// Mat(k x m, F_q) as an inner-product space: rank, partial-diagonal traces,
// the trace bilinear form <M,N> = Tr(M N^t), column spaces, and subspaces of
// F_q^k with canonical reduced-row-echelon bases.

#include <cstdint>
#include <functional>
#include <vector>

#include "rmc/bigint.hpp"
#include "rmc/errors.hpp"
#include "rmc/finite_field.hpp"

namespace rmc {

// Default cap on exhaustive enumerations (number of objects visited).
inline constexpr std::uint64_t kDefaultEnumBudget = 16777216;  // 2^24

class MatrixFq {
public:
    MatrixFq(const FieldSpec& field, int rows, int cols);  // zero matrix
    static MatrixFq from_rows(const FieldSpec& field,
                              const std::vector<std::vector<FieldElement>>& rows);
    // Row-major flattening; inverse of flat().
    static MatrixFq from_flat(const FieldSpec& field, int rows, int cols,
                              std::vector<FieldElement> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return *field_; }
    const FieldSpec* field_ptr() const { return field_; }

    const FieldElement& at(int i, int j) const { return e_[check_index(i, j)]; }
    void set(int i, int j, const FieldElement& v);
    const std::vector<FieldElement>& flat() const { return e_; }

    MatrixFq transpose() const;
    std::vector<FieldElement> row(int i) const;
    std::vector<FieldElement> col(int j) const;

    MatrixFq& operator+=(const MatrixFq& b);
    friend MatrixFq operator+(const MatrixFq& a, const MatrixFq& b);
    friend MatrixFq operator-(const MatrixFq& a, const MatrixFq& b);
    friend MatrixFq operator*(const FieldElement& c, const MatrixFq& a);
    friend MatrixFq operator*(const MatrixFq& a, const MatrixFq& b);  // matrix product
    friend bool operator==(const MatrixFq& a, const MatrixFq& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const MatrixFq& a, const MatrixFq& b) { return !(a == b); }

private:
    std::size_t check_index(int i, int j) const;
    const FieldSpec* field_;
    int rows_, cols_;
    std::vector<FieldElement> e_;  // row-major
};

int rank(const MatrixFq& m);
bool is_invertible(const MatrixFq& m);

// <M,N> = Tr(M N^t), evaluated entrywise: sum_ij M_ij N_ij.
FieldElement trace_product(const MatrixFq& a, const MatrixFq& b);

// Partial diagonal trace: sum of the first h diagonal entries, 1 <= h <= min(k,m).
FieldElement h_trace(const MatrixFq& m, int h);

class VectorSubspace {
public:
    static VectorSubspace span(const FieldSpec& field, int ambient,
                               const std::vector<std::vector<FieldElement>>& vectors);
    static VectorSubspace zero_space(const FieldSpec& field, int ambient);
    static VectorSubspace full_space(const FieldSpec& field, int ambient);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const FieldSpec& field() const { return *field_; }
    const FieldSpec* field_ptr() const { return field_; }
    // Canonical RREF basis; structural equality of bases is subspace equality.
    const std::vector<std::vector<FieldElement>>& basis() const { return basis_; }

    bool contains(const std::vector<FieldElement>& v) const;
    Int cardinality() const { return pow_q(field_->cardinality(), dim()); }

    friend bool operator==(const VectorSubspace& a, const VectorSubspace& b) {
        return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const VectorSubspace& a, const VectorSubspace& b) { return !(a == b); }

private:
    VectorSubspace(const FieldSpec* f, int ambient, std::vector<std::vector<FieldElement>> basis)
        : field_(f), ambient_(ambient), basis_(std::move(basis)) {}
    const FieldSpec* field_;
    int ambient_;
    std::vector<std::vector<FieldElement>> basis_;
};

VectorSubspace column_space(const MatrixFq& m);

// Orthogonal complement under the standard dot product on F_q^k.
VectorSubspace subspace_dual(const VectorSubspace& u);

// Basis of Mat_U = {M in Mat(k x m) : column space of M inside U}: the
// matrices u e_j^t for basis vectors u of U and unit vectors e_j of F_q^m,
// in (basis row, column index) order. Size = m * dim(U).
std::vector<MatrixFq> mat_u_basis(const VectorSubspace& u, int m);

// All vectors of U in lexicographic order of the coefficient vector over the
// canonical basis (first basis vector's coefficient most significant).
std::vector<std::vector<FieldElement>> enumerate_vectors(const VectorSubspace& u,
                                                         std::uint64_t budget = kDefaultEnumBudget);

// Exhaustive subspace enumeration via canonical RREF matrices: every
// subspace appears exactly once; deterministic order.
std::vector<VectorSubspace> subspaces_of_dim(const FieldSpec& field, int k, int s,
                                             std::uint64_t budget = kDefaultEnumBudget);
std::vector<VectorSubspace> all_subspaces(const FieldSpec& field, int k,
                                          std::uint64_t budget = kDefaultEnumBudget);

}  // namespace rmc
