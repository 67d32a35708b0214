#pragma once

// Delsarte rank-metric codes: F_q-linear subspaces of Mat(k x m, F_q).
// Codes are canonicalized on construction (reduced row echelon form of the
// row-major flattenings), so equality is structural. Duality is with respect
// to <M,N> = Tr(M N^t), which in flattened coordinates is the standard dot
// product.

#include <cstdint>
#include <functional>
#include <vector>

#include "rmc/matrix_space.hpp"
#include "rmc/qcalc.hpp"

namespace rmc {

class DelsarteCode {
public:
    // Shape and field taken from the generator list (must be nonempty).
    static DelsarteCode from_generators(const std::vector<MatrixFq>& gens);
    // Explicit shape; the generator list may be empty (zero code).
    static DelsarteCode from_generators(const FieldSpec& field, int k, int m,
                                        const std::vector<MatrixFq>& gens);
    static DelsarteCode zero_code(const FieldSpec& field, int k, int m);
    static DelsarteCode full_code(const FieldSpec& field, int k, int m);

    int k() const { return k_; }
    int m() const { return m_; }
    int dim() const { return static_cast<int>(gens_.size()); }
    const FieldSpec& field() const { return *field_; }
    const FieldSpec* field_ptr() const { return field_; }
    // Canonical generators: RREF of the flattened span, one matrix per row.
    const std::vector<MatrixFq>& generators() const { return gens_; }
    std::vector<std::vector<FieldElement>> flattened_basis() const;

    Int cardinality() const { return pow_q(field_->cardinality(), static_cast<unsigned>(dim())); }
    bool contains(const MatrixFq& mat) const;

    friend bool operator==(const DelsarteCode& a, const DelsarteCode& b) {
        return a.field_ == b.field_ && a.k_ == b.k_ && a.m_ == b.m_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const DelsarteCode& a, const DelsarteCode& b) { return !(a == b); }

private:
    DelsarteCode(const FieldSpec* f, int k, int m, std::vector<MatrixFq> gens)
        : field_(f), k_(k), m_(m), gens_(std::move(gens)) {}
    const FieldSpec* field_;
    int k_, m_;
    std::vector<MatrixFq> gens_;
};

// Trace-orthogonal dual; dim(dual) = km - dim.
DelsarteCode dual(const DelsarteCode& c);

DelsarteCode intersect(const DelsarteCode& a, const DelsarteCode& b);
DelsarteCode sum(const DelsarteCode& a, const DelsarteCode& b);
DelsarteCode transpose_code(const DelsarteCode& c);

// Mat_U = {M : column space of M inside U} as a code with m columns.
DelsarteCode mat_u_code(const VectorSubspace& u, int m);

// Visits all q^dim codewords in lexicographic order of the coefficient
// vector over the canonical generators (first generator most significant).
void for_each_codeword(const DelsarteCode& c, const std::function<void(const MatrixFq&)>& fn,
                       std::uint64_t budget = kDefaultEnumBudget);

enum class DistRoute { Enumeration, DualTransform };

struct RankDistResult {
    RankDistribution dist;
    DistRoute route;
};

// Rank distribution. Enumerates the code if q^dim fits the budget, otherwise
// enumerates the dual and applies the duality transform; throws budget_error
// if both sides exceed the budget.
RankDistResult rank_distribution_with_route(const DelsarteCode& c,
                                            std::uint64_t budget = kDefaultEnumBudget);
RankDistribution rank_distribution(const DelsarteCode& c,
                                   std::uint64_t budget = kDefaultEnumBudget);

// Smallest nonzero-codeword rank; undefined (throws) on the zero code.
int min_rank(const DelsarteCode& c, std::uint64_t budget = kDefaultEnumBudget);
// Largest codeword rank; 0 on the zero code.
int max_rank(const DelsarteCode& c, std::uint64_t budget = kDefaultEnumBudget);

// Size-optimality with respect to the Singleton-like bound:
// dim = max(k,m) * (min(k,m) - minrk + 1). The zero code counts as MRD.
bool is_mrd(const DelsarteCode& c, std::uint64_t budget = kDefaultEnumBudget);

// Optimal anticode: dim = max(k,m) * maxrk.
bool is_optimal_anticode(const DelsarteCode& c, std::uint64_t budget = kDefaultEnumBudget);

}  // namespace rmc
