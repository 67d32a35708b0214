#pragma once

// Gabidulin codes: F_{q^m}-linear subspaces of F_{q^m}^k with the rank
// weight, their expansion to Delsarte codes along a base-field basis, duality
// under the standard inner product, and the linearized-polynomial evaluation
// construction of MRD codes.

#include <cstdint>
#include <vector>

#include "rmc/delsarte.hpp"
#include "rmc/finite_field.hpp"

namespace rmc {

class GabidulinCode {
public:
    // Shape taken from the generators (must be nonempty).
    static GabidulinCode from_generators(const std::vector<std::vector<ExtElement>>& gens);
    // Explicit shape; the generator list may be empty (zero code).
    static GabidulinCode from_generators(const ExtensionSpec& ext, int length,
                                         const std::vector<std::vector<ExtElement>>& gens);
    static GabidulinCode zero_code(const ExtensionSpec& ext, int length);
    static GabidulinCode full_code(const ExtensionSpec& ext, int length);

    const ExtensionSpec& ext() const { return *ext_; }
    const ExtensionSpec* ext_ptr() const { return ext_; }
    int length() const { return k_; }
    // Dimension over the extension field F_{q^m}.
    int dim() const { return static_cast<int>(gens_.size()); }
    // Canonical generators: reduced row echelon form over F_{q^m}.
    const std::vector<std::vector<ExtElement>>& generators() const { return gens_; }

    bool contains(const std::vector<ExtElement>& v) const;

    friend bool operator==(const GabidulinCode& a, const GabidulinCode& b) {
        return a.ext_ == b.ext_ && a.k_ == b.k_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const GabidulinCode& a, const GabidulinCode& b) { return !(a == b); }

private:
    GabidulinCode(const ExtensionSpec* e, int k, std::vector<std::vector<ExtElement>> gens)
        : ext_(e), k_(k), gens_(std::move(gens)) {}
    const ExtensionSpec* ext_;
    int k_;
    std::vector<std::vector<ExtElement>> gens_;
};

// dim_{F_q} of the span of the entries; equals the matrix rank of any
// basis expansion.
int vector_rank(const std::vector<ExtElement>& a);

// Row i holds the coordinates of a[i] over G.
MatrixFq expand_matrix(const std::vector<ExtElement>& a, const FieldBasis& G);

// The F_q-span of {expand_matrix(c * g, G) : g generator, c in G}; dimension
// m * dim(C), same rank distribution as C.
DelsarteCode expand_code(const GabidulinCode& c, const FieldBasis& G);

// Dual under <a,b> = sum_i a_i b_i over F_{q^m}; dim k - dim(C).
GabidulinCode gabidulin_dual(const GabidulinCode& c);

// Rank distribution computed directly on F_{q^m}-codewords, independent of
// any expansion. (q^m)^dim must fit the budget.
RankDistribution gabidulin_rank_distribution(const GabidulinCode& c,
                                             std::uint64_t budget = kDefaultEnumBudget);

// p(x) = sum_i coeffs[i] x^{q^i}, an F_q-linear map on the extension.
class LinearizedPoly {
public:
    LinearizedPoly(const ExtensionSpec& ext, std::vector<ExtElement> coeffs);
    static LinearizedPoly zero(const ExtensionSpec& ext);
    static LinearizedPoly identity(const ExtensionSpec& ext);  // p(x) = x

    const ExtensionSpec& ext() const { return *ext_; }
    // Largest i with coeffs[i] != 0; -1 for the zero polynomial.
    int q_degree() const;
    const std::vector<ExtElement>& coeffs() const { return coeffs_; }

    friend bool operator==(const LinearizedPoly& a, const LinearizedPoly& b);
    friend bool operator!=(const LinearizedPoly& a, const LinearizedPoly& b) { return !(a == b); }

private:
    const ExtensionSpec* ext_;
    std::vector<ExtElement> coeffs_;  // trimmed
};

ExtElement linearized_eval(const LinearizedPoly& p, const ExtElement& a);

// Monic linearized polynomial of q-degree |u_basis| whose roots are exactly
// the F_q-span of u_basis, built by the composition recurrence
// p' = (x^q - p(b)^{q-1} x) o p. Dependent input elements are rejected.
LinearizedPoly subspace_polynomial(const ExtensionSpec& ext,
                                   const std::vector<ExtElement>& u_basis);

// Roots of p inside the extension, as an F_q-subspace in power-basis
// coordinates. Scans all q^m elements; budget-checked.
VectorSubspace roots_space(const LinearizedPoly& p, std::uint64_t budget = kDefaultEnumBudget);

// Evaluation of all linearized polynomials of q-degree <= k-d on k
// F_q-independent points: a Gabidulin code of dimension k-d+1 whose
// expansion is MRD with minimum rank d.
GabidulinCode evaluation_code(const ExtensionSpec& ext, const std::vector<ExtElement>& points,
                              int d);
// Default points 1, z, z^2, ..., z^{k-1} for the extension root z.
GabidulinCode evaluation_code(const ExtensionSpec& ext, int k, int d);

// Expands the dual along the dual basis of G and compares with the Delsarte
// dual of the expansion along G; true means the two agree as canonical codes.
bool check_orthobasis_duality(const GabidulinCode& c, const FieldBasis& G);

// Sampled intersection test for optimal anticodes: dim(C) must equal
// max(k,m) * D with 0 <= D <= min(k,m)-1; draws `trials` codes P*E*Q from a
// fixed MRD code E of minimum rank D+1 and checks every intersection with C
// is zero. One-sided: a false is definitive, while a pass on every trial is
// evidence, not proof (the exact predicate quantifies over all equivalents).
bool sampled_anticode_criterion(const DelsarteCode& c, int trials, std::uint64_t seed);

}  // namespace rmc
