#pragma once

// Randomized property suite behind `rankcodes verify` and the acceptance
// tests. Every property draws from its own deterministically derived RNG
// stream (seed xor hash of the property name), so reports are byte-identical
// for a fixed configuration and independent of property selection order.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rmc/delsarte.hpp"
#include "rmc/finite_field.hpp"
#include "rmc/gabidulin.hpp"
#include "rmc/matrix_space.hpp"

namespace rmc {

struct VerifyConfig {
    std::uint64_t seed = 1;
    int trials = 20;           // per-property repetition count
    std::uint32_t max_q = 3;   // largest base field drawn for random codes
    int max_dim = 12;          // largest k*m for random code shapes
    std::uint64_t enum_budget = kDefaultEnumBudget;
    std::string only;          // run a single property when nonempty
};

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;  // case count on pass, first counterexample on fail
};

std::vector<std::string> verification_property_names();

// Runs all properties (or cfg.only). Throws domain_error for an unknown
// property name; failures are results, not errors.
std::vector<PropertyResult> run_verification(const VerifyConfig& cfg);

// Deterministic generators shared by the verification suite and the tests.
namespace gen {

using Rng = std::mt19937_64;

// Uniform-enough draw from [0, n); plain modulo keeps the stream portable.
inline std::uint64_t below(Rng& rng, std::uint64_t n) { return rng() % n; }

// Prime powers in [2, max_q].
std::vector<std::uint32_t> field_sizes_up_to(std::uint32_t max_q);
FieldSpecPtr random_field(Rng& rng, std::uint32_t max_q);

MatrixFq random_matrix(Rng& rng, const FieldSpec& f, int rows, int cols);
MatrixFq random_invertible(Rng& rng, const FieldSpec& f, int n);
// Exact dimension; dim <= rows*cols.
DelsarteCode random_code(Rng& rng, const FieldSpec& f, int rows, int cols, int dim);
VectorSubspace random_subspace(Rng& rng, const FieldSpec& f, int ambient, int dim);

ExtElement random_ext_element(Rng& rng, const ExtensionSpec& e);
std::vector<ExtElement> random_ext_vector(Rng& rng, const ExtensionSpec& e, int k);
GabidulinCode random_gabidulin(Rng& rng, const ExtensionSpec& e, int length, int dim);
FieldBasis random_basis(Rng& rng, const ExtensionSpec& e);

}  // namespace gen

}  // namespace rmc
