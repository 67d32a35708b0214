#include "rmc/delsarte.hpp"

#include <algorithm>
#include <utility>

#include "rmc/errors.hpp"
#include "rmc/linalg.hpp"

namespace rmc {

namespace {

std::vector<FieldElement> flatten(const MatrixFq& m) { return m.flat(); }

std::vector<MatrixFq> unflatten_rows(const FieldSpec& f, int k, int m,
                                     const std::vector<std::vector<FieldElement>>& rows) {
    std::vector<MatrixFq> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(MatrixFq::from_flat(f, k, m, r));
    return out;
}

Int enum_cost(const FieldSpec& f, int dim) {
    return pow_q(f.cardinality(), static_cast<unsigned>(dim));
}

}  // namespace

DelsarteCode DelsarteCode::from_generators(const std::vector<MatrixFq>& gens) {
    if (gens.empty()) throw domain_error("generator list is empty and no shape was given");
    return from_generators(gens.front().field(), gens.front().rows(), gens.front().cols(), gens);
}

DelsarteCode DelsarteCode::from_generators(const FieldSpec& field, int k, int m,
                                           const std::vector<MatrixFq>& gens) {
    if (k < 1 || m < 1) throw domain_error("matrix shape must be positive");
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
        if (&g.field() != &field) throw field_mismatch_error("generators live in different fields");
        if (g.rows() != k || g.cols() != m) throw domain_error("generators have mixed shapes");
        rows.push_back(flatten(g));
    }
    linalg::rref(rows);
    return DelsarteCode(&field, k, m, unflatten_rows(field, k, m, rows));
}

DelsarteCode DelsarteCode::zero_code(const FieldSpec& field, int k, int m) {
    return from_generators(field, k, m, {});
}

DelsarteCode DelsarteCode::full_code(const FieldSpec& field, int k, int m) {
    std::vector<MatrixFq> gens;
    gens.reserve(static_cast<std::size_t>(k) * m);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j) {
            MatrixFq e(field, k, m);
            e.set(i, j, field.one());
            gens.push_back(e);
        }
    return from_generators(field, k, m, gens);
}

std::vector<std::vector<FieldElement>> DelsarteCode::flattened_basis() const {
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(gens_.size());
    for (const auto& g : gens_) rows.push_back(g.flat());
    return rows;
}

bool DelsarteCode::contains(const MatrixFq& mat) const {
    if (&mat.field() != field_) throw field_mismatch_error("matrix field differs from code field");
    if (mat.rows() != k_ || mat.cols() != m_) throw domain_error("matrix shape differs from code shape");
    auto basis = flattened_basis();
    return linalg::in_row_space(basis, mat.flat());
}

DelsarteCode dual(const DelsarteCode& c) {
    auto rows = c.flattened_basis();
    auto ker = linalg::kernel(rows, c.k() * c.m(), c.field().zero(), c.field().one());
    std::vector<MatrixFq> gens;
    gens.reserve(ker.size());
    for (const auto& r : ker) gens.push_back(MatrixFq::from_flat(c.field(), c.k(), c.m(), r));
    return DelsarteCode::from_generators(c.field(), c.k(), c.m(), gens);
}

DelsarteCode intersect(const DelsarteCode& a, const DelsarteCode& b) {
    if (a.field_ptr() != b.field_ptr()) throw field_mismatch_error("codes live in different fields");
    if (a.k() != b.k() || a.m() != b.m()) throw domain_error("codes have different shapes");
    auto rows = linalg::intersection(a.flattened_basis(), b.flattened_basis(), a.k() * a.m(),
                                     a.field().zero());
    std::vector<MatrixFq> gens;
    for (const auto& r : rows) gens.push_back(MatrixFq::from_flat(a.field(), a.k(), a.m(), r));
    return DelsarteCode::from_generators(a.field(), a.k(), a.m(), gens);
}

DelsarteCode sum(const DelsarteCode& a, const DelsarteCode& b) {
    if (a.field_ptr() != b.field_ptr()) throw field_mismatch_error("codes live in different fields");
    if (a.k() != b.k() || a.m() != b.m()) throw domain_error("codes have different shapes");
    std::vector<MatrixFq> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return DelsarteCode::from_generators(a.field(), a.k(), a.m(), gens);
}

DelsarteCode transpose_code(const DelsarteCode& c) {
    std::vector<MatrixFq> gens;
    gens.reserve(c.generators().size());
    for (const auto& g : c.generators()) gens.push_back(g.transpose());
    return DelsarteCode::from_generators(c.field(), c.m(), c.k(), gens);
}

DelsarteCode mat_u_code(const VectorSubspace& u, int m) {
    return DelsarteCode::from_generators(u.field(), u.ambient_dim(), m, mat_u_basis(u, m));
}

void for_each_codeword(const DelsarteCode& c, const std::function<void(const MatrixFq&)>& fn,
                       std::uint64_t budget) {
    if (enum_cost(c.field(), c.dim()) > budget)
        throw budget_error("codeword enumeration exceeds the budget");
    const FieldSpec& f = c.field();
    const std::uint32_t q = f.cardinality();
    const int dim = c.dim();
    // scaled[l][v-1] = element(v) * generator l, so each step of the walk is
    // a single preassembled add.
    std::vector<std::vector<MatrixFq>> scaled(static_cast<std::size_t>(dim));
    for (int l = 0; l < dim; ++l) {
        scaled[l].reserve(q - 1);
        for (std::uint32_t v = 1; v < q; ++v) scaled[l].push_back(f.element(v) * c.generators()[l]);
    }
    std::vector<MatrixFq> scratch(static_cast<std::size_t>(dim) + 1, MatrixFq(f, c.k(), c.m()));
    auto rec = [&](auto&& self, int level) -> void {
        if (level == dim) {
            fn(scratch[level]);
            return;
        }
        scratch[level + 1] = scratch[level];
        self(self, level + 1);
        for (std::uint32_t v = 1; v < q; ++v) {
            scratch[level + 1] = scratch[level];
            scratch[level + 1] += scaled[level][v - 1];
            self(self, level + 1);
        }
    };
    rec(rec, 0);
}

namespace {

RankDistribution distribution_by_enumeration(const DelsarteCode& c, std::uint64_t budget) {
    const int minkm = std::min(c.k(), c.m());
    std::vector<Int> counts(static_cast<std::size_t>(minkm) + 1, Int(0));
    for_each_codeword(
        c, [&](const MatrixFq& w) { counts[static_cast<std::size_t>(rank(w))] += 1; }, budget);
    return RankDistribution(c.field().cardinality(), c.k(), c.m(), counts);
}

}  // namespace

RankDistResult rank_distribution_with_route(const DelsarteCode& c, std::uint64_t budget) {
    const Int primal = enum_cost(c.field(), c.dim());
    if (primal <= budget) return {distribution_by_enumeration(c, budget), DistRoute::Enumeration};
    const Int dual_side = enum_cost(c.field(), c.k() * c.m() - c.dim());
    if (dual_side <= budget) {
        DelsarteCode d = dual(c);
        RankDistribution b = distribution_by_enumeration(d, budget);
        return {dual_distribution_recursive(b, d.dim()), DistRoute::DualTransform};
    }
    throw budget_error("rank distribution needs " + primal.str() + " (primal) or " +
                       dual_side.str() + " (dual) codewords; budget is " + std::to_string(budget));
}

RankDistribution rank_distribution(const DelsarteCode& c, std::uint64_t budget) {
    return rank_distribution_with_route(c, budget).dist;
}

int min_rank(const DelsarteCode& c, std::uint64_t budget) {
    if (c.dim() == 0) throw domain_error("min rank of the zero code is undefined");
    RankDistribution d = rank_distribution(c, budget);
    for (int r = 1; r <= d.max_index(); ++r)
        if (d.at(r) > 0) return r;
    throw domain_error("rank distribution of a nonzero code has no nonzero entry");
}

int max_rank(const DelsarteCode& c, std::uint64_t budget) {
    if (c.dim() == 0) return 0;
    RankDistribution d = rank_distribution(c, budget);
    for (int r = d.max_index(); r >= 1; --r)
        if (d.at(r) > 0) return r;
    return 0;
}

bool is_mrd(const DelsarteCode& c, std::uint64_t budget) {
    if (c.dim() == 0) return true;
    const int d = min_rank(c, budget);
    const int bound = std::max(c.k(), c.m()) * (std::min(c.k(), c.m()) - d + 1);
    return c.dim() == bound;
}

bool is_optimal_anticode(const DelsarteCode& c, std::uint64_t budget) {
    return c.dim() == std::max(c.k(), c.m()) * max_rank(c, budget);
}

}  // namespace rmc
