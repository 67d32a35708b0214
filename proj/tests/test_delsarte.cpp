#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "rmc/delsarte.hpp"
#include "rmc/errors.hpp"
#include "rmc/qcalc.hpp"

using namespace rmc;

namespace {

MatrixFq mat(const FieldSpec& f, int k, int m, std::initializer_list<std::uint32_t> vals) {
    MatrixFq out(f, k, m);
    auto it = vals.begin();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j) out.set(i, j, f.element(*it++));
    return out;
}

// the worked 3x4 code over GF(3): dim 3, distribution (1,2,0,24)
DelsarteCode worked_example() {
    auto f = FieldSpec::get(3, 1);
    return DelsarteCode::from_generators(
        *f, 3, 4,
        {mat(*f, 3, 4, {1, 2, 0, 0, 0, 1, 0, 0, 0, 0, 2, 1}),
         mat(*f, 3, 4, {0, 2, 0, 0, 0, 0, 1, 2, 1, 1, 0, 0}),
         mat(*f, 3, 4, {0, 2, 0, 0, 0, 0, 1, 2, 1, 1, 1, 1})});
}

DelsarteCode random_code(std::mt19937_64& rng, const FieldSpec& f, int k, int m, int dim) {
    for (;;) {
        std::vector<MatrixFq> gens;
        for (int i = 0; i < dim; ++i) {
            MatrixFq g(f, k, m);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < m; ++c)
                    g.set(r, c, f.element(static_cast<std::uint32_t>(rng() % f.cardinality())));
            gens.push_back(std::move(g));
        }
        DelsarteCode c = DelsarteCode::from_generators(f, k, m, gens);
        if (c.dim() == dim) return c;
    }
}

}  // namespace

TEST_CASE("worked example: dimensions and rank distribution") {
    DelsarteCode c = worked_example();
    CHECK(c.dim() == 3);
    CHECK(c.cardinality() == 27);
    auto res = rank_distribution_with_route(c);
    CHECK(res.route == DistRoute::Enumeration);
    CHECK(res.dist == RankDistribution(3, 3, 4, {Int(1), Int(2), Int(0), Int(24)}));
    CHECK(min_rank(c) == 1);
    CHECK(max_rank(c) == 3);
    CHECK_FALSE(is_mrd(c));
    CHECK_FALSE(is_optimal_anticode(c));
}

TEST_CASE("worked example: dual distribution three independent ways") {
    DelsarteCode c = worked_example();
    const RankDistribution expect(3, 3, 4, {Int(1), Int(50), Int(3432), Int(16200)});
    // (a) kernel dual + enumeration
    DelsarteCode d = dual(c);
    CHECK(d.dim() == 9);
    CHECK(rank_distribution(d) == expect);
    // (b) recursive and (c) explicit transform of the primal distribution
    RankDistribution a = rank_distribution(c);
    CHECK(dual_distribution_recursive(a, c.dim()) == expect);
    CHECK(dual_distribution_explicit(a, c.dim()) == expect);
    // and the full-space orthogonality scan agrees with all of them
    auto scanned = oracle::dual_dist_bruteforce(c);
    for (int i = 0; i <= 3; ++i) CHECK(scanned[static_cast<std::size_t>(i)] == expect.at(i));
}

TEST_CASE("dual is an involution and respects the lattice") {
    std::mt19937_64 rng(11);
    auto f = FieldSpec::get(2, 1);
    for (int t = 0; t < 12; ++t) {
        DelsarteCode a = random_code(rng, *f, 2, 3, static_cast<int>(rng() % 7));
        DelsarteCode b = random_code(rng, *f, 2, 3, static_cast<int>(rng() % 7));
        CHECK(dual(dual(a)) == a);
        CHECK(dual(intersect(a, b)) == sum(dual(a), dual(b)));
        CHECK(dual(sum(a, b)) == intersect(dual(a), dual(b)));
    }
}

TEST_CASE("zero and full codes") {
    auto f = FieldSpec::get(2, 1);
    DelsarteCode z = DelsarteCode::zero_code(*f, 2, 2);
    DelsarteCode full = DelsarteCode::full_code(*f, 2, 2);
    CHECK(z.dim() == 0);
    CHECK(full.dim() == 4);
    CHECK(dual(z) == full);
    CHECK(dual(full) == z);
    CHECK(rank_distribution(z) == RankDistribution(2, 2, 2, {Int(1)}));
    CHECK(rank_distribution(full) == RankDistribution(2, 2, 2, {Int(1), Int(9), Int(6)}));
    CHECK(is_mrd(z));
    CHECK(is_mrd(full));
    CHECK(is_optimal_anticode(z));
    CHECK(is_optimal_anticode(full));
    CHECK(max_rank(z) == 0);
    CHECK_THROWS_AS(min_rank(z), domain_error);
}

TEST_CASE("transpose commutes with dual and preserves the distribution") {
    DelsarteCode c = worked_example();
    DelsarteCode t = transpose_code(c);
    CHECK(t.k() == 4);
    CHECK(t.m() == 3);
    CHECK(rank_distribution(t) == rank_distribution(c));
    CHECK(transpose_code(dual(c)) == dual(t));
}

TEST_CASE("containment and codeword iteration") {
    DelsarteCode c = worked_example();
    int count = 0;
    for_each_codeword(c, [&](const MatrixFq& w) {
        CHECK(c.contains(w));
        ++count;
    });
    CHECK(count == 27);
    auto f = FieldSpec::get(3, 1);
    CHECK_FALSE(c.contains(mat(*f, 3, 4, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})));
}

TEST_CASE("rank distribution routes through the dual when the budget forces it") {
    DelsarteCode d = dual(worked_example());  // dim 9, 3^9 = 19683 words
    auto forced = rank_distribution_with_route(d, 10000);
    CHECK(forced.route == DistRoute::DualTransform);
    auto direct = rank_distribution_with_route(d, 100000);
    CHECK(direct.route == DistRoute::Enumeration);
    CHECK(forced.dist == direct.dist);
    // both sides over budget
    CHECK_THROWS_AS(rank_distribution(d, 16), budget_error);
}

TEST_CASE("mat_u codes are optimal anticodes, as are their duals") {
    auto f = FieldSpec::get(2, 1);
    auto v = [&](std::initializer_list<std::uint32_t> vals) {
        std::vector<FieldElement> out;
        for (auto x : vals) out.push_back(f->element(x));
        return out;
    };
    VectorSubspace u = VectorSubspace::span(*f, 3, {v({1, 0, 0}), v({1, 1, 0})});
    DelsarteCode c = mat_u_code(u, 3);
    CHECK(c.dim() == 6);
    CHECK(max_rank(c) == 2);
    CHECK(is_optimal_anticode(c));
    CHECK(is_optimal_anticode(dual(c)));
    CHECK_FALSE(is_mrd(c));
}

TEST_CASE("last-rows-zero anticode written out explicitly") {
    auto f = FieldSpec::get(2, 1);
    std::vector<MatrixFq> gens;
    for (int i = 0; i < 1; ++i)
        for (int j = 0; j < 3; ++j) {
            MatrixFq e(*f, 2, 3);
            e.set(i, j, f->one());
            gens.push_back(std::move(e));
        }
    DelsarteCode c = DelsarteCode::from_generators(*f, 2, 3, gens);
    CHECK(c.dim() == 3);
    CHECK(max_rank(c) == 1);
    CHECK(is_optimal_anticode(c));
    CHECK(is_optimal_anticode(dual(c)));
}

TEST_CASE("mrd codes of every admissible minimum rank at 2x2 over GF(2)") {
    auto f = FieldSpec::get(2, 1);
    // d=2 needs dim 2; every nonzero word of this span is invertible
    DelsarteCode c2 = DelsarteCode::from_generators(
        *f, 2, 2, {mat(*f, 2, 2, {1, 0, 0, 1}), mat(*f, 2, 2, {0, 1, 1, 1})});
    CHECK(is_mrd(c2));
    CHECK(rank_distribution(c2) == mrd_distribution(2, 2, 2, 2));
    CHECK(is_mrd(dual(c2)));
    // a dim-2 code with a rank-1 word is not MRD
    DelsarteCode bad = DelsarteCode::from_generators(
        *f, 2, 2, {mat(*f, 2, 2, {1, 0, 0, 0}), mat(*f, 2, 2, {0, 0, 0, 1})});
    CHECK_FALSE(is_mrd(bad));
}

TEST_CASE("generator matrices must share the declared shape and field") {
    auto f2 = FieldSpec::get(2, 1);
    auto f3 = FieldSpec::get(3, 1);
    CHECK_THROWS_AS(
        DelsarteCode::from_generators(*f2, 2, 2, {mat(*f2, 2, 3, {0, 0, 0, 0, 0, 0})}),
        domain_error);
    CHECK_THROWS_AS(DelsarteCode::from_generators(*f2, 2, 2, {mat(*f3, 2, 2, {0, 0, 0, 0})}),
                    field_mismatch_error);
}

TEST_CASE("canonical generators make equality structural") {
    auto f = FieldSpec::get(2, 1);
    // same span, different presentations
    DelsarteCode a = DelsarteCode::from_generators(
        *f, 2, 2, {mat(*f, 2, 2, {1, 0, 0, 1}), mat(*f, 2, 2, {0, 1, 1, 0})});
    DelsarteCode b = DelsarteCode::from_generators(
        *f, 2, 2, {mat(*f, 2, 2, {1, 1, 1, 1}), mat(*f, 2, 2, {0, 1, 1, 0}),
                   mat(*f, 2, 2, {1, 0, 0, 1})});
    CHECK(a == b);
    CHECK(a.generators() == b.generators());
}
