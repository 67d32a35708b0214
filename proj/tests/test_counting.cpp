#include "doctest.h"

#include <cstdint>
#include <map>
#include <sstream>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "rmc/counting.hpp"
#include "rmc/errors.hpp"
#include "rmc/matrix_space.hpp"
#include "rmc/qcalc.hpp"

using namespace rmc;

TEST_CASE("census of 2x2 binary matrices, frozen") {
    CensusTable t = census_bruteforce(2, 2, 2);
    CHECK(t.rank_count(0) == 1);
    CHECK(t.rank_count(1) == 9);
    CHECK(t.rank_count(2) == 6);
    CHECK(t.count(1, 1, 0) == 5);
    CHECK(t.count(1, 1, 1) == 4);
    CHECK(t.count(1, 2, 0) == 3);
    CHECK(t.count(1, 2, 1) == 6);
    CHECK(t.count(2, 1, 0) == 2);
    CHECK(t.count(2, 1, 1) == 4);
    CHECK(t.count(2, 2, 0) == 4);  // trace-zero invertibles
    CHECK(t.count(2, 2, 1) == 2);
    CHECK(t.count(0, 1, 0) == 1);
    CHECK(t.count(0, 2, 1) == 0);
}

TEST_CASE("independent recount agrees with census and closed forms") {
    for (auto [p, n, k, m] : {std::tuple<unsigned, unsigned, int, int>{2, 1, 2, 2},
                              {2, 1, 2, 3},
                              {3, 1, 2, 2},
                              {2, 2, 2, 2},
                              {2, 1, 3, 3}}) {
        auto f = FieldSpec::get(p, n);
        const std::uint32_t q = f->cardinality();
        const int cells = k * m;
        // tallies[{r, h, value}] with h = 0 for the rank marginal (value 0)
        std::map<std::tuple<int, int, std::uint32_t>, Int> tally;
        std::vector<std::uint32_t> digits(static_cast<std::size_t>(cells), 0);
        for (;;) {
            MatrixFq a(*f, k, m);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < m; ++j)
                    a.set(i, j, f->element(digits[static_cast<std::size_t>(i * m + j)]));
            const int r = oracle::rank_by_rowspan(a);
            tally[{r, 0, 0}] += 1;
            FieldElement tr = f->zero();
            for (int h = 1; h <= std::min(k, m); ++h) {
                tr = tr + a.at(h - 1, h - 1);
                tally[{r, h, tr.value()}] += 1;
            }
            int pos = cells - 1;
            while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == q - 1)
                digits[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0) break;
            digits[static_cast<std::size_t>(pos)] += 1;
        }

        CensusTable t = census_bruteforce(q, k, m);
        auto got = [&](int r, int h, std::uint32_t v) {
            auto it = tally.find({r, h, v});
            return it == tally.end() ? Int(0) : it->second;
        };
        for (int r = 0; r <= std::min(k, m); ++r) {
            CHECK(got(r, 0, 0) == t.rank_count(r));
            CHECK(got(r, 0, 0) == count_rank(q, k, m, r));
            for (int h = 1; h <= std::min(k, m); ++h) {
                CHECK(got(r, h, 0) == t.count(r, h, 0));
                CHECK(got(r, h, 0) == count_rank_htrace_recursive(q, k, m, r, h));
                CHECK(got(r, h, 0) == count_rank_htrace_explicit(q, k, m, r, h));
                for (std::uint32_t v = 1; v < q; ++v) {
                    CHECK(got(r, h, v) == t.count(r, h, v));
                    CHECK(got(r, h, v) == count_rank_trace_value(q, k, m, r, h, v));
                }
            }
        }
    }
}

TEST_CASE("closed-form routes agree and satisfy the marginal identities") {
    for (auto [q, k, m] : {std::tuple<std::uint32_t, int, int>{2, 3, 4},
                           {3, 2, 3},
                           {4, 2, 2},
                           {5, 2, 2},
                           {9, 2, 2},
                           {4, 3, 4}}) {
        Int rank_total = 0;
        for (int r = 0; r <= k; ++r) rank_total += count_rank(q, k, m, r);
        CHECK(rank_total == pow_q(q, static_cast<unsigned>(k * m)));
        for (int h = 1; h <= k; ++h) {
            Int zero_total = 0;
            for (int r = 0; r <= k; ++r) {
                const Int rec = count_rank_htrace_recursive(q, k, m, r, h);
                CHECK(rec == count_rank_htrace_explicit(q, k, m, r, h));
                CHECK(rec >= 0);
                zero_total += rec;
                if (r > 0)
                    CHECK(count_rank(q, k, m, r) ==
                          rec + Int(q - 1) * count_rank_trace_value(q, k, m, r, h, 1));
            }
            CHECK(zero_total == pow_q(q, static_cast<unsigned>(k * m - 1)));
        }
    }
}

TEST_CASE("3x4 matrices over the four-element field, by rank and partial trace") {
    const Int expect[3][4] = {
        {Int(1), Int(2283), Int(381780), Int(3810240)},
        {Int(1), Int(1515), Int(336468), Int(3856320)},
        {Int(1), Int(1323), Int(337428), Int(3855552)},
    };
    for (int h = 1; h <= 3; ++h) {
        Int sum = 0;
        for (int r = 0; r <= 3; ++r) {
            CHECK(count_rank_htrace_recursive(4, 3, 4, r, h) == expect[h - 1][r]);
            CHECK(count_rank_htrace_explicit(4, 3, 4, r, h) == expect[h - 1][r]);
            sum += expect[h - 1][r];
        }
        CHECK(sum == pow_q(4, 11));
    }
}

TEST_CASE("dispatcher and shape normalization") {
    CHECK(count_matrices(2, 2, 2, 1, 0) == count_rank(2, 2, 2, 1));
    CHECK(count_matrices(2, 2, 2, 1, 2) == count_rank_htrace_recursive(2, 2, 2, 1, 2));
    for (int r = 0; r <= 2; ++r) CHECK(count_rank(3, 3, 2, r) == count_rank(3, 2, 3, r));
    CensusTable t = census_bruteforce(2, 3, 2);
    CHECK(t.k() == 2);
    CHECK(t.m() == 3);
    CHECK(t.count(1, 2, 0) == count_rank_htrace_recursive(2, 2, 3, 1, 2));
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(count_rank(2, 2, 2, 3), domain_error);
    CHECK_THROWS_AS(count_rank(2, 2, 2, -1), domain_error);
    CHECK_THROWS_AS(count_rank(2, 0, 2, 0), domain_error);
    CHECK_THROWS_AS(count_matrices(2, 2, 2, 1, 3), domain_error);
    CHECK_THROWS_AS(count_rank_trace_value(3, 2, 2, 1, 1, 0), domain_error);
    CHECK_THROWS_AS(count_rank_trace_value(3, 2, 2, 1, 1, 3), domain_error);
    CHECK_THROWS_AS(census_bruteforce(2, 3, 3, 100), budget_error);
    CHECK_THROWS_AS(census_bruteforce(6, 2, 2), domain_error);
    CensusTable t = census_bruteforce(2, 2, 2);
    CHECK_THROWS_AS(t.count(1, 0, 0), domain_error);
    CHECK_THROWS_AS(t.count(1, 3, 0), domain_error);
    CHECK_THROWS_AS(t.count(1, 1, 2), domain_error);
}

TEST_CASE("csv writer emits the full table in a fixed order") {
    std::ostringstream os;
    write_census_csv(os, census_bruteforce(2, 2, 2));
    CHECK(os.str() ==
          "q,k,m,r,h,trace_value,count\n"
          "2,2,2,0,0,-,1\n"
          "2,2,2,1,0,-,9\n"
          "2,2,2,2,0,-,6\n"
          "2,2,2,0,1,0,1\n"
          "2,2,2,0,1,1,0\n"
          "2,2,2,1,1,0,5\n"
          "2,2,2,1,1,1,4\n"
          "2,2,2,2,1,0,2\n"
          "2,2,2,2,1,1,4\n"
          "2,2,2,0,2,0,1\n"
          "2,2,2,0,2,1,0\n"
          "2,2,2,1,2,0,3\n"
          "2,2,2,1,2,1,6\n"
          "2,2,2,2,2,0,4\n"
          "2,2,2,2,2,1,2\n");
}
