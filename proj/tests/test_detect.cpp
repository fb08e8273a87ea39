#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cwords/detect.hpp"
#include "oracles.hpp"

using namespace cwords;

TEST_CASE("find_square examples") {
    auto occ = find_square({0, 1, 0, 1});
    REQUIRE(occ);
    CHECK(occ->start == 1);
    CHECK(occ->block_len == 2);
    CHECK(occ->blocks == 2);

    CHECK_FALSE(find_square({0, 1, 0, 2, 0, 1, 0}));  // x_{2,3} is squarefree
    CHECK_FALSE(find_square({}));
}

TEST_CASE("find_abelian_power examples") {
    // 0110 holds both the literal square 11 (end 3) and the permutation
    // pair 01|10 (end 4); the (end, block length) order picks the former
    auto occ = find_abelian_power({0, 1, 1, 0}, 2);
    REQUIRE(occ);
    CHECK(occ->start == 2);
    CHECK(occ->block_len == 1);
    // 012|102: a genuine permutation pair in a squarefree word
    auto perm = find_abelian_power({0, 1, 2, 1, 0, 2}, 2);
    REQUIRE(perm);
    CHECK(perm->start == 1);
    CHECK(perm->block_len == 3);
    CHECK(oracle::validates({0, 1, 2, 1, 0, 2}, *perm));

    // "deeded" coded d -> 0, e -> 1 is an abelian cube
    auto cube = find_abelian_power({0, 1, 1, 0, 1, 0}, 3);
    REQUIRE(cube);
    CHECK(cube->start == 1);
    CHECK(cube->block_len == 2);
    CHECK(cube->blocks == 3);

    CHECK_FALSE(find_abelian_power({0, 1, 2}, 2));
    CHECK_THROWS_AS(find_abelian_power({0, 1}, 1), std::invalid_argument);
}

TEST_CASE("find_sum_square examples") {
    auto occ = find_sum_square({1, 2, 3, 0});
    REQUIRE(occ);
    CHECK(occ->start == 1);
    CHECK(occ->block_len == 2);
    CHECK(occ->block_sums == std::vector<long long>{3, 3});

    CHECK_FALSE(find_sum_square({1, -1}));
    CHECK_FALSE(find_sum_square({0}));
}

TEST_CASE("find_congruential_power examples") {
    CHECK_FALSE(find_congruential_power({0, 1, 0}, 2, 2));

    auto occ = find_congruential_power({0, 1, 0, 0}, 2, 2);
    REQUIRE(occ);
    CHECK(occ->start == 3);
    CHECK(occ->block_len == 1);
    CHECK(occ->block_sums == std::vector<long long>{0, 0});

    // 1200 holds 12|00 (sums 0,0 mod 3) and 0|0; both end at 4, and the
    // block-length tie-break picks m=1
    auto occ2 = find_congruential_power({1, 2, 0, 0}, 2, 3);
    REQUIRE(occ2);
    CHECK(occ2->start == 3);
    CHECK(occ2->block_len == 1);
    CHECK(occ2->block_sums == std::vector<long long>{0, 0});
    // the 12|00 reading validates as well
    Occurrence wide{1, 2, 2, {0, 0}, PatternKind::congruential};
    CHECK(oracle::validates({1, 2, 0, 0}, wide, 3));

    CHECK_THROWS_AS(find_congruential_power({0}, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(find_congruential_power({0}, 2, 1), std::invalid_argument);
}

TEST_CASE("find_adjacent_equal_nonzero_sum examples") {
    auto occ = find_adjacent_equal_nonzero_sum({1, 2, 3});
    REQUIRE(occ);
    CHECK(occ->i == 1);
    CHECK(occ->j == 2);
    CHECK(occ->j_prime == 3);
    CHECK(occ->common_sum == 3);

    CHECK_FALSE(find_adjacent_equal_nonzero_sum({0, 0}));  // zero sums excluded
    CHECK_FALSE(find_adjacent_equal_nonzero_sum({}));
}

TEST_CASE("extend_check examples") {
    SUBCASE("appending 0 to 010 creates a power") {
        CongruentialState state(2, 2);
        for (Letter a : Word{0, 1, 0}) CHECK_FALSE(state.push(a));
        auto [next, created] = extend_check(state, 0, 2, 2);
        CHECK(created);
        CHECK(next.length() == 4);
    }
    SUBCASE("a single letter cannot host two blocks") {
        CongruentialState state(2, 2);
        auto [next, created] = extend_check(state, 5, 2, 2);
        CHECK_FALSE(created);
    }
    SUBCASE("010 stays avoiding") {
        CongruentialState state(2, 2);
        state.push(0);
        state.push(1);
        CHECK_FALSE(state.would_create(0));
    }
    SUBCASE("mismatched parameters are rejected") {
        CongruentialState state(2, 2);
        CHECK_THROWS_AS(extend_check(state, 0, 2, 3), std::invalid_argument);
        CHECK_THROWS_AS(extend_check(state, 0, 3, 2), std::invalid_argument);
    }
}

namespace {

const std::vector<std::vector<Letter>> test_alphabets = {
    {0, 1},
    {0, 1, 2},
    {0, 1, 2, 3, 4},
    {-1, 0, 1},
    {-2, -1, 0, 1, 2},
    {-3, 2, 5},
};

}  // namespace

TEST_CASE("detectors agree with the naive oracles and their hits validate") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> r_dist(2, 4), k_dist(2, 6);
    for (int iter = 0; iter < 2000; ++iter) {
        const auto& alphabet = test_alphabets[iter % test_alphabets.size()];
        Word w = oracle::random_word(rng, 40, alphabet);
        int r = r_dist(rng), k = k_dist(rng);

        auto sq = find_square(w);
        auto sq_ref = oracle::square(w);
        REQUIRE(sq.has_value() == sq_ref.has_value());
        if (sq) {
            CHECK(sq->start == sq_ref->start);
            CHECK(sq->block_len == sq_ref->m);
            CHECK(oracle::validates(w, *sq));
        }

        auto ab = find_abelian_power(w, r);
        auto ab_ref = oracle::abelian(w, r);
        REQUIRE(ab.has_value() == ab_ref.has_value());
        if (ab) {
            CHECK(ab->start == ab_ref->start);
            CHECK(ab->block_len == ab_ref->m);
            CHECK(oracle::validates(w, *ab));
        }

        auto ss = find_sum_square(w);
        auto ss_ref = oracle::sum_square(w);
        REQUIRE(ss.has_value() == ss_ref.has_value());
        if (ss) {
            CHECK(ss->start == ss_ref->start);
            CHECK(ss->block_len == ss_ref->m);
            CHECK(oracle::validates(w, *ss));
        }

        auto cg = find_congruential_power(w, r, k);
        auto cg_ref = oracle::congruential(w, r, k);
        REQUIRE(cg.has_value() == cg_ref.has_value());
        if (cg) {
            CHECK(cg->start == cg_ref->start);
            CHECK(cg->block_len == cg_ref->m);
            CHECK(oracle::validates(w, *cg, k));
        }

        auto adj = find_adjacent_equal_nonzero_sum(w);
        auto adj_ref = oracle::adjacent_equal_nonzero(w);
        REQUIRE(adj.has_value() == adj_ref.has_value());
        if (adj) {
            CHECK(adj->i == adj_ref->i);
            CHECK(adj->j == adj_ref->j);
            CHECK(adj->j_prime == adj_ref->j_prime);
            CHECK(oracle::validates_adjacent(w, *adj));
        }
    }
}

TEST_CASE("incremental and batch congruential detection agree") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> r_dist(2, 4), k_dist(2, 5);
    for (int iter = 0; iter < 300; ++iter) {
        const auto& alphabet = test_alphabets[iter % test_alphabets.size()];
        Word w = oracle::random_word(rng, 50, alphabet);
        int r = r_dist(rng), k = k_dist(rng);

        CongruentialState state(r, k);
        Word prefix;
        int first_created = -1;
        for (Letter a : w) {
            bool created = state.push(a);
            prefix.push_back(a);
            CHECK(created == oracle::congruential_ends_at_last(prefix, r, k));
            if (created && first_created < 0) first_created = (int)prefix.size();
        }
        // the first position flagged is the end of the batch detector's
        // first-reported occurrence
        auto batch = find_congruential_power(w, r, k);
        if (first_created < 0) {
            CHECK_FALSE(batch);
        } else {
            REQUIRE(batch);
            CHECK(batch->end() == first_created);
        }
    }
}

TEST_CASE("congruential powers are monotone under extension") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> k_dist(2, 5);
    for (int iter = 0; iter < 200; ++iter) {
        const auto& alphabet = test_alphabets[iter % test_alphabets.size()];
        Word w = oracle::random_word(rng, 25, alphabet);
        int k = k_dist(rng);
        if (!find_congruential_power(w, 2, k)) continue;
        Word extended = w;
        for (int extra = 0; extra < 5; ++extra) {
            extended.push_back(alphabet[extra % alphabet.size()]);
            CHECK(find_congruential_power(extended, 2, k).has_value());
        }
    }
}

TEST_CASE("pattern classes specialize as expected") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> k_dist(2, 6);
    for (int iter = 0; iter < 1000; ++iter) {
        const auto& alphabet = test_alphabets[iter % test_alphabets.size()];
        Word w = oracle::random_word(rng, 30, alphabet);
        int k = k_dist(rng);
        bool has_square = find_square(w).has_value();
        bool has_abelian = find_abelian_power(w, 2).has_value();
        bool has_sum = find_sum_square(w).has_value();
        bool has_cong = find_congruential_power(w, 2, k).has_value();
        if (has_square) CHECK(has_abelian);
        if (has_abelian) CHECK(has_sum);
        if (has_sum) CHECK(has_cong);
    }
}
