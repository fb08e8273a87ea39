#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cwords/word.hpp"

using namespace cwords;

TEST_CASE("parikh counts letters") {
    CHECK(parikh({3, 1, 2, 2, 0, 2, 1, 2, 3, 3}, 4) == ParikhVector{1, 2, 4, 3});
    CHECK(parikh({}, 3) == ParikhVector{0, 0, 0});
    CHECK(parikh({0, 1, 0}, 2) == ParikhVector{2, 1});
}

TEST_CASE("parikh rejects letters outside the alphabet") {
    CHECK_THROWS_WITH_AS(parikh({0, 3, 1}, 3), doctest::Contains("position 2"),
                         std::out_of_range);
    CHECK_THROWS_AS(parikh({-1}, 2), std::out_of_range);
}

TEST_CASE("prefix_sums") {
    CHECK(prefix_sums({}) == PrefixSums{0});
    CHECK(prefix_sums({0, 1, 0, -1}) == PrefixSums{0, 0, 1, 1, 0});
    CHECK(prefix_sums({1, 2, 3}) == PrefixSums{0, 1, 3, 6});
}

TEST_CASE("parse_word auto-detects the style") {
    CHECK(parse_word("0102010") == Word{0, 1, 0, 2, 0, 1, 0});
    CHECK(parse_word("0,1,-1,1") == Word{0, 1, -1, 1});
    CHECK(parse_word("") == Word{});
    CHECK(parse_word("5") == Word{5});
    CHECK(parse_word("12,") == Word{12});
    CHECK(parse_word(" 1 , 2 ") == Word{1, 2});
    CHECK(parse_word("-128,127") == Word{-128, 127});
}

TEST_CASE("parse_word reports the offending offset") {
    CHECK_THROWS_AS(parse_word("01a2"), ParseError);
    try {
        parse_word("01a2");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
    }
    CHECK_THROWS_AS(parse_word("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_word("1,200"), ParseError);  // out of letter range
    CHECK_THROWS_AS(parse_word("1,x"), ParseError);
    CHECK_THROWS_AS(parse_word("-"), ParseError);
}

TEST_CASE("render_word") {
    CHECK(render_word({0, 1, 0, 2}, Style::compact) == "0102");
    CHECK(render_word({0, 1, -1, 1}, Style::csv) == "0,1,-1,1");
    CHECK(render_word({}, Style::compact) == "");
    CHECK(render_word({}, Style::csv) == "");
    CHECK(render_word({12}, Style::csv) == "12,");
    CHECK_THROWS_AS(render_word({-1}, Style::compact), std::invalid_argument);
    CHECK_THROWS_AS(render_word({10}, Style::compact), std::invalid_argument);
}

TEST_CASE("round trips and counting invariants on random words") {
    std::mt19937 rng(20090515);
    std::uniform_int_distribution<int> len_dist(0, 40);
    std::uniform_int_distribution<int> digit(0, 9);
    std::uniform_int_distribution<int> any(-128, 127);
    for (int iter = 0; iter < 500; ++iter) {
        Word digits(len_dist(rng)), wide(len_dist(rng));
        for (auto& a : digits) a = (Letter)digit(rng);
        for (auto& a : wide) a = (Letter)any(rng);

        CHECK(parse_word(render_word(digits, Style::compact)) == digits);
        CHECK(parse_word(render_word(digits, Style::csv)) == digits);
        CHECK(parse_word(render_word(wide, Style::csv)) == wide);

        PrefixSums p = prefix_sums(wide);
        CHECK(p.size() == wide.size() + 1);
        long long total = 0;
        for (Letter a : wide) total += a;
        CHECK(p.back() == total);

        ParikhVector counts = parikh(digits, 10);
        long long count_sum = 0;
        for (long long c : counts) count_sum += c;
        CHECK(count_sum == (long long)digits.size());
    }
}
