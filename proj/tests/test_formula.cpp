#include <scrollulrich/formula.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace scrollulrich;

TEST_CASE("basic arithmetic") {
    CHECK(eval_formula("1+2*3", 0) == 7);
    CHECK(eval_formula("(1+2)*3", 0) == 9);
    CHECK(eval_formula("10-4-3", 0) == 3);
    CHECK(eval_formula("-5+2", 0) == -3);
    CHECK(eval_formula("--4", 0) == 4);
    CHECK(eval_formula("7/2", 0) == Rat(7, 2));
    CHECK(eval_formula(" 2 * ( 3 + 4 ) ", 0) == 14);
}

TEST_CASE("variables and powers") {
    CHECK(eval_formula("6*t-3", 5) == 27);
    CHECK(eval_formula("t^3", 4) == 64);
    CHECK(eval_formula("r^2/4*(4-8*t)", 2, Rat(6)) == -108);
    CHECK(eval_formula("(r^2-1)/4*(4-8*t)+1", 1, Rat(3)) == -7);
    CHECK(eval_formula("2^10", 0) == 1024);
}

TEST_CASE("integer projection") {
    CHECK(eval_int_formula("8*t-3", 2) == 13);
    CHECK(eval_int_formula("r*(2*r*t-r-t+1)", 3, 2) == 16);
    // subterms may be fractional as long as the whole formula is integral
    CHECK(eval_int_formula("(r^2-1)/4*(8*t-4)", 1, 3) == 8);
    CHECK_THROWS_AS(eval_int_formula("(r^2-1)/4", 1, 2), FormulaError);
    CHECK_THROWS_AS(eval_int_formula("1/2", 1), FormulaError);
}

TEST_CASE("error reporting") {
    CHECK_THROWS_AS(eval_formula("", 0), FormulaError);
    CHECK_THROWS_AS(eval_formula("2+", 0), FormulaError);
    CHECK_THROWS_AS(eval_formula("(1+2", 0), FormulaError);
    CHECK_THROWS_AS(eval_formula("3x", 0), FormulaError);
    CHECK_THROWS_AS(eval_formula("1/0", 0), FormulaError);
    CHECK_THROWS_AS(eval_formula("1/(t-t)", 5), FormulaError);
    CHECK_THROWS_AS(eval_formula("t^t", 2), FormulaError);
    CHECK_THROWS_AS(eval_formula("2^100", 0), FormulaError);
    CHECK_THROWS_WITH(eval_formula("r+1", 1), Catch::Matchers::ContainsSubstring(
                                                  "variable r is not available"));
}

TEST_CASE("large values stay exact") {
    // 3^64 needs more than 64 bits
    Rat big = eval_formula("3^64", 0);
    CHECK(big == Rat(Int("3433683820292512484657849089281")));
    CHECK(eval_int_formula("t^10", 50) == Int("97656250000000000"));
}
