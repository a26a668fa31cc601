#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cspsieve/qpoly.hpp"
#include "oracles.hpp"

using namespace cspsieve;

namespace {

IntLaurentPoly poly(std::vector<std::pair<int, Int>> terms) {
    return IntLaurentPoly::from_terms(terms);
}

long long euler_phi(long long d) {
    long long out = d;
    for (long long p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        out -= out / p;
        while (d % p == 0) d /= p;
    }
    if (d > 1) out -= out / d;
    return out;
}

} // namespace

TEST_CASE("q_int basics") {
    CHECK(q_int(0).is_zero());
    CHECK(q_int(1) == IntLaurentPoly::one());
    CHECK(q_int(3) == poly({{0, 1}, {1, 1}, {2, 1}}));
    CHECK(q_int(5).at_one() == 5);
}

TEST_CASE("normalization invariants") {
    auto f = IntLaurentPoly::from_coeffs(-2, {0, 0, 3, 0, -1, 0});
    CHECK(f.lowest_exp() == 0);
    CHECK(f.degree() == 2);
    CHECK(f.coeffs().front() != 0);
    CHECK(f.coeffs().back() != 0);
    CHECK(IntLaurentPoly::from_coeffs(5, {0, 0}).is_zero());
    CHECK(IntLaurentPoly::zero().lowest_exp() == 0);
    CHECK(IntLaurentPoly::from_terms({{3, 1}, {3, -1}}).is_zero());
}

TEST_CASE("ring operations") {
    auto f = poly({{0, 1}, {1, 1}});  // 1 + q
    auto g = poly({{0, 1}, {1, -1}}); // 1 - q
    CHECK(f * g == poly({{0, 1}, {2, -1}}));
    CHECK(add(f, IntLaurentPoly::zero()) == f);
    CHECK(scale_shift(f, 3, 2) == poly({{2, 3}, {3, 3}}));
    CHECK(scale_shift(f, 0, 5).is_zero());
    CHECK(f - f == IntLaurentPoly::zero());
    CHECK((-f) == poly({{0, -1}, {1, -1}}));
}

TEST_CASE("gauss small values") {
    CHECK(gauss(3, 2) == poly({{0, 1}, {1, 1}, {2, 1}}));
    CHECK(gauss(7, 0) == IntLaurentPoly::one());
    CHECK(gauss(0, 0) == IntLaurentPoly::one());
    CHECK(gauss(4, 7).is_zero());
    CHECK(gauss(4, -1).is_zero());
    CHECK(gauss(6, 3) ==
          poly({{0, 1}, {1, 1}, {2, 2}, {3, 3}, {4, 3}, {5, 3}, {6, 3}, {7, 2}, {8, 1}, {9, 1}}));
}

TEST_CASE("gauss symmetry and q=1 specialization") {
    for (long long n = 0; n <= 30; ++n)
        for (long long k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            const auto g = gauss(n, k);
            CHECK(g == gauss(n, n - k));
            CHECK(g.at_one() == binomial(n, k));
        }
}

TEST_CASE("exact_div") {
    CHECK(exact_div(q_int(12), q_int(6)) == poly({{0, 1}, {6, 1}}));
    auto f = poly({{-1, 2}, {0, 1}, {3, 5}});
    CHECK(exact_div(f, IntLaurentPoly::one()) == f);
    CHECK_THROWS_AS(exact_div(q_int(6), q_int(4)), NotDivisible);
    CHECK_THROWS_AS(exact_div(q_int(3), IntLaurentPoly::zero()), InvalidParams);
    CHECK(exact_div(IntLaurentPoly::zero(), q_int(4)).is_zero());
}

TEST_CASE("exact_div round trip on random products") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        auto f = testing::random_poly(rng, 40, 6, true);
        auto g = testing::random_poly(rng, 40, 6, true);
        if (g.is_zero()) continue;
        CAPTURE(trial);
        CHECK(exact_div(f * g, g) == f);
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == poly({{0, -1}, {1, 1}}));
    CHECK(cyclotomic(2) == poly({{0, 1}, {1, 1}}));
    CHECK(cyclotomic(4) == poly({{0, 1}, {2, 1}}));
    CHECK(cyclotomic(6) == poly({{0, 1}, {1, -1}, {2, 1}}));

    for (int d = 1; d <= 24; ++d) {
        CAPTURE(d);
        CHECK(cyclotomic(d).degree() == euler_phi(d));
        IntLaurentPoly prod = IntLaurentPoly::one();
        for (int e = 1; e <= d; ++e)
            if (d % e == 0) prod = prod * cyclotomic(e);
        CHECK(prod == poly({{0, -1}, {d, 1}})); // q^d - 1
    }
}

TEST_CASE("eval_at_primitive_root") {
    CHECK(eval_at_primitive_root(q_int(6), {6}).value == Int(0));
    CHECK(eval_at_primitive_root(q_int(6), {3}).value == Int(0));
    CHECK(eval_at_primitive_root(q_int(6), {1}).value == Int(6));

    // 2 + q + q^2 + q^3 at a primitive cube root: 2
    auto f = poly({{0, 2}, {1, 1}, {2, 1}, {3, 1}});
    CHECK(eval_at_primitive_root(f, {3}).value == Int(2));

    // q at a primitive 4th root is +-i: not a rational value
    auto rv = eval_at_primitive_root(poly({{1, 1}}), {4});
    CHECK(!rv.rational());
    CHECK(rv.residue == poly({{1, 1}}));

    // negative exponents fold: q^-1 = q^3 at order 4
    auto shifted = eval_at_primitive_root(poly({{-1, 1}, {3, -1}}), {4});
    CHECK(shifted.value == Int(0));
}

TEST_CASE("eval at d=1 is the coefficient sum") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto f = testing::random_poly(rng, 20, 9, true);
        CHECK(eval_at_primitive_root(f, {1}).value == f.at_one());
    }
}

TEST_CASE("eval agrees with gauss_at_root") {
    for (long long n = 1; n <= 24; ++n)
        for (int d = 1; d <= 12; ++d) {
            if (n % d != 0) continue;
            for (long long k = 0; k <= n; ++k) {
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(d);
                auto rv = eval_at_primitive_root(gauss(n, k), {d});
                REQUIRE(rv.rational());
                CHECK(*rv.value == gauss_at_root(n, k, d));
            }
        }
}

TEST_CASE("gauss_at_root values") {
    CHECK(gauss_at_root(6, 3, 3) == 2);
    CHECK(gauss_at_root(6, 2, 3) == 0);
    CHECK(gauss_at_root(9, 0, 3) == 1);
    CHECK_THROWS_AS(gauss_at_root(7, 2, 3), InvalidParams);
}

TEST_CASE("limit_ratio_at_root") {
    CHECK(limit_ratio_at_root(12, 6, 3) == Rational{2, 1});
    CHECK(limit_ratio_at_root(7, 13, 3) == Rational{1, 1});
    CHECK(limit_ratio_at_root(6, 6, 6) == Rational{1, 1});
    CHECK(limit_ratio_at_root(12, 8, 4) == Rational{3, 2});
}

TEST_CASE("binomial") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(30, 15) == Int("155117520"));
}

TEST_CASE("to_string") {
    CHECK(to_string(IntLaurentPoly::zero()) == "0");
    CHECK(to_string(poly({{0, 2}, {1, 1}, {2, 1}})) == "2 + q + q^2");
    CHECK(to_string(poly({{-1, 1}, {0, -3}, {2, 2}})) == "q^-1 - 3 + 2*q^2");
}
