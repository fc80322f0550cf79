#include "doctest.h"

#include <random>

#include "ivpoly/poly.hpp"
#include "oracles.hpp"

using namespace ivpoly;

namespace {

ZPoly random_poly(std::mt19937_64& rng, int max_degree, long coeff_bound) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
    while (true) {
        int d = deg(rng);
        std::vector<Int> coeffs;
        for (int i = 0; i <= d; ++i) coeffs.emplace_back(coeff(rng));
        ZPoly g(std::move(coeffs));
        if (!g.is_zero()) return g;
    }
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("canonical form") {
    CHECK(ZPoly({1, 2, 0, 0}).degree() == 1);
    CHECK(ZPoly({0, 0}).is_zero());
    CHECK(ZPoly().degree() == -1);
    CHECK(ZPoly({0, 1}) == ZPoly::x());
}

TEST_CASE("evaluation") {
    RationalPoly f(ZPoly({0, -1, 1}), 2);  // (x^2 - x)/2
    CHECK(f(5) == Rat(10));
    CHECK(RationalPoly(ZPoly::x(), 1)(0) == Rat(0));
    RationalPoly g(ZPoly({0, -1, 0, 1}), 6);  // (x^3 - x)/6
    CHECK(g(4) == Rat(10));
    CHECK(RationalPoly(ZPoly({1, 0, 1}), 2)(0) == Rat(1, 2));
}

TEST_CASE("poly_product") {
    CHECK(poly_product({ZPoly::x(), ZPoly({-1, 1})}) == ZPoly({0, -1, 1}));
    CHECK(poly_product({}) == ZPoly::constant(1));
    // oracle first: naive convolution of (x-2)(x-2)(x+1)
    auto conv = oracles::convolve(oracles::convolve({-2, 1}, {-2, 1}), {1, 1});
    CHECK(conv == std::vector<Int>{4, 0, -3, 1});
    CHECK(poly_product({ZPoly({-2, 1}), ZPoly({-2, 1}), ZPoly({1, 1})}) == ZPoly({4, 0, -3, 1}));
}

TEST_CASE("product degree is additive, matches convolution") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 50; ++t) {
        ZPoly a = random_poly(rng, 5, 50), b = random_poly(rng, 5, 50);
        ZPoly p = a * b;
        CHECK(p.degree() == a.degree() + b.degree());
        CHECK(p.coeffs() == oracles::convolve(a.coeffs(), b.coeffs()));
    }
}

TEST_CASE("fixed_divisor fixed values") {
    CHECK(fixed_divisor(ZPoly({0, -1, 1})) == 2);  // x^2 - x
    CHECK(fixed_divisor(ZPoly::x()) == 1);
    // x^3 - x: gcd(0, 0, 6, 24) = 6, cross-checked over [-20, 20]
    ZPoly g({0, -1, 0, 1});
    CHECK(oracles::fixdiv_by_value_scan(g, -20, 20) == 6);
    CHECK(fixed_divisor(g) == 6);
    CHECK_THROWS_AS(fixed_divisor(ZPoly()), std::invalid_argument);
}

TEST_CASE("fixed_divisor_bruteforce fixed values") {
    CHECK(fixed_divisor_bruteforce(ZPoly({0, -1, 1}), 10) == 2);
    CHECK(fixed_divisor_bruteforce(ZPoly({2, 1, 1}), 8) == 2);  // x^2 + x + 2
    CHECK(fixed_divisor_bruteforce(ZPoly({2, 2}), 5) == 2);     // content 2
    CHECK_THROWS_AS(fixed_divisor_bruteforce(ZPoly({0, 1, 1}), 1), std::invalid_argument);
}

TEST_CASE("fixed divisor equals the windowed gcd for every window >= degree") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 60; ++t) {
        ZPoly g = random_poly(rng, 6, 1000);
        Int d = fixed_divisor(g);
        for (Int range = g.degree(); range <= g.degree() + 5; ++range)
            CHECK(fixed_divisor_bruteforce(g, range) == d);
        CHECK(oracles::fixdiv_by_value_scan(g, -30, 30) == d);
    }
}

TEST_CASE("fixed divisor is submultiplicative: d(f)d(g) | d(fg)") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 60; ++t) {
        ZPoly f = random_poly(rng, 4, 100), g = random_poly(rng, 4, 100);
        CHECK(fixed_divisor(f * g) % (fixed_divisor(f) * fixed_divisor(g)) == 0);
    }
}

TEST_CASE("primes dividing the fixed divisor of a primitive polynomial are <= its degree") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        ZPoly g = random_poly(rng, 6, 10000);
        Int content = g.content();
        std::vector<Int> coeffs = g.coeffs();
        for (Int& c : coeffs) c /= content;
        ZPoly primitive{std::move(coeffs)};
        Int d = fixed_divisor(primitive);
        for (const Int& q : primes_in_range(2, primitive.degree() < 2 ? 2 : primitive.degree()))
            while (d % q == 0) d /= q;
        CHECK(d == 1);
    }
}

TEST_CASE("is_int_valued") {
    CHECK(is_int_valued(RationalPoly(ZPoly({0, -1, 1}), 2)));
    CHECK_FALSE(is_int_valued(RationalPoly(ZPoly({1, 0, 1}), 2)));
    CHECK(is_int_valued(RationalPoly(ZPoly({0, -1, 0, 1}), 6)));
}

TEST_CASE("is_int_valued implies integer values on [-50, 50]") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 40; ++t) {
        ZPoly num = random_poly(rng, 5, 500);
        std::uniform_int_distribution<long> den_pick(2, 30);
        RationalPoly f(num, den_pick(rng));
        bool member = is_int_valued(f);
        bool all_integer = true;
        for (long a = -50; a <= 50; ++a)
            all_integer = all_integer && boost::multiprecision::denominator(f(a)) == 1;
        if (member) CHECK(all_integer);
        // The window is wide enough for the converse too.
        if (all_integer) CHECK(member);
    }
}

TEST_CASE("is_image_primitive") {
    CHECK(is_image_primitive(RationalPoly(ZPoly({0, -1, 1}), 2)));
    CHECK_FALSE(is_image_primitive(RationalPoly(ZPoly({0, 3}), 1)));  // 3x
    CHECK(is_image_primitive(RationalPoly(ZPoly::x(), 1)));
    CHECK_THROWS_AS(is_image_primitive(RationalPoly(ZPoly({1, 0, 1}), 2)),
                    std::invalid_argument);
}

TEST_CASE("rational poly reduction") {
    RationalPoly f(ZPoly({2, 4}), 6);
    CHECK(f.num() == ZPoly({1, 2}));
    CHECK(f.den() == 3);
    CHECK(RationalPoly(ZPoly({2, 4}), 6) == RationalPoly(ZPoly({1, 2}), 3));
    CHECK_THROWS_AS(RationalPoly(ZPoly::x(), 0), std::invalid_argument);
}

TEST_CASE("text format round trip") {
    CHECK(to_string(parse_zpoly("[0,-1,1]")) == "[0,-1,1]");
    RationalPoly f = parse_rational_poly("[0,-1,1]/2");
    CHECK(f == RationalPoly(ZPoly({0, -1, 1}), 2));
    CHECK(to_string(f) == "[0,-1,1]/2");
    CHECK(parse_rational_poly("[0,1]").den() == 1);
    CHECK(parse_zpoly(" [ 1 , -2 ] ") == ZPoly({1, -2}));
    CHECK_THROWS_AS(parse_zpoly("[1,]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_zpoly("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational_poly("[1]/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational_poly("[1]/2x"), std::invalid_argument);
}

}  // TEST_SUITE
