#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "treewave/error.hpp"
#include "treewave/polynomial.hpp"
#include "treewave/rational.hpp"

using namespace treewave;

namespace {

RationalPoly poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (const long x : coeffs) c.emplace_back(x);
    return RationalPoly(std::move(c));
}

RationalPoly random_poly(SeededRng& rng, std::int64_t max_degree) {
    std::vector<Rational> c;
    const auto deg = static_cast<std::int64_t>(rng.next(max_degree + 1));
    for (std::int64_t i = 0; i <= deg; ++i) c.push_back(rng.next_small_rational());
    return RationalPoly(std::move(c));
}

} // namespace

TEST_CASE("second-kind family with signed indices", "[poly]") {
    CHECK(cheb_U(-1).is_zero());
    CHECK(cheb_U(3) == poly({0, -4, 0, 8}));
    CHECK(cheb_U(0) == poly({1}));
    CHECK(cheb_U(-2) == poly({-1}));
    for (std::int64_t n = 0; n <= 8; ++n)
        CHECK(cheb_U(n).evaluate(Rational(1)) == n + 1);
    // mirror rule and recurrence at every index, sign included
    const RationalPoly two_x = RationalPoly::monomial(1, Rational(2));
    for (std::int64_t n = -5; n <= 8; ++n) {
        CHECK(cheb_U(-n - 1) == -cheb_U(n - 1));
        CHECK(cheb_U(n) == two_x * cheb_U(n - 1) - cheb_U(n - 2));
    }
}

TEST_CASE("first-kind family with signed indices", "[poly]") {
    CHECK(cheb_T(0) == poly({1}));
    CHECK(cheb_T(2) == poly({-1, 0, 2}));
    CHECK(cheb_T(-3) == cheb_T(3));
    const RationalPoly two_x = RationalPoly::monomial(1, Rational(2));
    for (std::int64_t n = -5; n <= 8; ++n)
        CHECK(cheb_T(n + 1) == two_x * cheb_T(n) - cheb_T(n - 1));
}

TEST_CASE("Pell-type identity ties the two families", "[poly]") {
    const RationalPoly x2m1 = poly({-1, 0, 1});
    for (std::int64_t n = 0; n <= 8; ++n)
        CHECK(cheb_T(n) * cheb_T(n) - x2m1 * cheb_U(n - 1) * cheb_U(n - 1) == poly({1}));
}

TEST_CASE("sphere-sum polynomial family", "[poly]") {
    CHECK(geronimus_p(0, 2) == poly({1}));
    CHECK(geronimus_p(1, 2) == poly({0, 1}));
    CHECK(geronimus_p(2, 2) == poly({-3, 0, 1}));
    CHECK(geronimus_p(3, 2) == poly({0, -5, 0, 1})); // x p_2 - q p_1
    const RationalPoly x = RationalPoly::monomial(1, Rational(1));
    for (const std::int64_t q : {1, 2, 3})
        for (std::int64_t n = 2; n <= 8; ++n)
            CHECK(geronimus_p(n + 1, q) ==
                  x * geronimus_p(n, q) - Rational(q) * geronimus_p(n - 1, q));
    // the seeded p_2 is NOT what the recurrence would give from p_1, p_0
    CHECK(geronimus_p(2, 2) != x * geronimus_p(1, 2) - Rational(2) * geronimus_p(0, 2));
}

TEST_CASE("monic gcd via Euclid", "[poly]") {
    CHECK(poly_gcd(cheb_U(3), cheb_U(5)) == poly({0, 1})); // monic form of U_1
    CHECK(poly_gcd(poly({2, 4}), RationalPoly()) == poly({1, 2}));
    CHECK(poly_gcd(cheb_U(2), cheb_U(4)) == poly({1}));
    CHECK_THROWS_AS(poly_gcd(RationalPoly(), RationalPoly()), Error);

    // index gcd drops to polynomial gcd degree
    for (std::int64_t k = 1; k < 8; ++k)
        for (std::int64_t l = k + 1; l <= 8; ++l)
            CHECK(poly_gcd(cheb_U(k - 1), cheb_U(l - 1)).degree() == std::gcd(k, l) - 1);
}

TEST_CASE("extended Euclid produces exact certificates", "[poly]") {
    {
        const auto [bq, br, g] = bezout(cheb_U(1), cheb_U(2));
        CHECK(g == poly({1}));
        CHECK(cheb_U(1) * bq + cheb_U(2) * br == poly({1}));
    }
    {
        const auto [bq, br, g] = bezout(poly({3, 1, 4}), poly({1}));
        CHECK(bq.is_zero());
        CHECK(br == poly({1}));
        CHECK(g == poly({1}));
    }
    {
        const auto [bq, br, g] = bezout(cheb_U(3), cheb_U(5));
        CHECK(g == poly({0, 1}));
        CHECK(cheb_U(3) * bq + cheb_U(5) * br == g);
    }
    CHECK_THROWS_AS(bezout(RationalPoly(), RationalPoly()), Error);

    SeededRng rng(2024);
    int checked = 0;
    while (checked < 50) {
        const RationalPoly a = random_poly(rng, 6);
        const RationalPoly b = random_poly(rng, 6);
        if (a.is_zero() && b.is_zero()) continue;
        const auto [bq, br, g] = bezout(a, b);
        CHECK(a * bq + b * br == g);
        CHECK(g == poly_gcd(a, b));
        ++checked;
    }
}

TEST_CASE("exact division accepts divisors and rejects the rest", "[poly]") {
    CHECK(poly_div_exact(cheb_U(3), cheb_U(1)) == poly({-2, 0, 4}));
    CHECK(poly_div_exact(poly({3, 1, 4}), poly({1})) == poly({3, 1, 4}));
    CHECK(poly_div_exact(cheb_U(5), cheb_U(1)) == poly({3, 0, -16, 0, 16}));
    try {
        poly_div_exact(cheb_U(3), poly({1, 0, 1}));
        FAIL("expected non-divisible");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::non_divisible);
    }
}

TEST_CASE("formal quadratic extension arithmetic", "[poly]") {
    const QuadRing ring(Rational(2)); // Q[sqrt 2]
    const QuadExt a{Rational(1), Rational(1)};  // 1 + sqrt2
    const QuadExt b{Rational(3), Rational(-2)}; // 3 - 2 sqrt2
    CHECK(ring.mul(a, b) == QuadExt{Rational(-1), Rational(1)});
    CHECK(ring.pow(ring.radical(Rational(1)), 2) == ring.from_rational(Rational(2)));
    CHECK(ring.add(a, ring.neg(a)) == ring.from_rational(Rational(0)));

    // the radical stays formal even for a square radicand
    const QuadRing square_ring(Rational(4));
    const QuadExt s = square_ring.radical(Rational(1));
    CHECK(square_ring.mul(s, s) == square_ring.from_rational(Rational(4)));
    CHECK_FALSE(s.is_rational());
}

TEST_CASE("scaled-argument second-kind polynomials split by parity", "[poly]") {
    // over Q[sqrt 3] with argument (1/sqrt3) x: U_2((1/sqrt3)x) = (4/3)x^2 - 1
    const QuadRing ring(Rational(3));
    const QuadExt scale = ring.radical(Rational(1, 3));
    const QuadExtPoly u2 = cheb_U_scaled_arg(ring, 2, scale);
    CHECK(u2.radical_part().is_zero());
    CHECK(u2.rational_part() == RationalPoly({{Rational(-1), Rational(0), Rational(4, 3)}}));
    // odd index: purely radical coefficients
    const QuadExtPoly u1 = cheb_U_scaled_arg(ring, 1, scale);
    CHECK(u1.rational_part().is_zero());
    CHECK(u1.radical_part() == RationalPoly({{Rational(0), Rational(2, 3)}}));
    // signed index reduction
    const QuadExtPoly um4 = cheb_U_scaled_arg(ring, -4, scale);
    CHECK(um4.rational_part() == -u2.rational_part());
    CHECK(um4.radical_part() == -u2.radical_part());
}
