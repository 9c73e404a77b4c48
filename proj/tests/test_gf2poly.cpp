#include <doctest.h>

#include <numeric>

#include "q3roots/gf2poly.hpp"

using namespace q3roots;

TEST_CASE("basic polynomial arithmetic over F_2") {
    const GF2Poly x = GF2Poly::x();
    const GF2Poly one = GF2Poly::one();
    CHECK(GF2Poly::mul(x, x) == GF2Poly::from_u128(4));
    CHECK((x ^ x).is_zero());
    CHECK(GF2Poly::from_u128(0b111).degree() == 2);
    CHECK(GF2Poly::zero().degree() == -1);

    // (x^2+x+1)(x+1) = x^3+1
    const GF2Poly p = GF2Poly::from_u128(0b111);
    const GF2Poly q = GF2Poly::from_u128(0b11);
    CHECK(GF2Poly::mul(p, q) == GF2Poly::from_u128(0b1001));
    CHECK(GF2Poly::mod(GF2Poly::from_u128(0b1001), p) == GF2Poly::zero());
    CHECK(GF2Poly::gcd(GF2Poly::from_u128(0b1001), p) == p);
    CHECK(one.degree() == 0);
}

TEST_CASE("shifts across word boundaries") {
    GF2Poly p = GF2Poly::one().shifted_left(100);
    CHECK(p.degree() == 100);
    CHECK(p.bit(100));
    GF2Poly q = p.shifted_left(60);
    CHECK(q.degree() == 160);
    CHECK(GF2Poly::mul(GF2Poly::one().shifted_left(100), GF2Poly::one().shifted_left(60)) == q);
}

TEST_CASE("irreducibility") {
    CHECK(gf2poly_is_irreducible(GF2Poly::from_u128(0b111)));      // x^2+x+1
    CHECK(gf2poly_is_irreducible(GF2Poly::from_u128(0b1011)));     // x^3+x+1
    CHECK(gf2poly_is_irreducible(GF2Poly::from_u128(0b1101)));     // x^3+x^2+1
    CHECK_FALSE(gf2poly_is_irreducible(GF2Poly::from_u128(0b1001)));  // x^3+1
    CHECK_FALSE(gf2poly_is_irreducible(GF2Poly::from_u128(0b10101))); // (x^2+x+1)^2
    CHECK_FALSE(gf2poly_is_irreducible(GF2Poly::from_u128(0b110)));   // x^2+x
    CHECK(gf2poly_is_irreducible(GF2Poly::from_u128(0x43)));       // x^6+x+1
}

TEST_CASE("least irreducible polynomials") {
    CHECK(least_irreducible_poly(6) == 0x43);
    for (unsigned d : {6u, 12u, 18u, 24u, 126u}) {
        const u128 c = least_irreducible_poly(d);
        CHECK(u128_bit_length(c) == int(d) + 1);
        CHECK(gf2poly_is_irreducible(GF2Poly::from_u128(c)));
        for (u128 smaller = (u128(1) << d) + 1; smaller < c; smaller += 2) {
            CHECK_FALSE(gf2poly_is_irreducible(GF2Poly::from_u128(smaller)));
        }
    }
}

// gcd(alpha^r - 1, alpha^s - 1) = alpha^gcd(r,s) - 1, for integers and for
// binary polynomials with alpha = X.
TEST_CASE("gcd of alpha^n - 1 families") {
    for (unsigned r = 1; r <= 24; ++r) {
        for (unsigned s = 1; s <= 24; ++s) {
            const uint64_t a = (uint64_t(1) << r) - 1;
            const uint64_t b = (uint64_t(1) << s) - 1;
            const uint64_t expect = (uint64_t(1) << std::gcd(r, s)) - 1;
            CHECK(std::gcd(a, b) == expect);
        }
    }
    for (unsigned r = 1; r <= 6; ++r) {
        for (unsigned s = 1; s <= 6; ++s) {
            GF2Poly pa = GF2Poly::one().shifted_left((1u << r) - 1) ^ GF2Poly::one();
            GF2Poly pb = GF2Poly::one().shifted_left((1u << s) - 1) ^ GF2Poly::one();
            GF2Poly expect =
                GF2Poly::one().shifted_left((1u << unsigned(std::gcd(r, s))) - 1) ^ GF2Poly::one();
            CHECK(GF2Poly::gcd(pa, pb) == expect);
        }
    }
}
