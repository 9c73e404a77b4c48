#pragma once

#include <array>
#include <cstdint>

#include "q3roots/util.hpp"

namespace q3roots {

/// Dense polynomial over F_2 with degree < 256 (bit i = coefficient of x^i).
/// Big enough to hold the square of any supported field modulus (degree <= 126).
struct GF2Poly {
    std::array<uint64_t, 4> w{};

    static GF2Poly zero() { return {}; }
    static GF2Poly one() { return from_u128(1); }
    static GF2Poly x() { return from_u128(2); }

    static GF2Poly from_u128(u128 bits) {
        GF2Poly p;
        p.w[0] = uint64_t(bits);
        p.w[1] = uint64_t(bits >> 64);
        return p;
    }

    /// Low 128 bits; callers must know the degree fits.
    u128 to_u128() const { return (u128(w[1]) << 64) | w[0]; }

    bool is_zero() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }

    bool bit(unsigned i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void flip(unsigned i) { w[i >> 6] ^= uint64_t(1) << (i & 63); }

    int degree() const; // -1 for the zero polynomial

    GF2Poly& operator^=(const GF2Poly& o) {
        for (int i = 0; i < 4; ++i) w[i] ^= o.w[i];
        return *this;
    }
    friend GF2Poly operator^(GF2Poly a, const GF2Poly& b) { return a ^= b; }

    bool operator==(const GF2Poly& o) const { return w == o.w; }

    GF2Poly shifted_left(unsigned k) const;

    /// Carry-less product; requires deg(a) + deg(b) < 256.
    static GF2Poly mul(const GF2Poly& a, const GF2Poly& b);
    static GF2Poly mod(GF2Poly a, const GF2Poly& m);
    static GF2Poly mulmod(const GF2Poly& a, const GF2Poly& b, const GF2Poly& m);
    static GF2Poly gcd(GF2Poly a, GF2Poly b);
};

/// Rabin irreducibility test over F_2.
bool gf2poly_is_irreducible(const GF2Poly& p);

/// Smallest integer whose bit pattern encodes an irreducible degree-d
/// polynomial over F_2 (d <= 126).
u128 least_irreducible_poly(unsigned degree);

} // namespace q3roots
