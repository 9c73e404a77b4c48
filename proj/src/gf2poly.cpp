#include "q3roots/gf2poly.hpp"

#include <vector>

#include "q3roots/errors.hpp"

namespace q3roots {

int GF2Poly::degree() const {
    for (int i = 3; i >= 0; --i) {
        if (w[i]) return i * 64 + 63 - __builtin_clzll(w[i]);
    }
    return -1;
}

GF2Poly GF2Poly::shifted_left(unsigned k) const {
    GF2Poly r;
    const unsigned words = k >> 6, bits = k & 63;
    for (int i = 3; i >= 0; --i) {
        uint64_t v = 0;
        const int src = i - int(words);
        if (src >= 0) {
            v = w[src] << bits;
            if (bits && src >= 1) v |= w[src - 1] >> (64 - bits);
        }
        r.w[i] = v;
    }
    return r;
}

GF2Poly GF2Poly::mul(const GF2Poly& a, const GF2Poly& b) {
    GF2Poly r;
    for (int i = 0; i < 4; ++i) {
        uint64_t m = b.w[i];
        while (m) {
            const int j = __builtin_ctzll(m);
            m &= m - 1;
            r ^= a.shifted_left(unsigned(i * 64 + j));
        }
    }
    return r;
}

GF2Poly GF2Poly::mod(GF2Poly a, const GF2Poly& m) {
    const int dm = m.degree();
    if (dm < 0) throw ZeroDivisionError("polynomial modulus is zero");
    for (int da = a.degree(); da >= dm; da = a.degree()) {
        a ^= m.shifted_left(unsigned(da - dm));
    }
    return a;
}

GF2Poly GF2Poly::mulmod(const GF2Poly& a, const GF2Poly& b, const GF2Poly& m) {
    return mod(mul(a, b), m);
}

GF2Poly GF2Poly::gcd(GF2Poly a, GF2Poly b) {
    while (!b.is_zero()) {
        a = mod(a, b);
        std::swap(a, b);
    }
    return a;
}

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> ps;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// x^(2^k) mod p by repeated squaring.
GF2Poly frob_power(GF2Poly x, unsigned k, const GF2Poly& p) {
    for (unsigned i = 0; i < k; ++i) x = GF2Poly::mulmod(x, x, p);
    return x;
}

} // namespace

bool gf2poly_is_irreducible(const GF2Poly& p) {
    const int d = p.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    const GF2Poly x = GF2Poly::x();
    // x^(2^d) == x mod p, and x^(2^(d/r)) - x coprime to p for each prime r | d.
    if (frob_power(x, unsigned(d), p) != x) return false;
    for (unsigned r : prime_divisors(unsigned(d))) {
        GF2Poly g = GF2Poly::gcd(frob_power(x, unsigned(d) / r, p) ^ x, p);
        if (g.degree() != 0) return false;
    }
    return true;
}

u128 least_irreducible_poly(unsigned degree) {
    if (degree == 0 || degree > 126) throw RangeError("degree out of range for modulus search");
    const u128 top = u128(1) << degree;
    // Candidates need a nonzero constant term, so step over odd encodings only.
    for (u128 c = top + 1;; c += 2) {
        if (c >= (top << 1)) throw ConstructionError("no irreducible polynomial found"); // unreachable
        if (gf2poly_is_irreducible(GF2Poly::from_u128(c))) return c;
    }
}

} // namespace q3roots
