#include "q3roots/dickson.hpp"

#include <algorithm>

namespace q3roots {

u128 dickson_n(const FieldCtx& F) { return (F.cards().q + 1) / 3; }

Elem dickson_eval(const FieldCtx& F, u128 n, Elem x) {
    if (!F.in_subfield(x, Level::Q)) throw MembershipError("Dickson argument not in F_q");
    if (x.is_zero()) return F.zero(); // the lift degenerates to z = 1
    // z = x*w with w^2 + w = 1/x^2; always solvable in F_{q^2} since the
    // absolute F_{q^2}-trace of an F_q element vanishes.
    const Elem rhs = F.inv(F.square(x));
    const auto w = F.artin_schreier_solve(rhs, Level::Q2);
    if (!w) throw InternalError("Dickson lift unsolvable in F_{q^2}");
    const Elem z = F.mul(x, w->first);
    const Elem zn = F.pow(z, n);
    // z^-n = z^(q^2-1-n mod q^2-1): z lies in F_{q^2}*.
    const u128 ord = F.cards().q2_minus1;
    const Elem zmn = F.pow(z, ord - (n % ord));
    const Elem r = F.add(zn, zmn);
    if (!F.in_subfield(r, Level::Q)) throw InternalError("Dickson value left F_q");
    return r;
}

Elem dickson_eval_ring(const FieldCtx& F, u128 n, Elem x) {
    // Square-and-multiply on u + vZ modulo Z^2 = xZ + 1.
    Elem ru = F.one(), rv = F.zero(); // result = 1
    Elem bu = F.zero(), bv = F.one(); // base = Z
    while (n) {
        if (n & 1) {
            // (ru + rv Z)(bu + bv Z) = ru bu + rv bv + (ru bv + rv bu + rv bv x) Z
            const Elem t = F.mul(rv, bv);
            const Elem nu = F.add(F.mul(ru, bu), t);
            const Elem nv = F.add(F.add(F.mul(ru, bv), F.mul(rv, bu)), F.mul(t, x));
            ru = nu;
            rv = nv;
        }
        const Elem t = F.square(bv);
        const Elem nu = F.add(F.square(bu), t);
        const Elem nv = F.mul(t, x); // 2*bu*bv vanishes in characteristic 2
        bu = nu;
        bv = nv;
        n >>= 1;
    }
    return F.mul(rv, x);
}

std::vector<Elem> dickson_root_set(const FieldCtx& F) {
    if (F.m() % 3 == 0) throw DomainError("Dickson root set requires 3 not dividing m");
    const u128 n = dickson_n(F);
    // Find a generator of mu_n inside F_{q^2}: first element (in enumeration
    // order) whose (q^2-1)/n power has exact order n.
    std::vector<u128> prime_factors;
    {
        u128 r = n;
        for (u128 p = 2; p * p <= r; ++p) {
            if (r % p == 0) {
                prime_factors.push_back(p);
                while (r % p == 0) r /= p;
            }
        }
        if (r > 1) prime_factors.push_back(r);
    }
    Elem gen = F.one();
    if (n > 1) {
        const u128 cof = F.cards().q2_minus1 / n;
        bool found = false;
        for (u128 i = 1; i < F.level_card(Level::Q2); ++i) {
            const Elem cand = F.pow(F.subfield_element(Level::Q2, i), cof);
            if (cand == F.one()) continue;
            bool full_order = true;
            for (u128 p : prime_factors) {
                if (F.pow(cand, n / p) == F.one()) {
                    full_order = false;
                    break;
                }
            }
            if (full_order) {
                gen = cand;
                found = true;
                break;
            }
        }
        if (!found) throw InternalError("no generator of mu_n found");
    }
    std::vector<Elem> out;
    Elem z = F.one();
    for (u128 i = 1; i < n; ++i) {
        z = F.mul(z, gen);
        const Elem r = F.add(z, F.inv(z));
        if (!F.in_subfield(r, Level::Q) || r == F.zero() || r == F.one())
            throw InternalError("Dickson root outside F_q \\ F_2");
        out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace q3roots
