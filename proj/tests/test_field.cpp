#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "q3roots/gf2poly.hpp"

using namespace q3roots;
using namespace q3roots::testing;

TEST_CASE("context construction") {
    const FieldCtx F = make_ctx(1);
    CHECK(F.degree() == 6);
    CHECK(F.level_card(Level::Q6) == 64);
    CHECK(F.basis(Level::F2).size() == 1);
    CHECK(F.basis(Level::F2)[0] == F.one());
    CHECK(F.basis(Level::Q).size() == 1);
    CHECK(F.basis(Level::Q3).size() == 3);
    CHECK(F.modulus_bits() == 0x43);

    CHECK_THROWS_AS(make_ctx(0), RangeError);
    CHECK_THROWS_AS(make_ctx(22), RangeError);
    // Reducible degree-18 modulus: x^18 + x^2 (divisible by x).
    CHECK_THROWS_AS(FieldCtx(FieldParams{3, (u128(1) << 18) | 4}), ConstructionError);
    // Wrong degree.
    CHECK_THROWS_AS(FieldCtx(FieldParams{3, u128(0x43)}), ConstructionError);
    // A custom (non-default) irreducible modulus is accepted.
    u128 alt = least_irreducible_poly(12) + 2;
    while (!gf2poly_is_irreducible(GF2Poly::from_u128(alt))) alt += 2;
    const FieldCtx G(FieldParams{2, alt});
    CHECK(G.modulus_bits() == alt);
    CHECK(G.level_card(Level::Q) == 4);
}

TEST_CASE("omega and basic arithmetic") {
    for (unsigned m : {1u, 2u, 3u}) {
        const FieldCtx F = make_ctx(m);
        const Elem w = F.omega();
        CHECK(F.add(F.add(F.square(w), w), F.one()) == F.zero());
        CHECK(F.square(w) == F.add(w, F.one()));
        CHECK(F.inv(w) == F.square(w));
        CHECK(F.pow(w, 3) == F.one());
        CHECK(F.mul(w, w) == F.square(w));
        // omega is the smaller-encoded root.
        const Elem w2 = F.with_conjugate_omega().omega();
        CHECK(w < w2);
        CHECK(F.add(w2, w) == F.one());
    }
}

TEST_CASE("field laws on random elements") {
    auto g = rng();
    for (unsigned m : {1u, 2u, 11u}) { // m=11 exercises the two-word path
        const FieldCtx F = make_ctx(m);
        for (int i = 0; i < 200; ++i) {
            const Elem x = random_elem(F, Level::Q6, g);
            const Elem y = random_elem(F, Level::Q6, g);
            const Elem z = random_elem(F, Level::Q6, g);
            CHECK(F.mul(x, y) == F.mul(y, x));
            CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
            CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
            CHECK(F.square(x) == F.mul(x, x));
            if (!x.is_zero()) {
                CHECK(F.mul(x, F.inv(x)) == F.one());
                CHECK(F.div(y, x) == F.mul(y, F.inv(x)));
            }
        }
        CHECK(F.pow(F.zero(), 0) == F.one());
        CHECK_THROWS_AS(F.inv(F.zero()), ZeroDivisionError);
        CHECK_THROWS_AS(F.div(F.one(), F.zero()), ZeroDivisionError);
        // Lagrange: x^(q^6-1) = 1 for x != 0.
        const Elem x = random_nonzero(F, Level::Q6, g);
        CHECK(F.pow(x, F.cards().q6_minus1) == F.one());
    }
}

TEST_CASE("frobenius and subfield structure") {
    auto g = rng();
    for (unsigned m : {1u, 2u, 3u, 4u}) {
        const FieldCtx F = make_ctx(m);
        for (int i = 0; i < 50; ++i) {
            const Elem x = random_elem(F, Level::Q6, g);
            CHECK(F.frobenius_q(x, 6) == x);
            CHECK(F.frobenius_q(F.frobenius_q(x, 1), 1) == F.frobenius_q(x, 2));
            // Frobenius fixes exactly the subfield members.
            CHECK(F.in_subfield(x, Level::Q) == (F.frobenius_q(x, 1) == x));
            CHECK(F.in_subfield(x, Level::Q3) == (F.frobenius_q(x, 3) == x));
        }
        // x in F_q is fixed by frobenius_q.
        const Elem a = random_elem(F, Level::Q, g);
        CHECK(F.frobenius_q(a, 1) == a);
        if (m % 2 == 1) CHECK(F.frobenius_q(F.omega(), 1) == F.square(F.omega()));

        // Basis invariants: b^(2^d) = b, independence via span size.
        for (Level lv : {Level::F2, Level::Q, Level::Q2, Level::Q3, Level::Q6}) {
            const unsigned d = F.level_degree(lv);
            CHECK(F.basis(lv).size() == d);
            for (const Elem& b : F.basis(lv)) {
                Elem v = b;
                for (unsigned j = 0; j < d; ++j) v = F.square(v);
                CHECK(v == b);
            }
            if (F.level_card(lv) <= 4096) {
                std::set<Elem> span;
                for (const Elem& x : F.enumerate_subfield(lv)) span.insert(x);
                CHECK(u128(span.size()) == F.level_card(lv));
                for (const Elem& x : span) {
                    Elem v = x;
                    for (unsigned j = 0; j < d; ++j) v = F.square(v);
                    CHECK(v == x);
                }
            }
        }
    }
}

TEST_CASE("enumeration is deterministic and restartable") {
    const FieldCtx F = make_ctx(2);
    u128 i = 0;
    for (const Elem& x : F.enumerate_subfield(Level::Q3)) {
        CHECK(x == F.subfield_element(Level::Q3, i));
        ++i;
    }
    CHECK(i == 64); // 2^(3m), m = 2
}

TEST_CASE("traces") {
    const FieldCtx F2 = make_ctx(2);
    CHECK(F2.abs_trace(F2.one(), Level::Q) == 0);       // 1+1
    CHECK(F2.abs_trace(F2.omega(), Level::Q) == 1);     // omega+omega^2 = 1
    const FieldCtx F3 = make_ctx(3);
    CHECK(F3.abs_trace(F3.one(), Level::Q) == 1);       // three ones
    CHECK_THROWS_AS(F3.abs_trace(F3.omega(), Level::Q), MembershipError);
    // Trace is additive and lands in F_2 across levels.
    auto g = rng();
    for (Level lv : {Level::Q, Level::Q2, Level::Q3, Level::Q6}) {
        for (int i = 0; i < 20; ++i) {
            const Elem x = random_elem(F3, lv, g);
            const Elem y = random_elem(F3, lv, g);
            CHECK(F3.abs_trace(F3.add(x, y), lv) ==
                  (F3.abs_trace(x, lv) ^ F3.abs_trace(y, lv)));
        }
    }
}

TEST_CASE("square roots") {
    auto g = rng();
    for (unsigned m : {1u, 2u, 3u, 11u}) {
        const FieldCtx F = make_ctx(m);
        CHECK(F.sqrt_elem(F.zero()) == F.zero());
        CHECK(F.sqrt_elem(F.one()) == F.one());
        CHECK(F.sqrt_elem(F.omega()) == F.square(F.omega())); // (w^2)^2 = w
        for (int i = 0; i < 50; ++i) {
            const Elem x = random_elem(F, Level::Q6, g);
            CHECK(F.sqrt_elem(F.square(x)) == x);
            CHECK(F.square(F.sqrt_elem(x)) == x);
        }
    }
}

TEST_CASE("artin-schreier solving") {
    for (unsigned m : {1u, 2u, 3u, 4u}) {
        const FieldCtx F = make_ctx(m);
        const auto z = F.artin_schreier_solve(F.zero(), Level::Q);
        REQUIRE(z.has_value());
        CHECK(z->first == F.zero());
        CHECK(z->second == F.one());
        for (Level lv : {Level::Q, Level::Q2, Level::Q3}) {
            if (F.level_card(lv) > 4096) continue;
            for (const Elem& d : F.enumerate_subfield(lv)) {
                const auto sol = F.artin_schreier_solve(d, lv);
                CHECK(sol.has_value() == (F.abs_trace(d, lv) == 0));
                if (sol) {
                    CHECK(F.add(F.square(sol->first), sol->first) == d);
                    CHECK(F.add(sol->first, sol->second) == F.one());
                    CHECK(sol->first < sol->second);
                    CHECK(F.in_subfield(sol->first, lv));
                }
            }
        }
    }
    const FieldCtx F1 = make_ctx(1);
    CHECK_FALSE(F1.artin_schreier_solve(F1.one(), Level::Q).has_value()); // Tr(1) = 1 over F_2
    const FieldCtx F2 = make_ctx(2);
    const auto s = F2.artin_schreier_solve(F2.one(), Level::Q);
    REQUIRE(s.has_value());
    CHECK(s->first == F2.omega()); // {omega, omega^2}
    CHECK(s->second == F2.square(F2.omega()));
}

TEST_CASE("cube roots") {
    const FieldCtx F = make_ctx(1);
    const Elem w = F.omega();
    const auto r1 = F.cube_roots(F.one());
    CHECK(r1 == std::vector<Elem>{F.one(), w, F.square(w)});
    CHECK(F.cube_roots(F.zero()) == std::vector<Elem>{F.zero()});

    // Exhaustive census over F_64: 1/3 of nonzero elements are cubes
    // (21 of 63), the other 42 have no cube root.
    int empty = 0, triple = 0;
    for (const Elem& y : F.enumerate_subfield(Level::Q6)) {
        if (y.is_zero()) continue;
        const auto roots = F.cube_roots(y);
        if (roots.empty()) ++empty;
        else {
            CHECK(roots.size() == 3);
            for (const Elem& v : roots) CHECK(F.pow(v, 3) == y);
            ++triple;
        }
    }
    CHECK(empty == 42);
    CHECK(triple == 21);

    auto g = rng();
    for (unsigned m : {2u, 3u, 11u}) {
        const FieldCtx G = make_ctx(m);
        for (int i = 0; i < 25; ++i) {
            const Elem x = random_nonzero(G, Level::Q6, g);
            const auto roots = G.cube_roots(G.pow(x, 3));
            CHECK(roots.size() == 3);
            bool found = false;
            for (const Elem& v : roots) {
                CHECK(G.pow(v, 3) == G.pow(x, 3));
                found = found || v == x;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("cubic character") {
    auto g = rng();
    for (unsigned m : {1u, 2u, 3u, 4u}) {
        const FieldCtx F = make_ctx(m);
        CHECK(F.cubic_character(F.one()) == 0);
        if (m == 1) CHECK(F.cubic_character(F.omega()) == 1); // (4-1)/3 = 1
        CHECK_THROWS_AS(F.cubic_character(F.zero()), DomainError);
        // Cubes map to 0; multiplicativity on random pairs.
        for (int i = 0; i < 100; ++i) {
            const Elem z = random_nonzero(F, Level::Q2, g);
            CHECK(F.cubic_character(F.pow(z, 3)) == 0);
            const Elem y = random_nonzero(F, Level::Q2, g);
            CHECK(F.cubic_character(F.mul(z, y)) ==
                  (F.cubic_character(z) + F.cubic_character(y)) % 3);
        }
    }
    const FieldCtx F3 = make_ctx(3);
    CHECK_THROWS_AS(F3.cubic_character(F3.subfield_element(Level::Q3, 2)), DomainError);
}

TEST_CASE("mu membership") {
    const FieldCtx F = make_ctx(2);
    CHECK(F.mu_membership(F.one()));
    CHECK_FALSE(F.mu_membership(F.zero()));
    CHECK(F.mu_membership(F.omega())); // omega^21 = 1, omega in F_4 within F_{q^3}
    // |mu| = q^2 + q + 1.
    u128 count = 0;
    for (const Elem& x : F.enumerate_subfield(Level::Q3)) {
        if (F.mu_membership(x)) ++count;
    }
    CHECK(count == F.cards().q2_plus_q_plus_1);
}

TEST_CASE("hex wire format") {
    const FieldCtx F = make_ctx(1);
    CHECK(F.to_hex(F.zero()) == "0");
    CHECK(F.to_hex(F.from_hex("3a")) == "3a");
    CHECK_THROWS_AS(F.from_hex("40x"), ValidationError);
    CHECK_THROWS_AS(F.from_hex(""), ValidationError);
    CHECK_THROWS_AS(F.from_hex("100"), ValidationError); // 2^8 exceeds degree 6
    const FieldCtx G = make_ctx(21);
    const Elem top = G.subfield_element(Level::Q6, G.cards().q6_minus1);
    CHECK(G.from_hex(G.to_hex(top)) == top);
}

TEST_CASE("omega choice does not disturb shared structure") {
    const FieldCtx F = make_ctx(3);
    const FieldCtx G = F.with_conjugate_omega();
    CHECK(G.omega() == F.square(F.omega()));
    CHECK(G.with_conjugate_omega().omega() == F.omega());
    CHECK(G.modulus_bits() == F.modulus_bits());
    CHECK(G.basis(Level::Q) == F.basis(Level::Q));
    auto g = rng();
    const Elem x = random_nonzero(F, Level::Q6, g);
    CHECK(F.cube_roots(x) == G.cube_roots(x));
}
