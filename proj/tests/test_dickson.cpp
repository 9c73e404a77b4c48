#include <doctest.h>

#include "helpers.hpp"
#include "q3roots/dickson.hpp"

using namespace q3roots;
using namespace q3roots::testing;

namespace {

// Reference evaluator via the recurrence D_0 = 0, D_1 = X,
// D_(k+1) = X*D_k + D_(k-1) (characteristic 2). Small n only.
Elem dickson_recurrence(const FieldCtx& F, u128 n, Elem x) {
    Elem prev = F.zero(); // D_0
    Elem cur = x;         // D_1
    if (n == 0) return prev;
    for (u128 k = 1; k < n; ++k) {
        const Elem next = F.add(F.mul(x, cur), prev);
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace

TEST_CASE("small Dickson values") {
    const FieldCtx F = make_ctx(3);
    auto g = rng();
    const Elem x = random_elem(F, Level::Q, g);
    CHECK(dickson_eval(F, 1, x) == x);                    // D_1 = X
    CHECK(dickson_eval(F, 3, F.one()) == F.zero());       // D_3 = X^3+X
    CHECK(dickson_eval(F, 5, F.one()) == F.one());        // D_5 = X^5+X^3+X
    CHECK(dickson_eval(F, 2, x) == F.square(x));          // D_2 = X^2
    CHECK(dickson_eval(F, 4, F.zero()) == F.zero());
    CHECK(dickson_eval(F, 1, F.zero()) == F.zero());      // D_n(0) = 0 for all n
    CHECK_THROWS_AS(dickson_eval(F, 3, F.omega()), MembershipError);
}

TEST_CASE("lift evaluation matches the recurrence and the ring route") {
    auto g = rng();
    for (unsigned m : {1u, 2u, 3u, 4u, 5u}) {
        const FieldCtx F = make_ctx(m);
        for (u128 n = 1; n <= 50; ++n) {
            for (int i = 0; i < 4; ++i) {
                const Elem x = (i == 0) ? F.zero() : random_elem(F, Level::Q, g);
                const Elem ref = dickson_recurrence(F, n, x);
                CHECK(dickson_eval(F, n, x) == ref);
                CHECK(dickson_eval_ring(F, n, x) == ref);
            }
        }
    }
}

TEST_CASE("ring evaluator works beyond F_q") {
    auto g = rng();
    const FieldCtx F = make_ctx(2);
    for (u128 n = 1; n <= 30; ++n) {
        for (int i = 0; i < 4; ++i) {
            const Elem x = random_elem(F, Level::Q6, g);
            CHECK(dickson_eval_ring(F, n, x) == dickson_recurrence(F, n, x));
        }
    }
}

TEST_CASE("functional equation") {
    auto g = rng();
    for (unsigned m : {1u, 3u, 6u, 10u}) {
        const FieldCtx F = make_ctx(m);
        for (int i = 0; i < 200; ++i) {
            // z + 1/z lies in F_q exactly for z in F_q* or z of norm 1; draw
            // from both families so dickson_eval's precondition holds.
            Elem z;
            if (i % 2 == 0) {
                z = random_nonzero(F, Level::Q, g);
            } else {
                z = F.pow(random_nonzero(F, Level::Q2, g), F.cards().q - 1);
                if (z == F.one()) continue;
            }
            const Elem x = F.add(z, F.inv(z));
            const u128 n = 1 + g() % 50;
            const Elem zn = F.pow(z, n);
            CHECK(dickson_eval(F, n, x) == F.add(zn, F.inv(zn)));
        }
    }
}

TEST_CASE("root sets") {
    CHECK(dickson_root_set(make_ctx(1)).empty());  // floor(2/6) = 0
    CHECK(dickson_root_set(make_ctx(2)).empty());  // floor(4/6) = 0
    CHECK_THROWS_AS(dickson_root_set(make_ctx(3)), DomainError);

    const FieldCtx F4 = make_ctx(4);
    const auto rs4 = dickson_root_set(F4);
    CHECK(rs4.size() == 2); // floor(16/6)
    for (const Elem& r : rs4) {
        CHECK(F4.in_subfield(r, Level::Q));
        CHECK(r != F4.zero());
        CHECK(r != F4.one());
        CHECK(dickson_eval(F4, dickson_n(F4), r) == F4.zero());
    }

    // Soundness + completeness against brute force over F_q, 3 not dividing m.
    for (unsigned m : {1u, 2u, 4u, 5u, 7u, 8u}) {
        const FieldCtx F = make_ctx(m);
        const u128 n = dickson_n(F);
        const auto rs = dickson_root_set(F);
        CHECK(u128(rs.size()) == F.cards().q / 6);
        std::vector<Elem> brute;
        for (const Elem& x : F.enumerate_subfield(Level::Q)) {
            if (x.is_zero() || x == F.one()) continue;
            if (dickson_eval(F, n, x).is_zero()) brute.push_back(x);
        }
        CHECK(brute == rs);
    }
}
