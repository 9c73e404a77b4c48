#pragma once

#include <random>
#include <vector>

#include "q3roots/field.hpp"

namespace q3roots::testing {

inline FieldCtx make_ctx(unsigned m) { return FieldCtx(FieldParams{m, std::nullopt}); }

inline std::mt19937_64 rng(uint64_t seed = 0x5eed1234abcdULL) { return std::mt19937_64(seed); }

inline Elem random_elem(const FieldCtx& F, Level lv, std::mt19937_64& g) {
    const u128 card = F.level_card(lv);
    u128 idx = ((u128(g()) << 64) | g()) % card;
    return F.subfield_element(lv, idx);
}

inline Elem random_nonzero(const FieldCtx& F, Level lv, std::mt19937_64& g) {
    for (;;) {
        Elem e = random_elem(F, lv, g);
        if (!e.is_zero()) return e;
    }
}

/// Elements a in F_q \ F_2 with Tr(1/a) = Tr(1), in enumeration order.
inline std::vector<Elem> admissible_a(const FieldCtx& F) {
    std::vector<Elem> out;
    const int tr1 = F.abs_trace(F.one(), Level::Q);
    for (const Elem& a : F.enumerate_subfield(Level::Q)) {
        if (a == F.zero() || a == F.one()) continue;
        if (F.abs_trace(F.inv(a), Level::Q) == tr1) out.push_back(a);
    }
    return out;
}

/// First element t of the level-q subfield with t^3 + t + 1 = 0 (exists iff 3 | m).
inline Elem cubic_generator(const FieldCtx& F) {
    for (const Elem& t : F.enumerate_subfield(Level::Q)) {
        if (F.add(F.add(F.pow(t, 3), t), F.one()) == F.zero()) return t;
    }
    throw std::runtime_error("no root of X^3+X+1 in F_q");
}

/// All valid Zheng pairs (h, e), deterministic order.
inline std::vector<std::pair<Elem, Elem>> valid_he(const FieldCtx& F) {
    std::vector<std::pair<Elem, Elem>> out;
    for (const Elem& h : F.enumerate_subfield(Level::Q)) {
        if (h == F.zero() || h == F.one()) continue;
        const Elem rhs = F.add(F.pow(h, 3), F.one());
        if (F.abs_trace(rhs, Level::Q) != 0) continue;
        const auto es = F.artin_schreier_solve(rhs, Level::Q);
        if (!es) continue;
        for (const Elem& e : {es->first, es->second}) {
            if (e == F.zero() || e == F.one()) continue;
            out.emplace_back(h, e);
        }
    }
    return out;
}

} // namespace q3roots::testing
