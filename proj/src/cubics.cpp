#include "q3roots/cubics.hpp"

#include <algorithm>

namespace q3roots {

namespace {

using Poly = std::vector<Elem>; // dense, index = degree

void trim(const FieldCtx& F, Poly& p) {
    while (!p.empty() && p.back() == F.zero()) p.pop_back();
}

Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, F.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == F.zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
        }
    }
    return r;
}

Poly poly_mod(const FieldCtx& F, Poly a, const Poly& m) {
    trim(F, a);
    while (a.size() >= m.size() && !a.empty()) {
        const Elem q = F.div(a.back(), m.back());
        const size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            a[shift + i] = F.add(a[shift + i], F.mul(q, m[i]));
        }
        trim(F, a);
    }
    return a;
}

Poly poly_gcd(const FieldCtx& F, Poly a, Poly b) {
    trim(F, a);
    trim(F, b);
    while (!b.empty()) {
        a = poly_mod(F, a, b);
        std::swap(a, b);
    }
    return a;
}

Poly poly_derivative(const FieldCtx& F, const Poly& a) {
    Poly r;
    for (size_t i = 1; i < a.size(); ++i) {
        r.push_back((i & 1) ? a[i] : F.zero());
    }
    trim(F, r);
    return r;
}

Poly cubic_to_poly(const Cubic& c) { return {c.c0, c.c1, c.c2, c.c3}; }

// Witness location for Lemma W: the quadratic extension of each level within
// the tower (only needed when the Artin-Schreier trace forces a proper
// extension; q2 and q6 have even degree so never do on the decision path).
std::optional<Level> quadratic_ext(Level lv) {
    switch (lv) {
        case Level::F2:
        case Level::Q: return Level::Q2;
        case Level::Q3: return Level::Q6;
        default: return std::nullopt;
    }
}

} // namespace

Elem poly_eval(const FieldCtx& F, const std::vector<Elem>& coeffs, Elem x) {
    Elem r = F.zero();
    for (size_t i = coeffs.size(); i-- > 0;) {
        r = F.add(F.mul(r, x), coeffs[i]);
    }
    return r;
}

std::vector<Elem> f_poly(const FieldCtx& F, Elem a) {
    const Elem one = F.one();
    const Elem a2 = F.square(a);
    const Elem a4 = F.square(a2);
    std::vector<Elem> f(10, F.zero());
    f[9] = F.add(a2, one);
    f[8] = a;
    f[1] = F.add(F.add(a4, a2), one);
    f[0] = F.add(F.mul(a4, a), a);
    return f;
}

CubicCount cubic_count_fq(const FieldCtx& F, Elem A, Elem B, Level lv) {
    if (B.is_zero()) throw DomainError("Lemma-W count requires B != 0");
    if (!F.in_subfield(A, lv) || !F.in_subfield(B, lv))
        throw MembershipError("cubic coefficients not in the requested subfield");

    const Elem ratio = F.div(F.pow(A, 3), F.square(B)); // A^3/B^2
    const int trv = F.abs_trace(ratio, lv);
    const int tr1 = F.abs_trace(F.one(), lv);

    // Witness: e = B*w with w^2 + w = A^3/B^2, solved in the level when the
    // trace vanishes, otherwise in its quadratic extension inside the tower.
    std::optional<Elem> witness;
    std::optional<std::pair<Elem, Elem>> w;
    if (trv == 0) {
        w = F.artin_schreier_solve(ratio, lv);
    } else if (auto ext = quadratic_ext(lv)) {
        w = F.artin_schreier_solve(ratio, *ext);
    }
    if (w) {
        const Elem e1 = F.mul(B, w->first);
        const Elem e2 = F.mul(B, w->second);
        if (e1.is_zero()) witness = e2;
        else if (e2.is_zero()) witness = e1;
        else witness = std::min(e1, e2);
    }

    CubicCount out;
    out.witness = witness;
    if (trv != tr1) {
        out.count = 1;
        return out;
    }
    if (!witness) throw InternalError("Lemma-W witness missing on decision path");
    // Cube test in F_{2^(2d)}. For levels q/q2 this reduces to the exponent
    // (q^2-1)/3, for q3/q6 to (q^6-1)/3, and for F_2 to (2^2-1)/3 = 1.
    u128 exp;
    switch (lv) {
        case Level::F2: exp = 1; break;
        case Level::Q:
        case Level::Q2: exp = F.cards().q2_minus1_div3; break;
        default: exp = F.cards().q6_minus1_div3; break;
    }
    out.count = (F.pow(*witness, exp) == F.one()) ? 3 : 0;
    return out;
}

std::vector<Elem> depressed_cubic_roots(const FieldCtx& F, Elem a) {
    if (a.is_zero()) throw DomainError("X^3+X+a requires a != 0");
    // e = a*w with w^2 + w = 1/a^2; e^2 + a e + 1 = 0.
    const Elem rhs = F.inv(F.square(a));
    auto w = F.artin_schreier_solve(rhs, Level::Q6);
    if (!w) throw DomainError("auxiliary quadratic has no root in F_{q^6}");
    const Elem e = F.mul(a, w->first);
    const auto vs = F.cube_roots(e);
    if (vs.size() != 3) throw DomainError("auxiliary cube roots lie outside F_{q^6}");
    std::vector<Elem> out;
    for (const Elem& v : vs) {
        const Elem r = F.add(v, F.inv(v));
        if (F.add(F.add(F.pow(r, 3), r), a) != F.zero())
            throw InternalError("X^3+X+a root verification failed");
        out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() != 3) throw InternalError("X^3+X+a roots not distinct");
    return out;
}

FSystem build_f_system(const FieldCtx& F, Elem a, bool alternate_b) {
    if (!F.in_subfield(a, Level::Q)) throw MembershipError("a not in F_q");
    if (a == F.zero() || a == F.one()) throw DomainError("f-system requires a outside F_2");
    const Elem ainv = F.inv(a);
    if (F.abs_trace(ainv, Level::Q) != F.abs_trace(F.one(), Level::Q))
        throw TraceConditionError("Tr(1/a) != Tr(1): no b with b^2+b = 1/a + 1");

    const auto sols = F.artin_schreier_solve(F.add(ainv, F.one()), Level::Q);
    if (!sols) throw InternalError("b equation unsolvable despite matching traces");
    const Elem b = alternate_b ? sols->second : sols->first;
    if (F.in_subfield(b, Level::F2) || F.square(F.square(b)) == b)
        throw InternalError("b landed in F_4");

    const Elem w = F.omega();
    const Elem w2 = F.add(w, F.one());
    const Elem c = F.div(F.add(b, w), F.add(b, w2));

    FSystem sys;
    sys.a = a;
    sys.b = b;
    sys.c = c;
    const Elem one = F.one();
    const Elem b2 = F.square(b);
    const Elem bp1sq = F.square(F.add(b, one));
    sys.f0 = Cubic{one, F.zero(), one, a};
    sys.f1 = Cubic{F.mul(a, b2), one, F.mul(a, bp1sq), F.mul(F.square(a), F.square(b2))};
    sys.f2 = Cubic{F.mul(a, bp1sq), one, F.mul(a, b2), F.mul(F.square(a), F.square(bp1sq))};
    sys.f = f_poly(F, a);

    Poly prod = poly_mul(F, poly_mul(F, cubic_to_poly(sys.f0), cubic_to_poly(sys.f1)),
                         cubic_to_poly(sys.f2));
    if (prod != sys.f) throw InternalError("f != f0*f1*f2");

    Poly g = poly_gcd(F, sys.f, poly_derivative(F, sys.f));
    if (g.size() != 1) throw InternalError("f is not squarefree");
    return sys;
}

Elem rho_eval(const FieldCtx& F, Elem a, Elem x) {
    if (x == F.one()) throw PoleError("rho has a pole at x = 1");
    return F.div(a, F.add(F.square(x), F.one()));
}

TwistReport twist_classify(const FieldCtx& F, Elem a, Elem beta) {
    if (beta == F.one()) throw PoleError("rho has a pole at x = 1");
    TwistReport rep;
    rep.in_fq3 = F.in_subfield(beta, Level::Q3);
    rep.f_vanishes = poly_eval(F, f_poly(F, a), beta) == F.zero();
    const Elem r = rho_eval(F, a, beta);
    if (r == beta) rep.twist = Twist::Fixed;
    else if (r == F.frobenius_q(beta, 1)) rep.twist = Twist::QTwist;
    else if (r == F.frobenius_q(beta, 5)) rep.twist = Twist::InverseQTwist;
    else rep.twist = Twist::None;
    return rep;
}

CubicSplit fi_reducibility(const FieldCtx& F, const FSystem& fsys, int i) {
    Elem factor = F.one();
    if (i == 1) factor = F.omega();
    if (i == 2) factor = F.add(F.omega(), F.one());
    const int chi = F.cubic_character(F.mul(factor, fsys.c));
    return chi == 0 ? CubicSplit::Split3 : CubicSplit::Irreducible;
}

} // namespace q3roots
