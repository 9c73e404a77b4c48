#include "q3roots/solver.hpp"

#include <algorithm>

#include "q3roots/dickson.hpp"

namespace q3roots {

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::A_ZERO: return "A_ZERO";
        case Branch::ELL_DIV3: return "ELL_DIV3";
        case Branch::A_ONE: return "A_ONE";
        case Branch::TRACE_MISMATCH: return "TRACE_MISMATCH";
        case Branch::THM_ROOTS: return "THM_ROOTS";
    }
    return "?";
}

const char* selection_name(Selection s) {
    switch (s) {
        case Selection::Lambda0: return "Lambda0";
        case Selection::Lambda1: return "Lambda1";
        case Selection::Lambda2: return "Lambda2";
        case Selection::LambdaAll: return "Lambda";
        case Selection::Empty: return "empty";
        case Selection::ExplicitCubic: return "explicit-cubic";
        case Selection::Pair01: return "pair01";
        case Selection::Singleton: return "singleton";
    }
    return "?";
}

bool RootSet::contains(const Elem& e) const {
    return std::binary_search(roots.begin(), roots.end(), e);
}

RootSet make_root_set(const FieldCtx& F, std::vector<Elem> roots, Level lv) {
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (const Elem& r : roots) {
        if (!F.in_subfield(r, lv))
            throw InternalError("root set member outside claimed subfield");
    }
    return RootSet{std::move(roots), lv};
}

namespace {

// e in F_{q^2}* with e^2 + a e + 1 = 0, for a in F_q*. The two solutions are
// e and 1/e; results that depend on it are symmetric in that choice.
Elem quadratic_e(const FieldCtx& F, Elem a) {
    const auto w = F.artin_schreier_solve(F.inv(F.square(a)), Level::Q2);
    if (!w) throw InternalError("e^2+ae+1 unsolvable in F_{q^2}");
    return F.mul(a, w->first);
}

std::vector<Elem> reciprocal_roots(const FieldCtx& F, const std::vector<Elem>& rs) {
    std::vector<Elem> out;
    out.reserve(rs.size());
    for (const Elem& r : rs) out.push_back(F.inv(r));
    return out;
}

void verify_h_roots(const FieldCtx& F, long long ell, Elem a, const RootSet& rs) {
    for (const Elem& r : rs.roots) {
        if (h_eval(F, ell, a, r) != F.zero())
            throw InternalError("closed-form root fails direct H evaluation");
    }
}

// Theorem-roots selector: which Lambda set (if any) is Gamma_ell.
Selection thm_roots_selection(const FieldCtx& F, int chi, int m3, int l3, int& k_out) {
    if (m3 == 0) {
        if (chi == 0) {
            k_out = 0;
            return Selection::Lambda0;
        }
        // c^((q^2-1)/3) = omega^(-k*ell): k = -chi * ell^-1 = -chi * ell (mod 3).
        const int k = (3 - (chi * l3) % 3) % 3;
        k_out = k;
        return (k == 1) ? Selection::Lambda1 : Selection::Lambda2;
    }
    // Unique k with omega^k * c a cube: k*chi(omega) + chi = 0 (mod 3), and
    // chi(omega) is self-inverse mod 3.
    const int jw = F.cubic_character(F.omega());
    const int k = (((3 - chi) % 3) * jw) % 3;
    k_out = k;
    if (l3 == m3) {
        if (k == 0) return Selection::Lambda0;
        return (k == 1) ? Selection::Lambda2 : Selection::Lambda1; // Lambda_(3-k)
    }
    return (k == 0) ? Selection::LambdaAll : Selection::Empty;
}

} // namespace

LambdaSets lambda_sets(const FieldCtx& F, Elem a, const SolveOptions& opts) {
    const FSystem sys = build_f_system(F, a, opts.alternate_b);
    const Elem w = F.omega();
    const Elem w2 = F.add(w, F.one());
    const Elem ainv = F.inv(a);
    const Elem b2 = F.square(sys.b);
    const Elem b2p1 = F.add(b2, F.one());

    auto branch = [&](Elem cube_target, int i) {
        const auto vs = F.cube_roots(cube_target);
        if (vs.size() != 3) throw InternalError("Lambda cube roots missing in F_{q^6}");
        std::vector<Elem> out;
        for (const Elem& v : vs) {
            const Elem s = F.add(v, F.inv(v));
            if (i == 0) out.push_back(s);
            else if (i == 1) out.push_back(F.div(F.add(ainv, s), b2));
            else out.push_back(F.div(F.add(ainv, s), b2p1));
        }
        return make_root_set(F, std::move(out), Level::Q6);
    };

    LambdaSets L;
    L.l0 = branch(sys.c, 0);
    L.l1 = branch(F.mul(w, sys.c), 1);
    L.l2 = branch(F.mul(w2, sys.c), 2);

    if (L.l0.roots.size() != 3 || L.l1.roots.size() != 3 || L.l2.roots.size() != 3)
        throw InternalError("Lambda set has wrong size");
    std::vector<Elem> all = L.l0.roots;
    all.insert(all.end(), L.l1.roots.begin(), L.l1.roots.end());
    all.insert(all.end(), L.l2.roots.begin(), L.l2.roots.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw InternalError("Lambda sets are not pairwise disjoint");
    return L;
}

std::pair<RootSet, CaseReport> solve(const FieldCtx& F, const SolveRequest& req,
                                     const SolveOptions& opts) {
    if (req.ell < 0) throw RangeError("ell must be nonnegative");
    if (!F.in_subfield(req.a, Level::Q)) throw MembershipError("a not in F_q");

    const Elem a = req.a;
    const int m3 = int(F.m() % 3);
    const int l3 = int(req.ell % 3);

    CaseReport rep;
    rep.m_mod3 = m3;
    rep.ell_mod3 = l3;

    // (i) a = 0: X^(Q+1) + X = X(X+1)^Q.
    if (a.is_zero()) {
        rep.branch = Branch::A_ZERO;
        rep.selected = Selection::Pair01;
        RootSet rs = make_root_set(F, {F.zero(), F.one()}, Level::Q3);
        verify_h_roots(F, req.ell, a, rs);
        return {std::move(rs), rep};
    }

    const int tr1 = F.abs_trace(F.one(), Level::Q);
    const int tra = F.abs_trace(F.inv(a), Level::Q);

    // (ii) 3 | ell with matching traces: H reduces to X^3+X+a on F_{q^3}.
    if (l3 == 0 && tra == tr1) {
        rep.branch = Branch::ELL_DIV3;
        rep.selected = Selection::ExplicitCubic;
        RootSet rs = make_root_set(F, depressed_cubic_roots(F, a), Level::Q3);
        if (rs.roots.size() != 3) throw InternalError("ell=0 branch expected 3 roots");
        verify_h_roots(F, req.ell, a, rs);
        return {std::move(rs), rep};
    }

    // (iii) a = 1 with 3 not dividing ell.
    if (a == F.one() && l3 != 0) {
        rep.branch = Branch::A_ONE;
        std::vector<Elem> roots;
        if (m3 == 0) {
            roots = depressed_cubic_roots(F, F.one()); // X^3+X+1
            rep.selected = Selection::ExplicitCubic;
        } else if (l3 == m3) {
            roots = reciprocal_roots(F, depressed_cubic_roots(F, F.one())); // X^3+X^2+1
            rep.selected = Selection::ExplicitCubic;
        } else {
            rep.selected = Selection::Empty;
        }
        RootSet rs = make_root_set(F, std::move(roots), Level::Q3);
        verify_h_roots(F, req.ell, a, rs);
        return {std::move(rs), rep};
    }

    // (iv) trace mismatch: unique root e^n + e^-n.
    if (tra != tr1) {
        rep.branch = Branch::TRACE_MISMATCH;
        rep.selected = Selection::Singleton;
        const Elem e = quadratic_e(F, a);
        const u128 n = (F.m() % 2 == 1) ? (2 * F.cards().q - 1) / 3 : (F.cards().q + 2) / 3;
        const u128 ord = F.cards().q2_minus1;
        const Elem root = F.add(F.pow(e, n), F.pow(e, ord - (n % ord)));
        RootSet rs = make_root_set(F, {root}, Level::Q3);
        verify_h_roots(F, req.ell, a, rs);
        return {std::move(rs), rep};
    }

    // (v) a in F_q \ F_2, Tr(1/a) = Tr(1), 3 not dividing ell.
    rep.branch = Branch::THM_ROOTS;
    const FSystem sys = build_f_system(F, a, opts.alternate_b);
    rep.b = sys.b;
    rep.c = sys.c;
    const int chi = F.cubic_character(sys.c);
    rep.cubic_char_c = chi;

    int k = 0;
    const Selection sel = thm_roots_selection(F, chi, m3, l3, k);
    rep.k = k;
    rep.selected = sel;
    if ((l3 + m3) % 3 == 0) {
        rep.n = dickson_n(F);
        rep.dickson_value = dickson_eval(F, *rep.n, a);
    }

    std::vector<Elem> roots;
    if (sel != Selection::Empty) {
        const LambdaSets L = lambda_sets(F, a, opts);
        switch (sel) {
            case Selection::Lambda0: roots = L.l0.roots; break;
            case Selection::Lambda1: roots = L.l1.roots; break;
            case Selection::Lambda2: roots = L.l2.roots; break;
            case Selection::LambdaAll:
                roots = L.l0.roots;
                roots.insert(roots.end(), L.l1.roots.begin(), L.l1.roots.end());
                roots.insert(roots.end(), L.l2.roots.begin(), L.l2.roots.end());
                break;
            default: break;
        }
    }
    RootSet rs = make_root_set(F, std::move(roots), Level::Q3);
    verify_h_roots(F, req.ell, a, rs);
    return {std::move(rs), rep};
}

CountResult count(const FieldCtx& F, const SolveRequest& req) {
    if (req.ell < 0) throw RangeError("ell must be nonnegative");
    if (!F.in_subfield(req.a, Level::Q)) throw MembershipError("a not in F_q");

    const Elem a = req.a;
    const int m3 = int(F.m() % 3);
    const int l3 = int(req.ell % 3);

    CountResult out;
    out.report.m_mod3 = m3;
    out.report.ell_mod3 = l3;

    if (a.is_zero()) {
        out.report.branch = Branch::A_ZERO;
        out.report.selected = Selection::Pair01;
        out.n = 2;
        return out;
    }
    const int tr1 = F.abs_trace(F.one(), Level::Q);
    const int tra = F.abs_trace(F.inv(a), Level::Q);
    if (l3 == 0 && tra == tr1) {
        out.report.branch = Branch::ELL_DIV3;
        out.report.selected = Selection::ExplicitCubic;
        out.n = 3;
        return out;
    }
    if (a == F.one() && l3 != 0) {
        out.report.branch = Branch::A_ONE;
        out.n = (m3 == 0 || l3 == m3) ? 3 : 0;
        out.report.selected = (out.n == 3) ? Selection::ExplicitCubic : Selection::Empty;
        return out;
    }
    if (tra != tr1) {
        out.report.branch = Branch::TRACE_MISMATCH;
        out.report.selected = Selection::Singleton;
        out.n = 1;
        return out;
    }
    out.report.branch = Branch::THM_ROOTS;
    const FSystem sys = build_f_system(F, a, false);
    out.report.b = sys.b;
    out.report.c = sys.c;
    const int chi = F.cubic_character(sys.c);
    out.report.cubic_char_c = chi;
    int k = 0;
    out.report.selected = thm_roots_selection(F, chi, m3, l3, k);
    out.report.k = k;
    if ((l3 + m3) % 3 != 0) {
        out.n = 3;
        return out;
    }
    // ell = -m (mod 3): N is 9 or 0 according to the Dickson criterion.
    const u128 n = dickson_n(F);
    const Elem dv = dickson_eval(F, n, a);
    out.report.n = n;
    out.report.dickson_value = dv;
    out.n = dv.is_zero() ? 9 : 0;
    // The Dickson criterion must coincide with the cube-character selection.
    if ((out.n == 9) != (out.report.selected == Selection::LambdaAll))
        throw InternalError("Dickson criterion disagrees with cube-character selection");
    return out;
}

std::vector<int> count_class(const FieldCtx& F, long long ell) {
    if (ell % 3 == 0) throw DomainError("count class requires 3 not dividing ell");
    if ((F.m() + unsigned(ell % 3)) % 3 == 0) return {0, 1, 2, 9};
    return {0, 1, 3};
}

Elem h_eval(const FieldCtx& F, long long ell, Elem a, Elem x) {
    const Elem fx = F.frobenius_q(x, unsigned(ell % 3));
    return F.add(F.add(F.mul(F.square(fx), x), x), a);
}

Elem h_eval_literal(const FieldCtx& F, long long ell, Elem a, Elem x) {
    if (ell < 0 || u128(ell) * F.m() > 125) throw RangeError("literal exponent overflows");
    u128 qpow = 1;
    for (long long i = 0; i < ell; ++i) qpow <<= F.m();
    return F.add(F.add(F.pow(x, 2 * qpow + 1), x), a);
}

} // namespace q3roots
