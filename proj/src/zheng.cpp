#include "q3roots/zheng.hpp"

#include <algorithm>

namespace q3roots {

namespace {

bool in_f2(const FieldCtx& F, Elem x) { return x == F.zero() || x == F.one(); }

void verify_g_roots(const FieldCtx& F, long long ell, Elem h, Elem e, const RootSet& rs) {
    for (const Elem& r : rs.roots) {
        if (g_eval(F, ell, h, e, r) != F.zero())
            throw InternalError("scaled root fails direct G evaluation");
    }
}

// c = (b+omega)/(b+omega^2) for the scaled b.
Elem scaled_c(const FieldCtx& F, Elem b) {
    const Elem w = F.omega();
    const Elem w2 = F.add(w, F.one());
    return F.div(F.add(b, w), F.add(b, w2));
}

} // namespace

ZhengReport zheng_validate(const FieldCtx& F, Elem h, Elem e) {
    if (!F.in_subfield(h, Level::Q)) throw ValidationError("h not in F_q");
    if (!F.in_subfield(e, Level::Q)) throw ValidationError("e not in F_q");
    if (in_f2(F, h)) throw ValidationError("h lies in F_2");
    if (in_f2(F, e)) throw ValidationError("e lies in F_2");
    const Elem target = F.add(F.add(F.square(e), e), F.one());
    if (F.pow(h, 3) != target) throw ValidationError("h^3 != e^2 + e + 1");

    ZhengReport rep;
    rep.u = F.sqrt_elem(h);
    rep.b_scaled = F.inv(F.sqrt_elem(e));
    rep.a_scaled = F.div(e, F.pow(rep.u, 3));

    // Lemma-scale assertions; these follow from the validated inputs.
    if (!F.in_subfield(rep.a_scaled, Level::Q) || in_f2(F, rep.a_scaled))
        throw InternalError("scaled a outside F_q \\ F_2");
    if (F.square(F.square(rep.b_scaled)) == rep.b_scaled)
        throw InternalError("scaled b landed in F_4");
    const Elem lhs = F.add(F.square(rep.b_scaled), rep.b_scaled);
    if (lhs != F.add(F.inv(rep.a_scaled), F.one()))
        throw InternalError("scaled b fails b^2+b = 1/a + 1");

    rep.mu_char = F.cubic_character(F.add(e, F.omega()));
    return rep;
}

Elem g_eval(const FieldCtx& F, long long ell, Elem h, Elem e, Elem x) {
    const Elem fx = F.frobenius_q(x, unsigned(ell % 3));
    return F.add(F.add(F.mul(F.square(fx), x), F.mul(h, x)), e);
}

RootSet zheng_solve(const FieldCtx& F, const ZhengRequest& req, const SolveOptions& opts) {
    const ZhengReport rep = zheng_validate(F, req.h, req.e);
    const auto [hroots, hcase] = solve(F, SolveRequest{req.ell, rep.a_scaled}, opts);
    (void)hcase;
    std::vector<Elem> out;
    out.reserve(hroots.roots.size());
    for (const Elem& r : hroots.roots) out.push_back(F.mul(rep.u, r));
    RootSet rs = make_root_set(F, std::move(out), Level::Q3);
    verify_g_roots(F, req.ell, req.h, req.e, rs);
    return rs;
}

RootSet zheng_mu_roots(const FieldCtx& F, const ZhengRequest& req, const SolveOptions& opts) {
    const int l3 = int(((req.ell % 3) + 3) % 3);
    if (l3 == 0) throw DomainError("mu-roots criterion is stated for ell = 1, 2 (mod 3)");
    ZhengReport rep = zheng_validate(F, req.h, req.e);
    const bool criterion = (rep.mu_char == (3 - l3) % 3); // omega^(-ell)
    if (!criterion) return RootSet{{}, Level::Q3};

    // With b+1 in place of b the roles of f1/f2 swap: c inverts and the cube
    // target picks up omega^2 instead of omega. Both routes yield the same set.
    const Elem c = scaled_c(F, rep.b_scaled);
    const Elem w1 = opts.alternate_b ? F.add(F.omega(), F.one()) : F.omega();
    const Elem c_used = opts.alternate_b ? F.inv(c) : c;
    const Elem sqrt_h = rep.u;
    const Elem h2 = F.square(req.h);
    const Elem esh = F.mul(req.e, sqrt_h);

    const Cubic target{F.one(), h2, F.mul(F.add(req.e, F.one()), req.h), F.one()};
    const auto vs = F.cube_roots(F.mul(w1, c_used));
    if (vs.size() != 3) throw InternalError("mu-roots cube roots missing");
    std::vector<Elem> out;
    for (const Elem& v : vs) {
        const Elem r = F.add(h2, F.mul(esh, F.add(v, F.inv(v))));
        if (!F.mu_membership(r)) throw InternalError("mu-root fails mu membership");
        if (target.eval(F, r) != F.zero())
            throw InternalError("mu-root fails the stated cubic");
        out.push_back(r);
    }
    RootSet rs = make_root_set(F, std::move(out), Level::Q3);
    if (rs.roots.size() != 3) throw InternalError("mu-roots not distinct");
    verify_g_roots(F, req.ell, req.h, req.e, rs);
    return rs;
}

ZhengCase zheng_case(const FieldCtx& F, const ZhengRequest& req, const SolveOptions& opts) {
    if (F.m() % 3 == 1) throw DomainError("case analysis requires m != 1 (mod 3)");
    const int l3 = int(((req.ell % 3) + 3) % 3);
    if (l3 != 2) throw DomainError("case analysis requires ell = 2 (mod 3)");

    ZhengCase out;
    out.report = zheng_validate(F, req.h, req.e);
    out.report.mu_criterion = (out.report.mu_char == 1); // omega^(-2) = omega
    out.gamma = zheng_solve(F, req, opts);
    if (out.gamma.roots.size() != 3) throw InternalError("case analysis expected |Gamma| = 3");

    const Elem w = F.omega();
    const bool flag = F.cubic_character(F.add(F.one(), F.mul(w, req.e))) == 0;
    out.report.subfield_flag = flag;
    bool all_in_fq = true;
    for (const Elem& r : out.gamma.roots) all_in_fq = all_in_fq && F.in_subfield(r, Level::Q);
    if (flag != all_in_fq)
        throw InternalError("subfield criterion disagrees with the actual roots");

    const Elem e = req.e, h = req.h;
    const Elem h2 = F.square(h);
    if (!flag) {
        Cubic Fx;
        if (out.report.mu_char == 1) {
            Fx = Cubic{F.one(), h2, F.mul(F.add(e, F.one()), h), F.one()};
        } else {
            Fx = Cubic{F.add(e, F.one()), h2, h, F.add(F.square(e), F.one())};
        }
        out.report.selected_cubic = Fx;
        for (const Elem& r : out.gamma.roots) {
            if (Fx.eval(F, r) != F.zero())
                throw InternalError("selected F(X) does not vanish on Gamma");
        }
    }

    // Explicit three-branch formula, keyed by (e+omega)^((q^2-1)/3). Under the
    // b <-> b+1 swap c inverts and the omega powers in branches 1/2 trade
    // places; the resulting sets coincide.
    const Elem c_can = scaled_c(F, out.report.b_scaled);
    const Elem c = opts.alternate_b ? F.inv(c_can) : c_can;
    const Elem w1 = opts.alternate_b ? F.add(w, F.one()) : w;
    const Elem w2 = opts.alternate_b ? w : F.add(w, F.one());
    const Elem sqrt_h = out.report.u;
    const int j = out.report.mu_char;
    Elem cube_target;
    if (j == int(F.m() % 3)) {
        out.explicit_branch = 0;
        cube_target = c;
    } else if (j == 1) {
        out.explicit_branch = 1;
        cube_target = F.mul(w1, c);
    } else {
        out.explicit_branch = 2;
        cube_target = F.mul(w2, c);
    }
    const auto vs = F.cube_roots(cube_target);
    if (vs.size() != 3) throw InternalError("explicit-formula cube roots missing");
    for (const Elem& v : vs) {
        const Elem s = F.add(v, F.inv(v));
        Elem r;
        if (out.explicit_branch == 0) r = F.mul(sqrt_h, s);
        else if (out.explicit_branch == 1) r = F.add(h2, F.mul(F.mul(e, sqrt_h), s));
        else r = F.div(F.add(h2, F.mul(F.mul(e, sqrt_h), s)), F.add(e, F.one()));
        out.explicit_roots.push_back(r);
    }
    std::sort(out.explicit_roots.begin(), out.explicit_roots.end());
    if (out.explicit_roots != out.gamma.roots)
        throw InternalError("explicit formula disagrees with Gamma");
    return out;
}

} // namespace q3roots
