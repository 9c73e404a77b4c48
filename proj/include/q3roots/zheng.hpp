#pragma once

#include <optional>
#include <vector>

#include "q3roots/cubics.hpp"
#include "q3roots/solver.hpp"

namespace q3roots {

struct ZhengRequest {
    long long ell = 2;
    Elem h, e; // h, e in F_q \ F_2 with h^3 = e^2 + e + 1
};

/// Scaling data u = sqrt(h), b = 1/sqrt(e), a = e/u^3, plus the witnesses of
/// the mu and subfield criteria as they get computed.
struct ZhengReport {
    Elem u, b_scaled, a_scaled;
    int mu_char = 0;                      // j with (e+omega)^((q^2-1)/3) = omega^j
    std::optional<bool> mu_criterion;     // mu_char == -ell (mod 3)
    std::optional<Cubic> selected_cubic;  // F(X) when the roots avoid F_q
    std::optional<bool> subfield_flag;    // Gamma contained in F_q
};

/// Checks h, e in F_q \ F_2 and h^3 = e^2+e+1; computes u, b, a and asserts
/// the scaling identities. Throws ValidationError naming the violated
/// condition.
ZhengReport zheng_validate(const FieldCtx& F, Elem h, Elem e);

/// G_ell(x) = x^(2q^ell+1) + h x + e, via the Frobenius shortcut on F_{q^3}.
Elem g_eval(const FieldCtx& F, long long ell, Elem h, Elem e, Elem x);

/// Roots of G_ell in F_{q^3}: u times the roots of H_ell(X) = X^(2q^ell+1)+X+a.
RootSet zheng_solve(const FieldCtx& F, const ZhengRequest& req, const SolveOptions& opts = {});

/// Roots of G_ell inside mu_(q^2+q+1): empty unless
/// (e+omega)^((q^2-1)/3) = omega^(-ell), in which case they are the three
/// roots of X^3 + h^2 X^2 + (e+1)h X + 1. Requires ell = 1 or 2 (mod 3).
RootSet zheng_mu_roots(const FieldCtx& F, const ZhengRequest& req, const SolveOptions& opts = {});

struct ZhengCase {
    ZhengReport report;
    RootSet gamma;                    // the three roots of G_2 in F_{q^3}
    int explicit_branch = 0;          // which of the three explicit formulas applied
    std::vector<Elem> explicit_roots; // the formula's output (equals gamma)
};

/// Full case analysis for ell = 2 (mod 3) and m != 1 (mod 3): |Gamma| = 3,
/// Gamma in F_q iff 1 + omega*e is a cube in F_{q^2}, with the F(X) selection
/// and the explicit three-branch root formula both verified against Gamma.
ZhengCase zheng_case(const FieldCtx& F, const ZhengRequest& req, const SolveOptions& opts = {});

} // namespace q3roots
