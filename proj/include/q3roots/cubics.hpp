#pragma once

#include <optional>
#include <vector>

#include "q3roots/field.hpp"

namespace q3roots {

/// Polynomial c3*X^3 + c2*X^2 + c1*X + c0 over the field.
struct Cubic {
    Elem c3, c2, c1, c0;

    Elem eval(const FieldCtx& F, Elem x) const {
        Elem r = c3;
        r = F.add(F.mul(r, x), c2);
        r = F.add(F.mul(r, x), c1);
        return F.add(F.mul(r, x), c0);
    }
};

/// Evaluate a dense coefficient list (index = degree) at x.
Elem poly_eval(const FieldCtx& F, const std::vector<Elem>& coeffs, Elem x);

/// Coefficients of f(X) = (a^2+1)X^9 + aX^8 + (a^4+a^2+1)X + (a^5+a),
/// the numerator of rho(rho(rho(X))) + X.
std::vector<Elem> f_poly(const FieldCtx& F, Elem a);

/// The factorization data f = f0*f1*f2 attached to an admissible a:
/// b solves b^2+b = 1/a + 1 (so b^2+b+1 = 1/a) and c = (b+omega)/(b+omega^2).
struct FSystem {
    Elem a, b, c;
    std::vector<Elem> f; // degree 9, coefficient list
    Cubic f0, f1, f2;
};

struct CubicCount {
    int count = 0;                 // 0, 1 or 3
    std::optional<Elem> witness;   // nonzero e with e^2 + B e + A^3 = 0, when representable
};

/// Root count of X^3 + A X + B over the given subfield, decided by the trace
/// of A^3/B^2 and the cube test on the witness; no enumeration. B != 0.
CubicCount cubic_count_fq(const FieldCtx& F, Elem A, Elem B, Level lv);

/// The three roots of X^3 + X + a (a != 0) in F_{q^6}: the values v + 1/v
/// over the cube roots v of e, where e^2 + a e + 1 = 0. Sorted by encoding.
std::vector<Elem> depressed_cubic_roots(const FieldCtx& F, Elem a);

/// Builds the f-system for a in F_q \ F_2 with Tr(1/a) = Tr(1); verifies the
/// product identity f = f0*f1*f2 and that f is squarefree. `alternate_b`
/// picks the other Artin-Schreier solution b+1 (testing hook; swaps f1/f2
/// and c <-> 1/c).
FSystem build_f_system(const FieldCtx& F, Elem a, bool alternate_b = false);

/// rho(x) = a/(x^2+1); pole at x = 1.
Elem rho_eval(const FieldCtx& F, Elem a, Elem x);

enum class Twist { Fixed, QTwist, InverseQTwist, None };

struct TwistReport {
    Twist twist = Twist::None;
    bool in_fq3 = false;     // beta^(q^3) == beta
    bool f_vanishes = false; // f(beta) == 0 for the given a
};

/// Classifies beta by whether rho(beta) equals beta, beta^q, or beta^(q^5)
/// (the 1/q-th power on F_{q^3}-contained roots). beta != 1.
TwistReport twist_classify(const FieldCtx& F, Elem a, Elem beta);

enum class CubicSplit { Split3, Irreducible };

/// f_i splits into three distinct F_q-roots iff omega^i * c is a cube in
/// F_{q^2}; irreducible otherwise.
CubicSplit fi_reducibility(const FieldCtx& F, const FSystem& fsys, int i);

} // namespace q3roots
