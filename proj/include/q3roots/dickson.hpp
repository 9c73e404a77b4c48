#pragma once

#include <vector>

#include "q3roots/field.hpp"

namespace q3roots {

struct DicksonQuery {
    u128 n = 1;   // degree, n >= 1
    Elem x;       // evaluation point in F_q
};

/// The Dickson degree used throughout: n = floor((q+1)/3).
u128 dickson_n(const FieldCtx& F);

/// D_n(x) for x in F_q, where D_n is the degree-n Dickson polynomial of the
/// first kind with parameter 1 (D_n(z + 1/z) = z^n + z^-n). Evaluated through
/// the lift z in F_{q^2} solving Z^2 + xZ + 1 = 0; the result lies in F_q.
Elem dickson_eval(const FieldCtx& F, u128 n, Elem x);

/// D_n(x) for arbitrary x, computed in the quotient ring
/// F[Z]/(Z^2 + xZ + 1): if Z^n = u + vZ there, then D_n(x) = v*x.
/// Independent of the lift route; valid even when the lift leaves the field.
Elem dickson_eval_ring(const FieldCtx& F, u128 n, Elem x);

/// Roots of D_n in F_q \ F_2 for n = floor((q+1)/3): the values z + 1/z over
/// z in F_{q^2} with z^n = 1, z != 1. Requires 3 not dividing m; the result
/// has exactly floor(q/6) elements, sorted by encoding.
std::vector<Elem> dickson_root_set(const FieldCtx& F);

} // namespace q3roots
