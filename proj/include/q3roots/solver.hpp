#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "q3roots/cubics.hpp"
#include "q3roots/field.hpp"

namespace q3roots {

/// Which part of the dispatch produced the answer.
enum class Branch { A_ZERO, ELL_DIV3, A_ONE, TRACE_MISMATCH, THM_ROOTS };

/// Shape of the returned root set.
enum class Selection {
    Lambda0,
    Lambda1,
    Lambda2,
    LambdaAll,
    Empty,
    ExplicitCubic,
    Pair01,
    Singleton,
};

const char* branch_name(Branch b);
const char* selection_name(Selection s);

struct SolveRequest {
    long long ell = 1; // only ell mod 3 matters on F_{q^3}; ell >= 0
    Elem a;            // must lie in F_q
};

/// Witnesses for the branch that fired; optional fields are populated exactly
/// when the branch uses them.
struct CaseReport {
    Branch branch = Branch::THM_ROOTS;
    int m_mod3 = 0;
    int ell_mod3 = 0;
    std::optional<Elem> b;
    std::optional<Elem> c;
    std::optional<int> cubic_char_c;
    std::optional<int> k;             // Theorem-roots selector
    std::optional<u128> n;            // floor((q+1)/3)
    std::optional<Elem> dickson_value; // D_n(a)
    Selection selected = Selection::Empty;
};

/// Deduplicated, sorted roots, each certified to lie in the claimed subfield.
struct RootSet {
    std::vector<Elem> roots;
    Level level = Level::Q3;

    bool contains(const Elem& e) const;
    friend bool operator==(const RootSet& x, const RootSet& y) { return x.roots == y.roots; }
};

RootSet make_root_set(const FieldCtx& F, std::vector<Elem> roots, Level lv);

struct SolveOptions {
    bool alternate_b = false; // testing hook: use b+1 in the f-system
};

struct LambdaSets {
    RootSet l0, l1, l2; // over F_{q^6}, pairwise disjoint, each of size 3
};

/// The three explicit candidate root sets built from the cube roots of
/// c, omega*c, omega^2*c; equal to the root sets of f0, f1, f2.
LambdaSets lambda_sets(const FieldCtx& F, Elem a, const SolveOptions& opts = {});

/// Exact set of roots of H_ell(X) = X^(2q^ell+1) + X + a in F_{q^3}, with the
/// full case dispatch. Every returned root is re-verified by direct
/// evaluation of H_ell.
std::pair<RootSet, CaseReport> solve(const FieldCtx& F, const SolveRequest& req,
                                     const SolveOptions& opts = {});

struct CountResult {
    int n = 0;
    CaseReport report;
};

/// Root count without enumerating roots; the N=9 test goes through the
/// Dickson criterion D_n(a) = 0.
CountResult count(const FieldCtx& F, const SolveRequest& req);

/// Admissible root counts of X^(2q^ell+1)+X+a over a in F_{q^3}*:
/// {0,1,2,9} when m = -ell (mod 3), else {0,1,3}. Requires 3 not dividing ell.
std::vector<int> count_class(const FieldCtx& F, long long ell);

/// H_ell(x) = x^(2q^ell+1) + x + a, computed as frobenius_q(x, ell mod 3)^2 * x + x + a.
Elem h_eval(const FieldCtx& F, long long ell, Elem a, Elem x);

/// Literal evaluation via pow with exponent 2q^ell+1 (no Frobenius shortcut);
/// requires 2q^ell to fit in 128 bits.
Elem h_eval_literal(const FieldCtx& F, long long ell, Elem a, Elem x);

} // namespace q3roots
