#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "q3roots/errors.hpp"
#include "q3roots/util.hpp"

namespace q3roots {

/// Element of F_{2^(6m)} as a coefficient bit-vector in the power basis of
/// the field modulus (bit i = coefficient of x^i). Canonical: always reduced,
/// so equality is bit equality. All arithmetic lives on FieldCtx.
struct Elem {
    uint64_t lo = 0;
    uint64_t hi = 0;

    friend bool operator==(const Elem& a, const Elem& b) { return a.lo == b.lo && a.hi == b.hi; }
    friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }
    friend bool operator<(const Elem& a, const Elem& b) {
        return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
    }
    u128 bits() const { return (u128(hi) << 64) | lo; }
    static Elem from_bits(u128 v) { return Elem{uint64_t(v), uint64_t(v >> 64)}; }
    bool is_zero() const { return (lo | hi) == 0; }
};

struct ElemHash {
    size_t operator()(const Elem& e) const {
        uint64_t h = e.lo * 0x9e3779b97f4a7c15ULL;
        h ^= (e.hi + 0x9e3779b97f4a7c15ULL) + (h << 6) + (h >> 2);
        return size_t(h);
    }
};

/// The four subfields of interest plus the prime field.
enum class Level { F2, Q, Q2, Q3, Q6 };

const char* level_name(Level lv);
Level level_from_name(const std::string& name);

struct FieldParams {
    unsigned m = 1;                   // q = 2^m, 1 <= m <= 21
    std::optional<u128> modulus;      // bit-encoded irreducible of degree 6m
};

struct Cardinals {
    u128 q = 0;
    u128 q_minus1 = 0;
    u128 q2_minus1 = 0;
    u128 q3_minus1 = 0;
    u128 q6_minus1 = 0;
    u128 q2_minus1_div3 = 0;
    u128 q6_minus1_div3 = 0;
    u128 q2_plus_q_plus_1 = 0;
};

/// F_2-linear map on the field, applied via byte-indexed lookup tables.
struct LinMap {
    unsigned nbytes = 0;
    std::vector<std::array<Elem, 256>> tab;

    Elem apply(Elem x) const {
        Elem r;
        uint64_t v = x.lo;
        unsigned j = 0;
        for (; j < nbytes && j < 8; ++j, v >>= 8) {
            const Elem& t = tab[j][v & 0xff];
            r.lo ^= t.lo;
            r.hi ^= t.hi;
        }
        v = x.hi;
        for (; j < nbytes; ++j, v >>= 8) {
            const Elem& t = tab[j][v & 0xff];
            r.lo ^= t.lo;
            r.hi ^= t.hi;
        }
        return r;
    }
};

class SubfieldRange;

/// Immutable description of F_{2^(6m)} with its canonical subfield structure.
/// Construction computes the default modulus (least-encoding irreducible of
/// degree 6m), subfield bases, Frobenius/trace tables and Artin-Schreier
/// solvers; afterwards every operation is a pure function of (ctx, inputs),
/// so a ctx is safely shareable across threads. Copies are cheap (shared
/// immutable core).
class FieldCtx {
public:
    explicit FieldCtx(const FieldParams& params);

    unsigned m() const;
    unsigned degree() const; // 6m
    u128 modulus_bits() const;
    const Cardinals& cards() const;

    unsigned level_degree(Level lv) const;
    u128 level_card(Level lv) const;
    const std::vector<Elem>& basis(Level lv) const;

    Elem zero() const { return Elem{}; }
    Elem one() const { return Elem{1, 0}; }
    /// The fixed element of F_4 \ F_2 (smaller-encoded root of X^2+X+1).
    Elem omega() const { return omega_; }
    /// Same field, with omega replaced by omega^2 = omega+1. Testing hook for
    /// the omega-choice invariance properties.
    FieldCtx with_conjugate_omega() const;

    // --- base arithmetic ---
    Elem add(Elem a, Elem b) const { return Elem{a.lo ^ b.lo, a.hi ^ b.hi}; }
    Elem mul(Elem a, Elem b) const;
    Elem square(Elem a) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem x, u128 k) const; // pow(0,0) = 1

    /// x^(q^k), i.e. k*m repeated squarings (precomputed linear maps).
    Elem frobenius_q(Elem x, unsigned k) const;
    /// The unique y with y^2 = x, namely x^(2^(6m-1)).
    Elem sqrt_elem(Elem x) const;

    bool in_subfield(Elem x, Level lv) const;
    /// Absolute trace of the level: sum of x^(2^i) for i < level degree,
    /// reported as a bit. Throws MembershipError if x is outside the level.
    int abs_trace(Elem x, Level lv) const;

    /// Solutions {x, x+1} of X^2+X = d inside the level, smaller encoding
    /// first; empty when abs_trace(d) = 1.
    std::optional<std::pair<Elem, Elem>> artin_schreier_solve(Elem d, Level lv) const;

    /// All v in the full field with v^3 = y: {0} for y=0, else 0 or 3
    /// elements (sorted by encoding).
    std::vector<Elem> cube_roots(Elem y) const;

    /// The unique j in {0,1,2} with y^((q^2-1)/3) = omega^j; j=0 iff y is a
    /// cube in F_{q^2}. Requires y != 0 and y in F_{q^2}.
    int cubic_character(Elem y) const;

    /// x != 0, x in F_{q^3}, and x^(q^2+q+1) = 1.
    bool mu_membership(Elem x) const;

    // --- enumeration ---
    /// All 2^d elements of the level, index i mapping to the sum of basis
    /// vectors at the set bits of i; deterministic for a fixed ctx.
    SubfieldRange enumerate_subfield(Level lv) const;
    Elem subfield_element(Level lv, u128 index) const;

    // --- wire format ---
    std::string to_hex(Elem e) const;
    Elem from_hex(const std::string& s) const;

private:
    struct Core;
    std::shared_ptr<const Core> core_;
    Elem omega_;

    FieldCtx(std::shared_ptr<const Core> core, Elem omega);
};

/// Restartable stream over a subfield, in enumeration order.
class SubfieldRange {
public:
    SubfieldRange(const FieldCtx* ctx, Level lv, u128 count)
        : ctx_(ctx), lv_(lv), count_(count) {}

    class iterator {
    public:
        iterator(const SubfieldRange* r, u128 index) : r_(r), index_(index) {
            if (r_ && index_ < r_->count_) cur_ = r_->ctx_->subfield_element(r_->lv_, index_);
        }
        const Elem& operator*() const { return cur_; }
        iterator& operator++() {
            // Binary increment: xor the basis vectors of every flipped bit.
            const u128 flips = index_ ^ (index_ + 1);
            ++index_;
            if (index_ < r_->count_) {
                const auto& basis = r_->ctx_->basis(r_->lv_);
                u128 f = flips;
                unsigned i = 0;
                while (f) {
                    if (f & 1) {
                        cur_.lo ^= basis[i].lo;
                        cur_.hi ^= basis[i].hi;
                    }
                    f >>= 1;
                    ++i;
                }
            }
            return *this;
        }
        bool operator!=(const iterator& o) const { return index_ != o.index_; }

    private:
        const SubfieldRange* r_;
        u128 index_;
        Elem cur_;
    };

    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, count_); }
    u128 size() const { return count_; }

private:
    const FieldCtx* ctx_;
    Level lv_;
    u128 count_;
};

/// Spec-level constructor alias.
inline FieldCtx build_ctx(const FieldParams& params) { return FieldCtx(params); }

} // namespace q3roots
