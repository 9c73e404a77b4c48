#include "q3roots/field.hpp"

#include <algorithm>
#include <cstring>

#include "q3roots/gf2poly.hpp"

namespace q3roots {

namespace {

using i128 = __int128;

constexpr size_t kLevels = 5;

size_t li(Level lv) { return size_t(lv); }

int lead_bit(const Elem& e) {
    if (e.hi) return 64 + 63 - __builtin_clzll(e.hi);
    if (e.lo) return 63 - __builtin_clzll(e.lo);
    return -1;
}

Elem exor(const Elem& a, const Elem& b) { return Elem{a.lo ^ b.lo, a.hi ^ b.hi}; }

// Carry-less 64x64 -> 128 multiplication.
u128 clmul64(uint64_t a, uint64_t b) {
    u128 r = 0;
    const u128 x = a;
    while (b) {
        r ^= x << __builtin_ctzll(b);
        b &= b - 1;
    }
    return r;
}

u128 modinv_u128(u128 a, u128 mod) {
    if (mod == 1) return 0;
    i128 t = 0, newt = 1;
    i128 r = i128(mod), newr = i128(a % mod);
    while (newr != 0) {
        const i128 quot = r / newr;
        i128 tmp = t - quot * newt;
        t = newt;
        newt = tmp;
        tmp = r - quot * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw InternalError("modinv: arguments not coprime");
    if (t < 0) t += i128(mod);
    return u128(t);
}

LinMap make_map(const std::vector<Elem>& cols, unsigned D) {
    LinMap m;
    m.nbytes = (D + 7) / 8;
    m.tab.resize(m.nbytes);
    for (unsigned j = 0; j < m.nbytes; ++j) {
        for (unsigned b = 0; b < 256; ++b) {
            Elem r;
            for (unsigned k = 0; k < 8; ++k) {
                if ((b >> k) & 1) {
                    const unsigned idx = 8 * j + k;
                    if (idx < D) r = exor(r, cols[idx]);
                }
            }
            m.tab[j][b] = r;
        }
    }
    return m;
}

std::vector<Elem> identity_cols(unsigned D) {
    std::vector<Elem> cols(D);
    for (unsigned i = 0; i < D; ++i) cols[i] = Elem::from_bits(u128(1) << i);
    return cols;
}

std::vector<Elem> compose_cols(const LinMap& m, const std::vector<Elem>& cols) {
    std::vector<Elem> out(cols.size());
    for (size_t i = 0; i < cols.size(); ++i) out[i] = m.apply(cols[i]);
    return out;
}

} // namespace

const char* level_name(Level lv) {
    switch (lv) {
        case Level::F2: return "f2";
        case Level::Q: return "q";
        case Level::Q2: return "q2";
        case Level::Q3: return "q3";
        case Level::Q6: return "q6";
    }
    return "?";
}

Level level_from_name(const std::string& name) {
    if (name == "f2") return Level::F2;
    if (name == "q") return Level::Q;
    if (name == "q2") return Level::Q2;
    if (name == "q3") return Level::Q3;
    if (name == "q6") return Level::Q6;
    throw ValidationError("unknown subfield level: " + name);
}

struct FieldCtx::Core {
    FieldParams params;
    unsigned D = 0;      // 6m
    unsigned words = 1;  // coefficient words in use
    u128 modulus = 0;
    u128 low_mask = 0;

    Cardinals cards;

    std::vector<std::array<Elem, 256>> redtab; // (b * X^(D+8j)) mod modulus
    LinMap sq;                                 // x -> x^2
    LinMap sqroot;                             // x -> x^(2^(6m-1))
    std::array<LinMap, 5> frob;                // x -> x^(q^(k+1)), k = 0..4
    std::array<LinMap, kLevels> trace_map;     // x -> sum x^(2^i), i < level degree
    std::array<std::vector<Elem>, kLevels> bases;

    struct ASPivots {
        std::vector<int> at;                       // bit position -> row index or -1
        std::vector<std::pair<Elem, Elem>> rows;   // (image, preimage)
    };
    std::array<ASPivots, kLevels> as_piv;

    Elem omega_small, omega_large;

    // Cube-root machinery: q^6-1 = 3^s * t with 3 not dividing t.
    Elem noncube, amm_h, amm_hinv, amm_gamma;
    unsigned amm_s = 0;
    u128 amm_t = 0;
    u128 amm_inv3_mod_t = 0;
    std::vector<u128> pow3;

    unsigned level_deg(Level lv) const {
        switch (lv) {
            case Level::F2: return 1;
            case Level::Q: return params.m;
            case Level::Q2: return 2 * params.m;
            case Level::Q3: return 3 * params.m;
            case Level::Q6: return 6 * params.m;
        }
        return 0;
    }

    Elem reduce_high(Elem low, u128 high) const {
        unsigned j = 0;
        while (high) {
            const Elem& t = redtab[j][size_t(high & 0xff)];
            low.lo ^= t.lo;
            low.hi ^= t.hi;
            high >>= 8;
            ++j;
        }
        return low;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        if (words == 1) {
            const u128 p = clmul64(a.lo, b.lo);
            return reduce_high(Elem{uint64_t(p & low_mask), 0}, p >> D);
        }
        const u128 ll = clmul64(a.lo, b.lo);
        const u128 lh = clmul64(a.lo, b.hi);
        const u128 hl = clmul64(a.hi, b.lo);
        const u128 hh = clmul64(a.hi, b.hi);
        const u128 mid = lh ^ hl;
        const u128 plo = ll ^ (mid << 64);
        const u128 phi = hh ^ (mid >> 64);
        const u128 high = (plo >> D) ^ (phi << (128 - D));
        return reduce_high(Elem::from_bits(plo & low_mask), high);
    }

    Elem square(const Elem& a) const { return sq.apply(a); }

    Elem pow(Elem x, u128 k) const {
        Elem r{1, 0};
        while (k) {
            if (k & 1) r = mul(r, x);
            x = square(x);
            k >>= 1;
        }
        return r;
    }

    Elem inv(const Elem& a) const {
        if (a.is_zero()) throw ZeroDivisionError("inversion of zero");
        return pow(a, cards.q6_minus1 - 1);
    }

    bool in_level(const Elem& x, Level lv) const {
        switch (lv) {
            case Level::F2: return sq.apply(x) == x;
            case Level::Q: return frob[0].apply(x) == x;
            case Level::Q2: return frob[1].apply(x) == x;
            case Level::Q3: return frob[2].apply(x) == x;
            case Level::Q6: return true;
        }
        return false;
    }

    std::optional<std::pair<Elem, Elem>> as_solve(const Elem& d, Level lv) const {
        const auto& piv = as_piv[li(lv)];
        Elem r = d, x;
        while (!r.is_zero()) {
            const int p = lead_bit(r);
            const int row = piv.at[size_t(p)];
            if (row < 0) return std::nullopt; // trace 1: no solution at this level
            r = exor(r, piv.rows[size_t(row)].first);
            x = exor(x, piv.rows[size_t(row)].second);
        }
        Elem x2 = exor(x, Elem{1, 0});
        if (x2 < x) std::swap(x, x2);
        return std::make_pair(x, x2);
    }

    void init();
};

void FieldCtx::Core::init() {
    const unsigned m = params.m;
    if (m < 1 || m > 21) throw RangeError("m must satisfy 1 <= m <= 21");
    D = 6 * m;
    words = (D <= 64) ? 1 : 2;
    low_mask = (u128(1) << D) - 1;

    if (params.modulus) {
        modulus = *params.modulus;
        if (u128_bit_length(modulus) != int(D) + 1)
            throw ConstructionError("modulus does not have degree 6m");
        if (!gf2poly_is_irreducible(GF2Poly::from_u128(modulus)))
            throw ConstructionError("modulus is reducible");
    } else {
        modulus = least_irreducible_poly(D);
    }

    cards.q = u128(1) << m;
    cards.q_minus1 = cards.q - 1;
    cards.q2_minus1 = (u128(1) << (2 * m)) - 1;
    cards.q3_minus1 = (u128(1) << (3 * m)) - 1;
    cards.q6_minus1 = (u128(1) << D) - 1;
    cards.q2_minus1_div3 = cards.q2_minus1 / 3;
    cards.q6_minus1_div3 = cards.q6_minus1 / 3;
    cards.q2_plus_q_plus_1 = cards.q * cards.q + cards.q + 1;

    const GF2Poly mod_poly = GF2Poly::from_u128(modulus);

    // Reduction table: (b * X^(D+8j)) mod modulus for each byte value b.
    redtab.resize(16);
    std::vector<GF2Poly> xpow(D + 128);
    xpow[0] = GF2Poly::mod(GF2Poly::one().shifted_left(D), mod_poly);
    for (unsigned i = 1; i < D + 128; ++i) {
        GF2Poly t = xpow[i - 1].shifted_left(1);
        xpow[i] = GF2Poly::mod(t, mod_poly);
    }
    for (unsigned j = 0; j < 16; ++j) {
        for (unsigned b = 0; b < 256; ++b) {
            GF2Poly acc;
            for (unsigned k = 0; k < 8; ++k) {
                if ((b >> k) & 1) acc ^= xpow[8 * j + k];
            }
            redtab[j][b] = Elem::from_bits(acc.to_u128());
        }
    }

    // Squaring map: column i = x^(2i) mod modulus.
    std::vector<Elem> sq_cols(D);
    {
        GF2Poly t = GF2Poly::one();
        const GF2Poly x2 = GF2Poly::from_u128(4);
        for (unsigned i = 0; i < D; ++i) {
            sq_cols[i] = Elem::from_bits(t.to_u128());
            t = GF2Poly::mod(GF2Poly::mul(t, x2), mod_poly);
        }
    }
    sq = make_map(sq_cols, D);

    // Square root: squaring has order D, so sqrt = square^(D-1).
    {
        std::vector<Elem> cols = identity_cols(D);
        for (unsigned k = 0; k + 1 < D; ++k) cols = compose_cols(sq, cols);
        sqroot = make_map(cols, D);
    }

    // Frobenius powers x -> x^(q^k), k = 1..5.
    {
        std::vector<Elem> cols = identity_cols(D);
        for (unsigned k = 0; k < m; ++k) cols = compose_cols(sq, cols);
        frob[0] = make_map(cols, D);
        for (unsigned k = 1; k < 5; ++k) {
            cols = compose_cols(frob[0], cols);
            frob[k] = make_map(cols, D);
        }
    }

    // Level traces.
    for (Level lv : {Level::F2, Level::Q, Level::Q2, Level::Q3, Level::Q6}) {
        const unsigned d = level_deg(lv);
        std::vector<Elem> cols(D);
        for (unsigned i = 0; i < D; ++i) {
            Elem v = Elem::from_bits(u128(1) << i);
            Elem acc;
            for (unsigned j = 0; j < d; ++j) {
                acc = exor(acc, v);
                v = sq.apply(v);
            }
            cols[i] = acc;
        }
        trace_map[li(lv)] = make_map(cols, D);
    }

    // Subfield bases: reduced-row-echelon kernel bases of u -> u^(2^d) + u.
    for (Level lv : {Level::F2, Level::Q, Level::Q2, Level::Q3, Level::Q6}) {
        const unsigned d = level_deg(lv);
        std::vector<Elem> kernel;
        if (lv == Level::Q6) {
            kernel = identity_cols(D); // the map is zero: everything is fixed
        } else {
            // Columns of (Frob_d + I); track input combinations through elimination.
            std::vector<int> pivot_at(D, -1);
            std::vector<std::pair<Elem, Elem>> pivots; // (column, combination)
            for (unsigned i = 0; i < D; ++i) {
                Elem e = Elem::from_bits(u128(1) << i);
                Elem v = e;
                for (unsigned j = 0; j < d; ++j) v = sq.apply(v);
                Elem col = exor(v, e);
                Elem combo = e;
                bool placed = false;
                while (!col.is_zero()) {
                    const int p = lead_bit(col);
                    if (pivot_at[size_t(p)] < 0) {
                        pivot_at[size_t(p)] = int(pivots.size());
                        pivots.emplace_back(col, combo);
                        placed = true;
                        break;
                    }
                    const auto& pr = pivots[size_t(pivot_at[size_t(p)])];
                    col = exor(col, pr.first);
                    combo = exor(combo, pr.second);
                }
                if (!placed) kernel.push_back(combo);
            }
        }
        // Reduce the kernel vectors to row-echelon form, pivots ascending.
        std::vector<Elem> rref;
        for (Elem v : kernel) {
            for (const Elem& r : rref) {
                if (!v.is_zero() && ((v.bits() >> lead_bit(r)) & 1)) v = exor(v, r);
            }
            if (!v.is_zero()) {
                // Clear this pivot bit from earlier rows.
                for (Elem& r : rref) {
                    if ((r.bits() >> lead_bit(v)) & 1) r = exor(r, v);
                }
                rref.push_back(v);
            }
        }
        std::sort(rref.begin(), rref.end(),
                  [](const Elem& a, const Elem& b) { return lead_bit(a) < lead_bit(b); });
        if (rref.size() != d) throw InternalError("subfield basis has wrong dimension");
        bases[li(lv)] = std::move(rref);
    }

    // Artin-Schreier pivots per level: echelonised (v^2+v, v) pairs over the basis.
    for (Level lv : {Level::F2, Level::Q, Level::Q2, Level::Q3, Level::Q6}) {
        auto& piv = as_piv[li(lv)];
        piv.at.assign(D, -1);
        for (const Elem& b : bases[li(lv)]) {
            Elem img = exor(sq.apply(b), b);
            Elem pre = b;
            while (!img.is_zero()) {
                const int p = lead_bit(img);
                const int row = piv.at[size_t(p)];
                if (row < 0) {
                    piv.at[size_t(p)] = int(piv.rows.size());
                    piv.rows.emplace_back(img, pre);
                    break;
                }
                img = exor(img, piv.rows[size_t(row)].first);
                pre = exor(pre, piv.rows[size_t(row)].second);
            }
        }
    }

    // omega: the two roots of X^2+X+1, smaller encoding first.
    {
        auto sols = as_solve(Elem{1, 0}, Level::Q6);
        if (!sols) throw InternalError("X^2+X=1 unsolvable in F_{2^(6m)}");
        omega_small = sols->first;
        omega_large = sols->second;
        const Elem w = omega_small;
        if (exor(exor(sq.apply(w), w), Elem{1, 0}) != Elem{} || w == Elem{1, 0})
            throw InternalError("omega does not satisfy X^2+X+1=0");
    }

    // Cube-root data: first non-cube in enumeration order, 3-Sylow generator.
    {
        u128 n = cards.q6_minus1;
        amm_s = 0;
        while (n % 3 == 0) {
            ++amm_s;
            n /= 3;
        }
        amm_t = n;
        pow3.resize(amm_s + 1);
        pow3[0] = 1;
        for (unsigned i = 1; i <= amm_s; ++i) pow3[i] = pow3[i - 1] * 3;
        const u128 chi_exp = cards.q6_minus1_div3;
        Elem g;
        for (u128 i = 1;; ++i) {
            if (i > cards.q6_minus1) throw InternalError("no non-cube found");
            Elem cand = Elem::from_bits(i);
            if (pow(cand, chi_exp) != Elem{1, 0}) {
                g = cand;
                break;
            }
        }
        noncube = g;
        amm_h = pow(g, amm_t);
        amm_hinv = inv(amm_h);
        amm_gamma = pow(amm_h, pow3[amm_s - 1]);
        amm_inv3_mod_t = (amm_t == 1) ? 0 : modinv_u128(3 % amm_t, amm_t);
        if (amm_gamma != omega_small && amm_gamma != omega_large)
            throw InternalError("3-Sylow generator has wrong order");
    }
}

FieldCtx::FieldCtx(const FieldParams& params) {
    auto core = std::make_shared<Core>();
    core->params = params;
    core->init();
    omega_ = core->omega_small;
    core_ = std::move(core);
}

FieldCtx::FieldCtx(std::shared_ptr<const Core> core, Elem omega)
    : core_(std::move(core)), omega_(omega) {}

FieldCtx FieldCtx::with_conjugate_omega() const {
    const Elem other = (omega_ == core_->omega_small) ? core_->omega_large : core_->omega_small;
    return FieldCtx(core_, other);
}

unsigned FieldCtx::m() const { return core_->params.m; }
unsigned FieldCtx::degree() const { return core_->D; }
u128 FieldCtx::modulus_bits() const { return core_->modulus; }
const Cardinals& FieldCtx::cards() const { return core_->cards; }

unsigned FieldCtx::level_degree(Level lv) const { return core_->level_deg(lv); }
u128 FieldCtx::level_card(Level lv) const { return u128(1) << core_->level_deg(lv); }
const std::vector<Elem>& FieldCtx::basis(Level lv) const { return core_->bases[li(lv)]; }

Elem FieldCtx::mul(Elem a, Elem b) const { return core_->mul(a, b); }
Elem FieldCtx::square(Elem a) const { return core_->square(a); }

Elem FieldCtx::inv(Elem a) const { return core_->inv(a); }

Elem FieldCtx::div(Elem a, Elem b) const {
    if (b.is_zero()) throw ZeroDivisionError("division by zero");
    return core_->mul(a, core_->inv(b));
}

Elem FieldCtx::pow(Elem x, u128 k) const { return core_->pow(x, k); }

Elem FieldCtx::frobenius_q(Elem x, unsigned k) const {
    k %= 6;
    if (k == 0) return x;
    return core_->frob[k - 1].apply(x);
}

Elem FieldCtx::sqrt_elem(Elem x) const { return core_->sqroot.apply(x); }

bool FieldCtx::in_subfield(Elem x, Level lv) const { return core_->in_level(x, lv); }

int FieldCtx::abs_trace(Elem x, Level lv) const {
    if (!core_->in_level(x, lv))
        throw MembershipError(std::string("element not in subfield ") + level_name(lv));
    const Elem t = core_->trace_map[li(lv)].apply(x);
    if (t == Elem{}) return 0;
    if (t == Elem{1, 0}) return 1;
    throw InternalError("trace landed outside F_2");
}

std::optional<std::pair<Elem, Elem>> FieldCtx::artin_schreier_solve(Elem d, Level lv) const {
    if (!core_->in_level(d, lv))
        throw MembershipError(std::string("element not in subfield ") + level_name(lv));
    return core_->as_solve(d, lv);
}

std::vector<Elem> FieldCtx::cube_roots(Elem y) const {
    if (y.is_zero()) return {Elem{}};
    const Core& c = *core_;
    if (c.pow(y, c.cards.q6_minus1_div3) != Elem{1, 0}) return {};
    // Split y into its order-t and 3-Sylow components and take cube roots of each.
    const u128 sylow = c.pow3[c.amm_s];
    const u128 alpha = (c.amm_t == 1) ? 0 : modinv_u128(sylow % c.amm_t, c.amm_t);
    const Elem y_t = c.pow(c.pow(y, sylow), alpha);
    const u128 tprime = modinv_u128(c.amm_t % sylow, sylow);
    const Elem y_3 = c.pow(c.pow(y, c.amm_t), tprime);
    const Elem root_t = c.pow(y_t, c.amm_inv3_mod_t);
    // Pohlig-Hellman digits of y_3 in the cyclic 3-Sylow.
    u128 dlog = 0;
    for (unsigned k = 0; k < c.amm_s; ++k) {
        const Elem probe = c.mul(y_3, c.pow(c.amm_hinv, dlog));
        const Elem e = c.pow(probe, c.pow3[c.amm_s - 1 - k]);
        u128 digit;
        if (e == Elem{1, 0}) digit = 0;
        else if (e == c.amm_gamma) digit = 1;
        else digit = 2;
        dlog += digit * c.pow3[k];
    }
    if (dlog % 3 != 0) throw InternalError("cube-root dlog inconsistent with character");
    const Elem root_3 = c.pow(c.amm_h, dlog / 3);
    const Elem r0 = c.mul(root_t, root_3);
    if (c.pow(r0, 3) != y) throw InternalError("cube root verification failed");
    std::vector<Elem> out{r0, c.mul(r0, c.omega_small), c.mul(r0, c.omega_large)};
    std::sort(out.begin(), out.end());
    return out;
}

int FieldCtx::cubic_character(Elem y) const {
    if (y.is_zero()) throw DomainError("cubic character of zero");
    if (!core_->in_level(y, Level::Q2))
        throw DomainError("cubic character argument not in F_{q^2}");
    const Elem p = core_->pow(y, core_->cards.q2_minus1_div3);
    if (p == Elem{1, 0}) return 0;
    if (p == omega_) return 1;
    if (p == add(omega_, Elem{1, 0})) return 2;
    throw InternalError("cubic character landed outside mu_3");
}

bool FieldCtx::mu_membership(Elem x) const {
    if (x.is_zero()) return false;
    if (!core_->in_level(x, Level::Q3)) return false;
    const Elem norm = core_->mul(core_->mul(frobenius_q(x, 2), frobenius_q(x, 1)), x);
    return norm == Elem{1, 0};
}

SubfieldRange FieldCtx::enumerate_subfield(Level lv) const {
    return SubfieldRange(this, lv, level_card(lv));
}

Elem FieldCtx::subfield_element(Level lv, u128 index) const {
    const auto& b = core_->bases[li(lv)];
    Elem r;
    unsigned i = 0;
    while (index) {
        if (index & 1) r = exor(r, b[i]);
        index >>= 1;
        ++i;
    }
    return r;
}

std::string FieldCtx::to_hex(Elem e) const { return u128_to_hex(e.bits()); }

Elem FieldCtx::from_hex(const std::string& s) const {
    const u128 v = u128_from_hex(s);
    if (u128_bit_length(v) > int(core_->D))
        throw ValidationError("element encoding exceeds field degree: " + s);
    return Elem::from_bits(v);
}

} // namespace q3roots
