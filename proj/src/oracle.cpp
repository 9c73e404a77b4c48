#include "q3roots/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "q3roots/dickson.hpp"

namespace q3roots {

namespace {

using Payload = std::map<std::string, std::string>;
using CheckFn = std::function<std::optional<Payload>(size_t)>;

const std::vector<Elem> kNoRoots;

std::string hex_set(const FieldCtx& F, const std::vector<Elem>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += F.to_hex(v[i]);
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// Parallel item runner. Items are independent; the reported counterexample is
// the one with the smallest index, and with fail_fast every item before it is
// still processed, so the outcome does not depend on the worker count.
// ---------------------------------------------------------------------------

struct RunResult {
    uint64_t item_count = 0;
    uint64_t failures = 0;
    std::optional<std::pair<size_t, Payload>> first;
};

std::optional<Payload> guarded(const CheckFn& fn, size_t i) {
    try {
        return fn(i);
    } catch (const std::exception& e) {
        return Payload{{"what", e.what()}};
    }
}

RunResult run_checks(size_t item_count, unsigned workers, bool fail_fast, const CheckFn& fn) {
    RunResult out;
    out.item_count = item_count;
    if (item_count == 0) return out;
    std::mutex mu;
    std::vector<std::pair<size_t, Payload>> fails;
    std::atomic<size_t> next{0};
    std::atomic<size_t> min_fail{item_count};

    auto work = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= item_count) break;
            if (fail_fast && i >= min_fail.load(std::memory_order_relaxed)) break;
            auto r = guarded(fn, i);
            if (r) {
                std::lock_guard<std::mutex> lk(mu);
                fails.emplace_back(i, std::move(*r));
                size_t cur = min_fail.load();
                while (i < cur && !min_fail.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    if (!fails.empty()) {
        std::sort(fails.begin(), fails.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        out.first = fails.front();
        out.failures = fail_fast ? 1 : fails.size();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Shared scan caches.
// ---------------------------------------------------------------------------

// Groups every x in F_{q^3} by x^(2q^ell) * x + x, so the zeros of H_ell for a
// given a are exactly the bucket of a. Same arithmetic as h_eval, reorganized
// so one scan answers all a at once.
struct HIndex {
    std::unordered_map<Elem, std::vector<Elem>, ElemHash> buckets;

    const std::vector<Elem>& lookup(const Elem& a) const {
        auto it = buckets.find(a);
        return it == buckets.end() ? kNoRoots : it->second;
    }
};

HIndex build_h_index(const FieldCtx& F, int l3, bool q_keys_only) {
    HIndex idx;
    for (const Elem& x : F.enumerate_subfield(Level::Q3)) {
        const Elem w = F.mul(F.square(F.frobenius_q(x, unsigned(l3))), x);
        const Elem val = F.add(w, x);
        if (q_keys_only && !F.in_subfield(val, Level::Q)) continue;
        idx.buckets[val].push_back(x);
    }
    for (auto& kv : idx.buckets) std::sort(kv.second.begin(), kv.second.end());
    return idx;
}

std::vector<Elem> mu_elements(const FieldCtx& F) {
    std::vector<Elem> mu;
    for (const Elem& x : F.enumerate_subfield(Level::Q3)) {
        if (F.mu_membership(x)) mu.push_back(x);
    }
    return mu;
}

// ---------------------------------------------------------------------------
// Quantifier domains.
// ---------------------------------------------------------------------------

std::vector<Elem> admissible_a(const FieldCtx& F) {
    std::vector<Elem> out;
    const int tr1 = F.abs_trace(F.one(), Level::Q);
    for (const Elem& a : F.enumerate_subfield(Level::Q)) {
        if (a == F.zero() || a == F.one()) continue;
        if (F.abs_trace(F.inv(a), Level::Q) == tr1) out.push_back(a);
    }
    return out;
}

std::vector<Elem> mismatch_a(const FieldCtx& F) {
    std::vector<Elem> out;
    const int tr1 = F.abs_trace(F.one(), Level::Q);
    for (const Elem& a : F.enumerate_subfield(Level::Q)) {
        if (a == F.zero() || a == F.one()) continue;
        if (F.abs_trace(F.inv(a), Level::Q) != tr1) out.push_back(a);
    }
    return out;
}

std::vector<std::pair<Elem, Elem>> valid_he(const FieldCtx& F) {
    std::vector<std::pair<Elem, Elem>> out;
    for (const Elem& h : F.enumerate_subfield(Level::Q)) {
        if (h == F.zero() || h == F.one()) continue;
        // e^2 + e = h^3 + 1.
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

} // namespace

// ---------------------------------------------------------------------------
// Brute-force ground truth.
// ---------------------------------------------------------------------------

RootSet brute_roots_H(const FieldCtx& F, long long ell, Elem a) {
    std::vector<Elem> roots;
    for (const Elem& x : F.enumerate_subfield(Level::Q3)) {
        if (h_eval(F, ell, a, x) == F.zero()) roots.push_back(x);
    }
    return make_root_set(F, std::move(roots), Level::Q3);
}

RootSet brute_roots_G(const FieldCtx& F, long long ell, Elem h, Elem e, bool mu_only) {
    std::vector<Elem> roots;
    for (const Elem& x : F.enumerate_subfield(Level::Q3)) {
        if (g_eval(F, ell, h, e, x) != F.zero()) continue;
        if (mu_only && !F.mu_membership(x)) continue;
        roots.push_back(x);
    }
    return make_root_set(F, std::move(roots), Level::Q3);
}

// ---------------------------------------------------------------------------
// Sweep targets.
// ---------------------------------------------------------------------------

const char* sweep_target_name(SweepTarget t) {
    switch (t) {
        case SweepTarget::MAIN: return "MAIN";
        case SweepTarget::SUPPLEMENT: return "SUPPLEMENT";
        case SweepTarget::ROOTS: return "ROOTS";
        case SweepTarget::A1: return "A1";
        case SweepTarget::MAIN2: return "MAIN2";
        case SweepTarget::COR3: return "COR3";
        case SweepTarget::NI: return "NI";
        case SweepTarget::FACTORIZATION: return "FACTORIZATION";
        case SweepTarget::ZHENG: return "ZHENG";
        case SweepTarget::ZHENG2: return "ZHENG2";
        case SweepTarget::ZHENGPROP: return "ZHENGPROP";
    }
    return "?";
}

SweepTarget sweep_target_from_name(const std::string& name) {
    for (SweepTarget t :
         {SweepTarget::MAIN, SweepTarget::SUPPLEMENT, SweepTarget::ROOTS, SweepTarget::A1,
          SweepTarget::MAIN2, SweepTarget::COR3, SweepTarget::NI, SweepTarget::FACTORIZATION,
          SweepTarget::ZHENG, SweepTarget::ZHENG2, SweepTarget::ZHENGPROP}) {
        if (name == sweep_target_name(t)) return t;
    }
    throw ValidationError("unknown sweep target: " + name);
}

namespace {

struct Plan {
    size_t item_count = 0;
    CheckFn fn;
};

Plan plan_main(const FieldCtx& F, const SweepSpec& spec) {
    auto as = std::make_shared<std::vector<Elem>>(admissible_a(F));
    std::shared_ptr<std::array<HIndex, 2>> idx;
    if (F.m() <= spec.oracle_cap) {
        idx = std::make_shared<std::array<HIndex, 2>>();
        (*idx)[0] = build_h_index(F, 1, true);
        (*idx)[1] = build_h_index(F, 2, true);
    }
    Plan p;
    p.item_count = as->size() * 2;
    p.fn = [F, as, idx](size_t i) -> std::optional<Payload> {
        const Elem a = (*as)[i / 2];
        const long long ell = 1 + static_cast<long long>(i % 2);
        const CountResult cr = count(F, SolveRequest{ell, a});
        const bool boundary = (F.m() + unsigned(ell)) % 3 == 0;
        if (!boundary) {
            if (cr.n != 3)
                return Payload{{"a", F.to_hex(a)},
                               {"ell", std::to_string(ell)},
                               {"claim", "N=3"},
                               {"actual", std::to_string(cr.n)}};
        } else {
            const Elem dv = dickson_eval(F, dickson_n(F), a);
            const bool want9 = dv.is_zero();
            if (cr.n != (want9 ? 9 : 0))
                return Payload{{"a", F.to_hex(a)},
                               {"ell", std::to_string(ell)},
                               {"claim", want9 ? "N=9 (Dickson root)" : "N=0 (Dickson nonroot)"},
                               {"actual", std::to_string(cr.n)}};
        }
        if (idx) {
            const auto& oracle = (*idx)[size_t(ell - 1)].lookup(a);
            if (int(oracle.size()) != cr.n)
                return Payload{{"a", F.to_hex(a)},
                               {"ell", std::to_string(ell)},
                               {"claim", "count = oracle"},
                               {"count", std::to_string(cr.n)},
                               {"oracle", std::to_string(oracle.size())}};
        }
        return std::nullopt;
    };
    return p;
}

Plan plan_roots(const FieldCtx& F, const SweepSpec& spec) {
    (void)spec;
    auto as = std::make_shared<std::vector<Elem>>(admissible_a(F));
    auto idx = std::make_shared<std::array<HIndex, 2>>();
    (*idx)[0] = build_h_index(F, 1, true);
    (*idx)[1] = build_h_index(F, 2, true);
    Plan p;
    p.item_count = as->size() * 2;
    p.fn = [F, as, idx](size_t i) -> std::optional<Payload> {
        const Elem a = (*as)[i / 2];
        const long long ell = 1 + static_cast<long long>(i % 2);
        const auto [rs, rep] = solve(F, SolveRequest{ell, a});
        const auto& oracle = (*idx)[size_t(ell - 1)].lookup(a);
        if (rs.roots != oracle)
            return Payload{{"a", F.to_hex(a)},
                           {"ell", std::to_string(ell)},
                           {"claim", "solve = oracle"},
                           {"solve", hex_set(F, rs.roots)},
                           {"oracle", hex_set(F, oracle)}};
        if (count(F, SolveRequest{ell, a}).n != int(rs.roots.size()))
            return Payload{{"a", F.to_hex(a)},
                           {"ell", std::to_string(ell)},
                           {"claim", "count = |solve|"}};
        const auto cls = count_class(F, ell);
        if (!std::binary_search(cls.begin(), cls.end(), int(rs.roots.size())))
            return Payload{{"a", F.to_hex(a)},
                           {"ell", std::to_string(ell)},
                           {"claim", "count in admissible class"}};
        // Twist certification per Lemma twistdeg3.
        for (const Elem& r : rs.roots) {
            const Elem rho = rho_eval(F, a, r);
            const bool ok = (ell % 3 == 2) ? rho == F.frobenius_q(r, 1)
                                           : F.frobenius_q(rho, 1) == r;
            if (!ok)
                return Payload{{"a", F.to_hex(a)},
                               {"ell", std::to_string(ell)},
                               {"root", F.to_hex(r)},
                               {"claim", "rho twist identity"}};
        }
        return std::nullopt;
    };
    return p;
}

Plan plan_a1(const FieldCtx& F, const SweepSpec& spec) {
    const bool with_oracle = F.m() <= spec.oracle_cap;
    static const long long kElls[] = {1, 2, 4, 5};
    Plan p;
    p.item_count = 4;
    p.fn = [F, with_oracle](size_t i) -> std::optional<Payload> {
        const long long ell = kElls[i];
        const Elem one = F.one();
        const auto [rs, rep] = solve(F, SolveRequest{ell, one});
        const unsigned m = F.m();
        const bool expect3 = (m % 3 == 0) || ((ell - static_cast<long long>(m)) % 3 == 0);
        if (int(rs.roots.size()) != (expect3 ? 3 : 0))
            return Payload{{"ell", std::to_string(ell)},
                           {"claim", expect3 ? "N=3" : "N=0"},
                           {"actual", std::to_string(rs.roots.size())}};
        for (const Elem& r : rs.roots) {
            const Elem r3 = F.pow(r, 3);
            const Elem want = (m % 3 == 0) ? F.add(F.add(r3, r), one)
                                           : F.add(F.add(r3, F.square(r)), one);
            if (want != F.zero())
                return Payload{{"ell", std::to_string(ell)},
                               {"root", F.to_hex(r)},
                               {"claim", (m % 3 == 0) ? "root of X^3+X+1" : "root of X^3+X^2+1"}};
        }
        if (with_oracle) {
            const RootSet oracle = brute_roots_H(F, ell, one);
            if (!(rs == oracle))
                return Payload{{"ell", std::to_string(ell)},
                               {"claim", "solve = oracle"},
                               {"solve", hex_set(F, rs.roots)},
                               {"oracle", hex_set(F, oracle.roots)}};
        }
        return std::nullopt;
    };
    return p;
}

Plan plan_main2(const FieldCtx& F, const SweepSpec& spec) {
    (void)spec;
    auto as = std::make_shared<std::vector<Elem>>(mismatch_a(F));
    auto idx = std::make_shared<std::array<HIndex, 3>>();
    for (int l = 0; l < 3; ++l) (*idx)[size_t(l)] = build_h_index(F, l, true);
    Plan p;
    p.item_count = as->size() * 3;
    p.fn = [F, as, idx](size_t i) -> std::optional<Payload> {
        const Elem a = (*as)[i / 3];
        const long long ell = static_cast<long long>(i % 3);
        const auto [rs, rep] = solve(F, SolveRequest{ell, a});
        const auto& oracle = (*idx)[size_t(ell)].lookup(a);
        if (oracle.size() != 1 || rs.roots != oracle)
            return Payload{{"a", F.to_hex(a)},
                           {"ell", std::to_string(ell)},
                           {"claim", "unique root matching e^n+e^-n"},
                           {"solve", hex_set(F, rs.roots)},
                           {"oracle", hex_set(F, oracle)}};
        return std::nullopt;
    };
    return p;
}

Plan plan_cor3(const FieldCtx& F, const SweepSpec& spec) {
    (void)spec;
    std::vector<Elem> as;
    const int tr1 = F.abs_trace(F.one(), Level::Q);
    for (const Elem& a : F.enumerate_subfield(Level::Q)) {
        if (a.is_zero()) continue;
        if (F.abs_trace(F.inv(a), Level::Q) == tr1) as.push_back(a);
    }
    auto shared_as = std::make_shared<std::vector<Elem>>(std::move(as));
    auto idx = std::make_shared<HIndex>(build_h_index(F, 0, true));
    Plan p;
    p.item_count = shared_as->size();
    p.fn = [F, shared_as, idx](size_t i) -> std::optional<Payload> {
        const Elem a = (*shared_as)[i];
        const auto [rs, rep] = solve(F, SolveRequest{3, a});
        if (rep.branch != Branch::ELL_DIV3 || rs.roots.size() != 3)
            return Payload{{"a", F.to_hex(a)}, {"claim", "|Gamma|=3 via the cubic branch"}};
        const auto& oracle = idx->lookup(a);
        if (rs.roots != oracle)
            return Payload{{"a", F.to_hex(a)},
                           {"claim", "solve = oracle"},
                           {"solve", hex_set(F, rs.roots)},
                           {"oracle", hex_set(F, oracle)}};
        for (const Elem& r : rs.roots) {
            if (F.add(F.add(F.pow(r, 3), r), a) != F.zero())
                return Payload{{"a", F.to_hex(a)}, {"root", F.to_hex(r)}, {"claim", "X^3+X+a root"}};
        }
        return std::nullopt;
    };
    return p;
}

Plan plan_ni(const FieldCtx& F, const SweepSpec& spec) {
    (void)spec;
    auto idx = std::make_shared<std::array<HIndex, 2>>();
    (*idx)[0] = build_h_index(F, 1, false);
    (*idx)[1] = build_h_index(F, 2, false);
    const u128 q3 = F.level_card(Level::Q3);
    Plan p;
    p.item_count = size_t((q3 - 1) * 2);
    p.fn = [F, idx](size_t i) -> std::optional<Payload> {
        const Elem a = F.subfield_element(Level::Q3, 1 + u128(i / 2));
        const long long ell = 1 + static_cast<long long>(i % 2);
        const int n = int((*idx)[size_t(ell - 1)].lookup(a).size());
        const auto cls = count_class(F, ell);
        if (!std::binary_search(cls.begin(), cls.end(), n))
            return Payload{{"a", F.to_hex(a)},
                           {"ell", std::to_string(ell)},
                           {"claim", "count in {0,1,2,9} / {0,1,3}"},
                           {"actual", std::to_string(n)}};
        return std::nullopt;
    };
    return p;
}

Plan plan_factorization(const FieldCtx& F, const SweepSpec& spec) {
    (void)spec;
    auto as = std::make_shared<std::vector<Elem>>(admissible_a(F));
    Plan p;
    p.item_count = as->size();
    p.fn = [F, as](size_t i) -> std::optional<Payload> {
        const Elem a = (*as)[i];
        build_f_system(F, a); // product identity + squarefreeness asserted inside
        const LambdaSets L = lambda_sets(F, a);
        for (const Elem& r : L.l0.roots) {
            if (rho_eval(F, a, r) != r)
                return Payload{{"a", F.to_hex(a)}, {"claim", "rho fixes the roots of f0"}};
        }
        for (const RootSet* li : {&L.l1, &L.l2}) {
            for (const Elem& r : li->roots) {
                const Elem s = rho_eval(F, a, r);
                if (!li->contains(s) || s == r || rho_eval(F, a, rho_eval(F, a, s)) != r)
                    return Payload{{"a", F.to_hex(a)},
                                   {"root", F.to_hex(r)},
                                   {"claim", "rho 3-cycles the roots of f1/f2"}};
            }
        }
        return std::nullopt;
    };
    return p;
}

Plan plan_zheng(const FieldCtx& F, const SweepSpec& spec) {
    auto pairs = std::make_shared<std::vector<std::pair<Elem, Elem>>>(valid_he(F));
    std::shared_ptr<std::vector<std::pair<Elem, Elem>>> xw;
    if (F.m() <= spec.oracle_cap) {
        xw = std::make_shared<std::vector<std::pair<Elem, Elem>>>();
        xw->reserve(size_t(F.level_card(Level::Q3)));
        for (const Elem& x : F.enumerate_subfield(Level::Q3)) {
            xw->emplace_back(x, F.mul(F.square(F.frobenius_q(x, 2)), x));
        }
    }
    Plan p;
    p.item_count = pairs->size();
    p.fn = [F, pairs, xw](size_t i) -> std::optional<Payload> {
        const auto [h, e] = (*pairs)[i];
        const RootSet rs = zheng_solve(F, ZhengRequest{2, h, e});
        if (rs.roots.size() != 3)
            return Payload{{"h", F.to_hex(h)},
                           {"e", F.to_hex(e)},
                           {"claim", "exactly three roots"},
                           {"actual", std::to_string(rs.roots.size())}};
        if (xw) {
            std::vector<Elem> oracle;
            for (const auto& [x, w] : *xw) {
                if (F.add(F.add(w, F.mul(h, x)), e) == F.zero()) oracle.push_back(x);
            }
            std::sort(oracle.begin(), oracle.end());
            if (rs.roots != oracle)
                return Payload{{"h", F.to_hex(h)},
                               {"e", F.to_hex(e)},
                               {"claim", "solve = oracle"},
                               {"solve", hex_set(F, rs.roots)},
                               {"oracle", hex_set(F, oracle)}};
        }
        return std::nullopt;
    };
    return p;
}

Plan plan_zheng2(const FieldCtx& F, const SweepSpec& spec) {
    (void)spec;
    auto pairs = std::make_shared<std::vector<std::pair<Elem, Elem>>>(valid_he(F));
    auto mu = std::make_shared<std::vector<Elem>>(mu_elements(F));
    Plan p;
    p.item_count = pairs->size() * 2;
    p.fn = [F, pairs, mu](size_t i) -> std::optional<Payload> {
        const auto [h, e] = (*pairs)[i / 2];
        const long long ell = 1 + static_cast<long long>(i % 2);
        std::vector<Elem> oracle;
        for (const Elem& x : *mu) {
            if (g_eval(F, ell, h, e, x) == F.zero()) oracle.push_back(x);
        }
        std::sort(oracle.begin(), oracle.end());
        for (const Elem& x : oracle) {
            if (F.in_subfield(x, Level::Q))
                return Payload{{"h", F.to_hex(h)},
                               {"e", F.to_hex(e)},
                               {"ell", std::to_string(ell)},
                               {"claim", "no mu-root lies in F_q"},
                               {"root", F.to_hex(x)}};
        }
        const RootSet rs = zheng_mu_roots(F, ZhengRequest{ell, h, e});
        if (rs.roots != oracle)
            return Payload{{"h", F.to_hex(h)},
                           {"e", F.to_hex(e)},
                           {"ell", std::to_string(ell)},
                           {"claim", "mu roots = oracle"},
                           {"closed", hex_set(F, rs.roots)},
                           {"oracle", hex_set(F, oracle)}};
        const int crit = (3 - int(ell % 3)) % 3;
        const bool criterion = F.cubic_character(F.add(e, F.omega())) == crit;
        if (criterion != !oracle.empty())
            return Payload{{"h", F.to_hex(h)},
                           {"e", F.to_hex(e)},
                           {"ell", std::to_string(ell)},
                           {"claim", "nonempty iff (e+omega)^((q^2-1)/3)=omega^-ell"}};
        if (!oracle.empty() && oracle.size() != 3)
            return Payload{{"h", F.to_hex(h)},
                           {"e", F.to_hex(e)},
                           {"ell", std::to_string(ell)},
                           {"claim", "zero or three mu roots"}};
        return std::nullopt;
    };
    return p;
}

Plan plan_zhengprop(const FieldCtx& F, const SweepSpec& spec) {
    (void)spec;
    auto pairs = std::make_shared<std::vector<std::pair<Elem, Elem>>>(valid_he(F));
    Plan p;
    p.item_count = pairs->size();
    p.fn = [F, pairs](size_t i) -> std::optional<Payload> {
        const auto [h, e] = (*pairs)[i];
        const ZhengCase zc = zheng_case(F, ZhengRequest{2, h, e});
        const RootSet oracle = brute_roots_G(F, 2, h, e);
        if (!(zc.gamma == oracle))
            return Payload{{"h", F.to_hex(h)},
                           {"e", F.to_hex(e)},
                           {"claim", "Gamma = oracle"},
                           {"gamma", hex_set(F, zc.gamma.roots)},
                           {"oracle", hex_set(F, oracle.roots)}};
        bool all_fixed = true;
        for (const Elem& r : oracle.roots) all_fixed = all_fixed && F.frobenius_q(r, 1) == r;
        if (all_fixed != *zc.report.subfield_flag)
            return Payload{{"h", F.to_hex(h)},
                           {"e", F.to_hex(e)},
                           {"claim", "Gamma in F_q iff 1+omega*e is a cube"}};
        return std::nullopt;
    };
    return p;
}

Plan plan_supplement(const FieldCtx& F, const SweepSpec& spec) {
    (void)spec;
    const u128 n = dickson_n(F);
    auto rs = std::make_shared<std::vector<Elem>>(dickson_root_set(F));
    const bool scan = 2 * F.m() <= 20; // exhaustive F_{q^2} pass
    const size_t chunks = scan ? 64 : 0;
    const u128 total = F.level_card(Level::Q2);
    Plan p;
    p.item_count = 1 + chunks;
    p.fn = [F, n, rs, chunks, total](size_t i) -> std::optional<Payload> {
        if (i == 0) {
            const u128 expect = F.cards().q / 6;
            if (u128(rs->size()) != expect)
                return Payload{{"claim", "exactly floor(q/6) roots"},
                               {"actual", std::to_string(rs->size())},
                               {"expected", u128_to_dec(expect)}};
            for (const Elem& r : *rs) {
                if (dickson_eval(F, n, r) != F.zero() || dickson_eval_ring(F, n, r) != F.zero())
                    return Payload{{"claim", "member is a Dickson root"}, {"x", F.to_hex(r)}};
            }
            return std::nullopt;
        }
        // Scan chunk over F_{q^2}: no root may appear outside F_q u F_2, and
        // inside F_q the roots are exactly rs u {0}.
        const size_t c = i - 1;
        const u128 lo = total * c / chunks;
        const u128 hi = total * (c + 1) / chunks;
        for (u128 j = lo; j < hi; ++j) {
            const Elem x = F.subfield_element(Level::Q2, j);
            const bool is_root = dickson_eval_ring(F, n, x).is_zero();
            if (F.in_subfield(x, Level::Q)) {
                const bool expected =
                    x.is_zero() || std::binary_search(rs->begin(), rs->end(), x);
                if (is_root != expected)
                    return Payload{{"claim", "F_q roots are the root set plus 0"},
                                   {"x", F.to_hex(x)}};
            } else if (is_root) {
                return Payload{{"claim", "no roots outside F_q"}, {"x", F.to_hex(x)}};
            }
        }
        return std::nullopt;
    };
    return p;
}

Plan make_plan(const FieldCtx& F, const SweepSpec& spec) {
    switch (spec.target) {
        case SweepTarget::MAIN: return plan_main(F, spec);
        case SweepTarget::SUPPLEMENT: return plan_supplement(F, spec);
        case SweepTarget::ROOTS: return plan_roots(F, spec);
        case SweepTarget::A1: return plan_a1(F, spec);
        case SweepTarget::MAIN2: return plan_main2(F, spec);
        case SweepTarget::COR3: return plan_cor3(F, spec);
        case SweepTarget::NI: return plan_ni(F, spec);
        case SweepTarget::FACTORIZATION: return plan_factorization(F, spec);
        case SweepTarget::ZHENG: return plan_zheng(F, spec);
        case SweepTarget::ZHENG2: return plan_zheng2(F, spec);
        case SweepTarget::ZHENGPROP: return plan_zhengprop(F, spec);
    }
    throw ValidationError("unknown sweep target");
}

unsigned target_max_m(SweepTarget t, const SweepSpec& spec) {
    switch (t) {
        case SweepTarget::MAIN:
        case SweepTarget::SUPPLEMENT:
        case SweepTarget::FACTORIZATION: return 16;
        case SweepTarget::ZHENG: return 8;
        case SweepTarget::NI: return std::min(spec.oracle_cap, 6u);
        default: return spec.oracle_cap;
    }
}

// Hypothesis filters mirroring the statements' own quantifiers.
bool target_skips_m(SweepTarget t, unsigned m) {
    switch (t) {
        case SweepTarget::SUPPLEMENT: return m % 3 == 0;
        case SweepTarget::ZHENG: return m % 3 == 1;
        case SweepTarget::ZHENGPROP: return m % 2 == 0 || m % 3 == 1; // m mod 6 in {3,5}
        default: return false;
    }
}

} // namespace

SweepSummary run_sweep(const SweepSpec& spec) {
    if (spec.m_range.empty()) throw ValidationError("empty m range");
    if (spec.oracle_cap < 1 || spec.oracle_cap > 8)
        throw FeasibilityError("oracle cap must lie in 1..8");
    for (unsigned m : spec.m_range) {
        if (m < 1 || m > 21) throw RangeError("m out of range in sweep spec");
        if (!target_skips_m(spec.target, m) && m > target_max_m(spec.target, spec))
            throw FeasibilityError(std::string("target ") + sweep_target_name(spec.target) +
                                   " infeasible at m=" + std::to_string(m));
    }
    unsigned workers = spec.parallelism;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, 64u);

    SweepSummary sum;
    sum.target = spec.target;
    const auto t0 = std::chrono::steady_clock::now();
    for (unsigned m : spec.m_range) {
        if (target_skips_m(spec.target, m)) continue;
        FieldCtx F(FieldParams{m, std::nullopt});
        const Plan plan = make_plan(F, spec);
        const RunResult rr = run_checks(plan.item_count, workers, spec.fail_fast, plan.fn);
        sum.m_done.push_back(m);
        if (rr.first) {
            sum.failures += rr.failures;
            if (!sum.first_counterexample)
                sum.first_counterexample = Counterexample{m, rr.first->second};
            if (spec.fail_fast) {
                sum.checked += rr.first->first;
                break;
            }
            sum.checked += rr.item_count;
        } else {
            sum.checked += rr.item_count;
        }
    }
    sum.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return sum;
}

std::string sweep_summary_json(const SweepSummary& s, bool pretty, bool with_timings) {
    nlohmann::json j;
    j["target"] = sweep_target_name(s.target);
    j["m_done"] = s.m_done;
    j["checked"] = s.checked;
    j["failures"] = s.failures;
    if (s.first_counterexample) {
        nlohmann::json c;
        c["m"] = s.first_counterexample->m;
        for (const auto& [k, v] : s.first_counterexample->data) c[k] = v;
        j["first_counterexample"] = c;
    } else {
        j["first_counterexample"] = nullptr;
    }
    if (with_timings) j["elapsed_ms"] = s.elapsed_ms;
    return pretty ? j.dump(2) : j.dump();
}

} // namespace q3roots
