#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "q3roots/solver.hpp"
#include "q3roots/zheng.hpp"

namespace q3roots {

/// Exhaustive zeros of H_ell over F_{q^3}.
RootSet brute_roots_H(const FieldCtx& F, long long ell, Elem a);

/// Exhaustive zeros of X^(2q^ell+1) + hX + e over F_{q^3}; optionally
/// restricted to mu_(q^2+q+1).
RootSet brute_roots_G(const FieldCtx& F, long long ell, Elem h, Elem e, bool mu_only = false);

/// The verification loops (one per statement), mirroring the quantifier
/// structure of the corresponding results.
enum class SweepTarget {
    MAIN,
    SUPPLEMENT,
    ROOTS,
    A1,
    MAIN2,
    COR3,
    NI,
    FACTORIZATION,
    ZHENG,
    ZHENG2,
    ZHENGPROP,
};

const char* sweep_target_name(SweepTarget t);
SweepTarget sweep_target_from_name(const std::string& name);

struct SweepSpec {
    SweepTarget target = SweepTarget::MAIN;
    std::vector<unsigned> m_range;
    unsigned parallelism = 1; // 0 = hardware concurrency
    unsigned oracle_cap = 6;  // ceiling for full-F_{q^3} enumeration (max 8)
    bool fail_fast = true;
};

struct Counterexample {
    unsigned m = 0;
    std::map<std::string, std::string> data;
};

/// Deterministic for a fixed spec, regardless of parallelism: `checked` is
/// the number of items before the first failure (all items when none), and
/// the reported counterexample is the earliest one in item order.
struct SweepSummary {
    SweepTarget target = SweepTarget::MAIN;
    std::vector<unsigned> m_done;
    uint64_t checked = 0;
    uint64_t failures = 0;
    std::optional<Counterexample> first_counterexample;
    double elapsed_ms = 0; // informational; excluded from canonical JSON
};

SweepSummary run_sweep(const SweepSpec& spec);

/// Single canonical JSON object (sorted keys, element sets sorted by value).
/// Timings are opt-in so identical specs serialize byte-identically.
std::string sweep_summary_json(const SweepSummary& s, bool pretty = false,
                               bool with_timings = false);

} // namespace q3roots
