#include "cli.hpp"

#include <functional>

#include <CLI11.hpp>
#include <json.hpp>

#include "q3roots/dickson.hpp"
#include "q3roots/oracle.hpp"

namespace q3roots {

namespace {

using nlohmann::json;

struct CtxArgs {
    unsigned m = 1;
    std::string modulus_hex;

    FieldCtx build() const {
        FieldParams params;
        params.m = m;
        if (!modulus_hex.empty()) params.modulus = u128_from_hex(modulus_hex);
        return FieldCtx(params);
    }
};

void add_ctx_options(CLI::App* cmd, CtxArgs& args) {
    cmd->set_help_flag("--help", "print help");
    cmd->add_option("--m", args.m, "base field exponent: q = 2^m")->required();
    cmd->add_option("--modulus", args.modulus_hex,
                    "hex-encoded irreducible polynomial of degree 6m (default: least encoding)");
}

json hex_array(const FieldCtx& F, const std::vector<Elem>& v) {
    json a = json::array();
    for (const Elem& e : v) a.push_back(F.to_hex(e));
    return a;
}

json case_json(const FieldCtx& F, const CaseReport& rep) {
    json j;
    j["branch"] = branch_name(rep.branch);
    j["m_mod3"] = rep.m_mod3;
    j["ell_mod3"] = rep.ell_mod3;
    j["selected"] = selection_name(rep.selected);
    if (rep.b) j["b"] = F.to_hex(*rep.b);
    if (rep.c) j["c"] = F.to_hex(*rep.c);
    if (rep.cubic_char_c) j["cubic_char_c"] = *rep.cubic_char_c;
    if (rep.k) j["k"] = *rep.k;
    if (rep.n) j["n"] = u128_to_dec(*rep.n);
    if (rep.dickson_value) j["dickson_value"] = F.to_hex(*rep.dickson_value);
    return j;
}

json cubic_json(const FieldCtx& F, const Cubic& c) {
    json j;
    j["c3"] = F.to_hex(c.c3);
    j["c2"] = F.to_hex(c.c2);
    j["c1"] = F.to_hex(c.c1);
    j["c0"] = F.to_hex(c.c0);
    return j;
}

std::vector<unsigned> parse_m_range(const std::string& s) {
    std::vector<unsigned> out;
    auto add_token = [&out](const std::string& tok) {
        const auto dots = tok.find("..");
        if (dots != std::string::npos) {
            const unsigned lo = unsigned(std::stoul(tok.substr(0, dots)));
            const unsigned hi = unsigned(std::stoul(tok.substr(dots + 2)));
            if (lo > hi) throw ValidationError("empty m range: " + tok);
            for (unsigned m = lo; m <= hi; ++m) out.push_back(m);
        } else {
            out.push_back(unsigned(std::stoul(tok)));
        }
    };
    size_t start = 0;
    while (start <= s.size()) {
        const size_t comma = s.find(',', start);
        const std::string tok =
            s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (tok.empty()) throw ValidationError("malformed m range: " + s);
        add_token(tok);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

void emit(std::ostream& out, const json& j, bool pretty) {
    out << (pretty ? j.dump(2) : j.dump()) << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"closed-form roots of X^(2q^l+1)+X+a and X^(2q^l+1)+hX+e over F_{q^3}, q = 2^m"};
    app.require_subcommand(1);
    // --h is a real option (the Zheng h coefficient), so help is --help only.
    app.set_help_flag("--help", "print help");

    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    // --- ctx ---
    CtxArgs ctx_args;
    auto* cmd_ctx = app.add_subcommand("ctx", "print field context: modulus, omega, subfield bases");
    add_ctx_options(cmd_ctx, ctx_args);

    // --- solve / count / lambda ---
    CtxArgs solve_ctx;
    long long solve_ell = 1;
    std::string solve_a;
    auto* cmd_solve = app.add_subcommand("solve", "roots of X^(2q^l+1)+X+a in F_{q^3}");
    add_ctx_options(cmd_solve, solve_ctx);
    cmd_solve->add_option("--ell", solve_ell, "exponent l (only l mod 3 matters)")->required();
    cmd_solve->add_option("--a", solve_a, "a in F_q, hex")->required();

    CtxArgs count_ctx;
    long long count_ell = 1;
    std::string count_a;
    auto* cmd_count = app.add_subcommand("count", "root count without enumerating roots");
    add_ctx_options(cmd_count, count_ctx);
    cmd_count->add_option("--ell", count_ell, "exponent l")->required();
    cmd_count->add_option("--a", count_a, "a in F_q, hex")->required();

    CtxArgs lambda_ctx;
    std::string lambda_a;
    auto* cmd_lambda = app.add_subcommand("lambda", "the three candidate root sets over F_{q^6}");
    add_ctx_options(cmd_lambda, lambda_ctx);
    cmd_lambda->add_option("--a", lambda_a, "a in F_q, hex")->required();

    // --- dickson ---
    auto* cmd_dickson = app.add_subcommand("dickson", "Dickson polynomial utilities");
    cmd_dickson->require_subcommand(1);
    cmd_dickson->set_help_flag("--help", "print help");
    CtxArgs droots_ctx;
    auto* cmd_droots = cmd_dickson->add_subcommand("roots", "roots of D_n in F_q \\ F_2");
    add_ctx_options(cmd_droots, droots_ctx);
    CtxArgs deval_ctx;
    std::string deval_n, deval_x;
    auto* cmd_deval = cmd_dickson->add_subcommand("eval", "evaluate D_n at x in F_q");
    add_ctx_options(cmd_deval, deval_ctx);
    cmd_deval->add_option("--n", deval_n, "degree n (decimal)")->required();
    cmd_deval->add_option("--x", deval_x, "x in F_q, hex")->required();

    // --- cubic ---
    auto* cmd_cubic = app.add_subcommand("cubic", "cubic machinery");
    cmd_cubic->require_subcommand(1);
    cmd_cubic->set_help_flag("--help", "print help");
    CtxArgs ccount_ctx;
    std::string ccount_A, ccount_B, ccount_level = "q";
    auto* cmd_ccount = cmd_cubic->add_subcommand("count", "roots of X^3+AX+B over a subfield");
    add_ctx_options(cmd_ccount, ccount_ctx);
    cmd_ccount->add_option("--A", ccount_A, "A, hex")->required();
    cmd_ccount->add_option("--B", ccount_B, "B != 0, hex")->required();
    cmd_ccount->add_option("--level", ccount_level, "subfield: q, q2, q3 or q6");
    CtxArgs croots_ctx;
    std::string croots_a;
    auto* cmd_croots = cmd_cubic->add_subcommand("roots", "the three roots of X^3+X+a in F_{q^6}");
    add_ctx_options(cmd_croots, croots_ctx);
    cmd_croots->add_option("--a", croots_a, "a != 0, hex")->required();
    CtxArgs fsys_ctx;
    std::string fsys_a;
    auto* cmd_fsys = cmd_cubic->add_subcommand("fsystem", "the factorization f = f0*f1*f2");
    add_ctx_options(cmd_fsys, fsys_ctx);
    cmd_fsys->add_option("--a", fsys_a, "admissible a, hex")->required();

    // --- zheng ---
    auto* cmd_zheng = app.add_subcommand("zheng", "the scaled problem X^(2q^l+1)+hX+e");
    cmd_zheng->require_subcommand(1);
    cmd_zheng->set_help_flag("--help", "print help");
    struct ZArgs {
        CtxArgs ctx;
        long long ell = 2;
        std::string h, e;
    };
    ZArgs zsolve, zmu, zcase;
    auto* cmd_zsolve = cmd_zheng->add_subcommand("solve", "roots in F_{q^3}");
    add_ctx_options(cmd_zsolve, zsolve.ctx);
    cmd_zsolve->add_option("--ell", zsolve.ell, "exponent l")->required();
    cmd_zsolve->add_option("--h", zsolve.h, "h in F_q \\ F_2, hex")->required();
    cmd_zsolve->add_option("--e", zsolve.e, "e in F_q \\ F_2, hex")->required();
    auto* cmd_zmu = cmd_zheng->add_subcommand("mu", "roots in mu_(q^2+q+1)");
    add_ctx_options(cmd_zmu, zmu.ctx);
    cmd_zmu->add_option("--ell", zmu.ell, "exponent l (1 or 2 mod 3)")->required();
    cmd_zmu->add_option("--h", zmu.h, "h, hex")->required();
    cmd_zmu->add_option("--e", zmu.e, "e, hex")->required();
    auto* cmd_zcase = cmd_zheng->add_subcommand("case", "full case analysis for l = 2");
    add_ctx_options(cmd_zcase, zcase.ctx);
    cmd_zcase->add_option("--ell", zcase.ell, "exponent l (must be 2 mod 3)");
    cmd_zcase->add_option("--h", zcase.h, "h, hex")->required();
    cmd_zcase->add_option("--e", zcase.e, "e, hex")->required();

    // --- oracle ---
    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force enumeration over F_{q^3}");
    cmd_oracle->require_subcommand(1);
    cmd_oracle->set_help_flag("--help", "print help");
    struct OArgs {
        CtxArgs ctx;
        long long ell = 1;
        std::string a, h, e;
        bool mu = false;
    };
    OArgs oh, og;
    auto* cmd_oh = cmd_oracle->add_subcommand("h", "zeros of X^(2q^l+1)+X+a");
    add_ctx_options(cmd_oh, oh.ctx);
    cmd_oh->add_option("--ell", oh.ell)->required();
    cmd_oh->add_option("--a", oh.a)->required();
    cmd_oh->add_flag("--mu", oh.mu, "restrict to mu_(q^2+q+1)");
    auto* cmd_og = cmd_oracle->add_subcommand("g", "zeros of X^(2q^l+1)+hX+e");
    add_ctx_options(cmd_og, og.ctx);
    cmd_og->add_option("--ell", og.ell)->required();
    cmd_og->add_option("--h", og.h)->required();
    cmd_og->add_option("--e", og.e)->required();
    cmd_og->add_flag("--mu", og.mu, "restrict to mu_(q^2+q+1)");

    // --- sweep ---
    std::string sweep_target = "MAIN", sweep_range = "1..4";
    unsigned sweep_parallel = 1, sweep_cap = 6;
    bool sweep_keep_going = false, sweep_timings = false;
    auto* cmd_sweep = app.add_subcommand("sweep", "exhaustive verification loops");
    cmd_sweep->set_help_flag("--help", "print help");
    cmd_sweep->add_option("--target", sweep_target, "MAIN SUPPLEMENT ROOTS A1 MAIN2 COR3 NI FACTORIZATION ZHENG ZHENG2 ZHENGPROP")
        ->required();
    cmd_sweep->add_option("--m", sweep_range, "m values, e.g. 3, 1..6 or 1,2,5")->required();
    cmd_sweep->add_option("--parallel", sweep_parallel, "worker count (0 = hardware)");
    cmd_sweep->add_option("--oracle-cap", sweep_cap, "full-enumeration ceiling (max 8)");
    cmd_sweep->add_flag("--keep-going", sweep_keep_going, "do not stop at the first counterexample");
    cmd_sweep->add_flag("--timings", sweep_timings, "include elapsed_ms (non-deterministic)");

    // Let global flags (--pretty) appear after the subcommand.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* s : a->get_subcommands([](const CLI::App*) { return true; })) {
            s->fallthrough();
            enable_fallthrough(s);
        }
    };
    enable_fallthrough(&app);

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    std::string prog = "q3roots";
    argv.push_back(prog.data());
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        json j;
        j["error"] = {{"kind", "UsageError"}, {"message", e.what()}};
        err << j.dump() << "\n";
        return 1;
    }

    try {
        if (*cmd_ctx) {
            const FieldCtx F = ctx_args.build();
            json j;
            j["m"] = F.m();
            j["degree"] = F.degree();
            j["modulus"] = u128_to_hex(F.modulus_bits());
            j["omega"] = F.to_hex(F.omega());
            json cards;
            cards["q"] = u128_to_dec(F.cards().q);
            cards["q_minus_1"] = u128_to_dec(F.cards().q_minus1);
            cards["q2_minus_1"] = u128_to_dec(F.cards().q2_minus1);
            cards["q3_minus_1"] = u128_to_dec(F.cards().q3_minus1);
            cards["q6_minus_1"] = u128_to_dec(F.cards().q6_minus1);
            cards["q2_minus_1_div3"] = u128_to_dec(F.cards().q2_minus1_div3);
            cards["q6_minus_1_div3"] = u128_to_dec(F.cards().q6_minus1_div3);
            cards["q2_plus_q_plus_1"] = u128_to_dec(F.cards().q2_plus_q_plus_1);
            j["cards"] = cards;
            json bases;
            for (Level lv : {Level::F2, Level::Q, Level::Q2, Level::Q3, Level::Q6}) {
                bases[level_name(lv)] = hex_array(F, F.basis(lv));
            }
            j["bases"] = bases;
            emit(out, j, pretty);
            return 0;
        }
        if (*cmd_solve) {
            const FieldCtx F = solve_ctx.build();
            const Elem a = F.from_hex(solve_a);
            const auto [rs, rep] = solve(F, SolveRequest{solve_ell, a});
            json j;
            j["a"] = F.to_hex(a);
            j["ell"] = solve_ell;
            j["case"] = case_json(F, rep);
            j["count"] = rs.roots.size();
            j["roots"] = hex_array(F, rs.roots);
            emit(out, j, pretty);
            return 0;
        }
        if (*cmd_count) {
            const FieldCtx F = count_ctx.build();
            const Elem a = F.from_hex(count_a);
            const CountResult cr = count(F, SolveRequest{count_ell, a});
            json j;
            j["a"] = F.to_hex(a);
            j["ell"] = count_ell;
            j["branch"] = branch_name(cr.report.branch);
            j["n"] = cr.n;
            j["case"] = case_json(F, cr.report);
            emit(out, j, pretty);
            return 0;
        }
        if (*cmd_lambda) {
            const FieldCtx F = lambda_ctx.build();
            const Elem a = F.from_hex(lambda_a);
            const LambdaSets L = lambda_sets(F, a);
            json j;
            j["a"] = F.to_hex(a);
            j["lambda0"] = hex_array(F, L.l0.roots);
            j["lambda1"] = hex_array(F, L.l1.roots);
            j["lambda2"] = hex_array(F, L.l2.roots);
            emit(out, j, pretty);
            return 0;
        }
        if (*cmd_droots) {
            const FieldCtx F = droots_ctx.build();
            const auto roots = dickson_root_set(F);
            json j;
            j["n"] = u128_to_dec(dickson_n(F));
            j["count"] = roots.size();
            j["roots"] = hex_array(F, roots);
            emit(out, j, pretty);
            return 0;
        }
        if (*cmd_deval) {
            const FieldCtx F = deval_ctx.build();
            u128 n = 0;
            for (char c : deval_n) {
                if (c < '0' || c > '9') throw ValidationError("n must be decimal");
                n = n * 10 + u128(c - '0');
            }
            if (n == 0) throw DomainError("Dickson degree must be positive");
            const Elem x = F.from_hex(deval_x);
            json j;
            j["n"] = deval_n;
            j["x"] = F.to_hex(x);
            j["value"] = F.to_hex(dickson_eval(F, n, x));
            emit(out, j, pretty);
            return 0;
        }
        if (*cmd_ccount) {
            const FieldCtx F = ccount_ctx.build();
            const CubicCount cc =
                cubic_count_fq(F, F.from_hex(ccount_A), F.from_hex(ccount_B),
                               level_from_name(ccount_level));
            json j;
            j["count"] = cc.count;
            j["level"] = ccount_level;
            j["witness_e"] = cc.witness ? json(F.to_hex(*cc.witness)) : json(nullptr);
            emit(out, j, pretty);
            return 0;
        }
        if (*cmd_croots) {
            const FieldCtx F = croots_ctx.build();
            const Elem a = F.from_hex(croots_a);
            json j;
            j["a"] = F.to_hex(a);
            j["roots"] = hex_array(F, depressed_cubic_roots(F, a));
            emit(out, j, pretty);
            return 0;
        }
        if (*cmd_fsys) {
            const FieldCtx F = fsys_ctx.build();
            const Elem a = F.from_hex(fsys_a);
            const FSystem sys = build_f_system(F, a);
            json j;
            j["a"] = F.to_hex(a);
            j["b"] = F.to_hex(sys.b);
            j["c"] = F.to_hex(sys.c);
            j["f"] = hex_array(F, sys.f);
            j["f0"] = cubic_json(F, sys.f0);
            j["f1"] = cubic_json(F, sys.f1);
            j["f2"] = cubic_json(F, sys.f2);
            json red;
            for (int i = 0; i < 3; ++i) {
                red.push_back(fi_reducibility(F, sys, i) == CubicSplit::Split3 ? "split3"
                                                                              : "irreducible");
            }
            j["fi_reducibility"] = red;
            emit(out, j, pretty);
            return 0;
        }
        if (*cmd_zsolve) {
            const FieldCtx F = zsolve.ctx.build();
            const RootSet rs =
                zheng_solve(F, ZhengRequest{zsolve.ell, F.from_hex(zsolve.h), F.from_hex(zsolve.e)});
            json j;
            j["ell"] = zsolve.ell;
            j["count"] = rs.roots.size();
            j["roots"] = hex_array(F, rs.roots);
            emit(out, j, pretty);
            return 0;
        }
        if (*cmd_zmu) {
            const FieldCtx F = zmu.ctx.build();
            const ZhengRequest req{zmu.ell, F.from_hex(zmu.h), F.from_hex(zmu.e)};
            const ZhengReport rep = zheng_validate(F, req.h, req.e);
            const RootSet rs = zheng_mu_roots(F, req);
            json j;
            j["ell"] = zmu.ell;
            j["mu_char"] = rep.mu_char;
            j["criterion"] = !rs.roots.empty();
            j["count"] = rs.roots.size();
            j["roots"] = hex_array(F, rs.roots);
            emit(out, j, pretty);
            return 0;
        }
        if (*cmd_zcase) {
            const FieldCtx F = zcase.ctx.build();
            const ZhengCase zc =
                zheng_case(F, ZhengRequest{zcase.ell, F.from_hex(zcase.h), F.from_hex(zcase.e)});
            json j;
            j["u"] = F.to_hex(zc.report.u);
            j["b_scaled"] = F.to_hex(zc.report.b_scaled);
            j["a_scaled"] = F.to_hex(zc.report.a_scaled);
            j["mu_char"] = zc.report.mu_char;
            j["subfield_flag"] = *zc.report.subfield_flag;
            j["selected_cubic"] =
                zc.report.selected_cubic ? cubic_json(F, *zc.report.selected_cubic) : json(nullptr);
            j["explicit_branch"] = zc.explicit_branch;
            j["roots"] = hex_array(F, zc.gamma.roots);
            emit(out, j, pretty);
            return 0;
        }
        if (*cmd_oh) {
            const FieldCtx F = oh.ctx.build();
            RootSet rs = brute_roots_H(F, oh.ell, F.from_hex(oh.a));
            if (oh.mu) {
                std::vector<Elem> filtered;
                for (const Elem& r : rs.roots)
                    if (F.mu_membership(r)) filtered.push_back(r);
                rs.roots = std::move(filtered);
            }
            json j;
            j["ell"] = oh.ell;
            j["count"] = rs.roots.size();
            j["roots"] = hex_array(F, rs.roots);
            emit(out, j, pretty);
            return 0;
        }
        if (*cmd_og) {
            const FieldCtx F = og.ctx.build();
            const RootSet rs =
                brute_roots_G(F, og.ell, F.from_hex(og.h), F.from_hex(og.e), og.mu);
            json j;
            j["ell"] = og.ell;
            j["count"] = rs.roots.size();
            j["roots"] = hex_array(F, rs.roots);
            emit(out, j, pretty);
            return 0;
        }
        if (*cmd_sweep) {
            SweepSpec spec;
            spec.target = sweep_target_from_name(sweep_target);
            spec.m_range = parse_m_range(sweep_range);
            spec.parallelism = sweep_parallel;
            spec.oracle_cap = sweep_cap;
            spec.fail_fast = !sweep_keep_going;
            const SweepSummary sum = run_sweep(spec);
            out << sweep_summary_json(sum, pretty, sweep_timings) << "\n";
            return sum.failures == 0 ? 0 : 2;
        }
    } catch (const Error& e) {
        json j;
        j["error"] = {{"kind", e.kind()}, {"message", e.what()}};
        err << j.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json j;
        j["error"] = {{"kind", "Error"}, {"message", e.what()}};
        err << j.dump() << "\n";
        return 1;
    }
    err << R"({"error":{"kind":"UsageError","message":"no subcommand"}})" << "\n";
    return 1;
}

} // namespace q3roots
