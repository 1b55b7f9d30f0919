#include <arithid/bench.hpp>
#include <arithid/cli.hpp>
#include <arithid/reference.hpp>
#include <arithid/report.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace arithid {

namespace {

struct EvalArgs {
    std::string function;
    Int n = 0;
    std::optional<std::string> method;
    std::optional<Int> k;
};

struct VerifyArgs {
    std::vector<std::string> ids;
    bool all = false;
    std::optional<Int> max_n;
    Int max_pair = RangeConfig{}.max_pair;
    Int k_multiplier = RangeConfig{}.k_multiplier;
    std::string format = "text";
    std::string out_path;
    bool fail_fast = false;
    unsigned workers = 1;
};

struct BenchArgs {
    std::vector<std::string> ids{"I3"};
    std::vector<Int> ns{250, 500, 1000, 2000};
    int reps = 5;
    std::string out_path;
};

struct ListArgs {
    std::string format = "text";
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string method_or(const EvalArgs& a, const char* fallback) {
    return a.method.value_or(fallback);
}

EvalValue evaluate_function(const EvalArgs& a) {
    const Int n = a.n;
    if (n < 1) {
        throw DomainError("n must be >= 1");
    }
    if (a.k && a.function != "jordan" && a.function != "gcd_floor") {
        throw UsageError("--k only applies to jordan and gcd_floor");
    }
    const std::string& fn = a.function;
    if (fn == "phi") {
        const std::string m = method_or(a, "definition");
        if (m == "definition") return phi_definition(n);
        if (m == "factored") return phi_factored(factorize(n));
        if (m == "mobius_inversion") return phi_mobius_inversion(factorize(n));
        return phi_formula(n, parse_phi_method(m));
    }
    if (fn == "tau") {
        const std::string m = method_or(a, "definition");
        if (m == "definition") return tau_definition(n);
        if (m == "factored") return tau_factored(factorize(n));
        return tau_formula(n, parse_tau_form(m));
    }
    if (fn == "mu") {
        const std::string m = method_or(a, "factored");
        if (m == "factored") return Int{mu(factorize(n))};
        if (m == "expsum") return mobius_identity_lhs(n, MobiusSum::expsum);
        throw DomainError("unknown mu method: " + m);
    }
    if (fn == "pillai") {
        const std::string m = method_or(a, "definition");
        if (m == "definition") return pillai_definition(n);
        return pillai_formula(n, parse_pillai_form(m));
    }
    if (fn == "mobius_sum") {
        return mobius_identity_lhs(n, parse_mobius_sum(method_or(a, "floor_sum")));
    }
    if (a.method) {
        throw UsageError("--method does not apply to " + fn);
    }
    if (fn == "jordan") return jordan(a.k.value_or(1), factorize(n));
    if (fn == "mertens") return mertens(n);
    if (fn == "menon") return menon_rhs(n);
    if (fn == "gcd_floor") {
        if (!a.k) {
            throw UsageError("gcd_floor needs --k");
        }
        return gcd_via_floor(*a.k, n);
    }
    throw UsageError("unknown function: " + fn);
}

int run_eval(const EvalArgs& a, std::ostream& out) {
    out << to_string(evaluate_function(a)) << '\n';
    return kExitOk;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
    RangeConfig config;
    config.max_n = a.max_n;
    config.max_pair = a.max_pair;
    config.k_multiplier = a.k_multiplier;
    config.fail_fast = a.fail_fast;
    config.workers = a.workers;
    const OutputFormat format = parse_output_format(a.format);
    for (const auto& id : a.ids) {
        (void)Registry::standard().find(id);
    }
    const RunReport report = verify_all(config, a.all ? std::vector<std::string>{} : a.ids);
    const std::string rendered = render(report, format);
    if (a.out_path.empty()) {
        out << rendered;
    } else {
        std::ofstream file(a.out_path);
        if (!file) {
            throw UsageError("cannot write " + a.out_path);
        }
        file << rendered;
        out << summary_line(report) << '\n';
    }
    if (report.verdict_pass()) {
        return kExitOk;
    }
    return report.guard_tripped() ? kExitGuard : kExitViolation;
}

int run_bench(const BenchArgs& a, std::ostream& out) {
    const auto records = bench(a.ids, a.ns, a.reps);
    const std::string csv = bench_csv(records);
    if (a.out_path.empty()) {
        out << csv;
    } else {
        std::ofstream file(a.out_path);
        if (!file) {
            throw UsageError("cannot write " + a.out_path);
        }
        file << csv;
        out << records.size() << " bench records written to " << a.out_path << '\n';
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Arithmetic-function identity evaluator, verifier and benchmark", "arithid"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate an arithmetic function or formula at n");
    eval->add_option("fn", eval_args.function,
                     "phi | tau | mu | pillai | jordan | mertens | menon | mobius_sum | gcd_floor")
        ->required();
    eval->add_option("n", eval_args.n, "Argument n >= 1")->required();
    eval->add_option("--method", eval_args.method,
                     "Formula: phi {definition,factored,mobius_inversion,res1,fourier,res2,res3}; "
                     "tau {definition,factored,toto,res1_form,res2_form,res3_form}; "
                     "mu {factored,expsum}; pillai {definition,divisor_phi,divisor_tau_mu,"
                     "padic_product,phi_over_d}; mobius_sum {floor_sum,kline,expsum}");
    eval->add_option("--k", eval_args.k, "Jordan order, or k for gcd_floor");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Sweep identities against brute-force oracles");
    auto* id_opt = verify->add_option("--id", verify_args.ids, "Comma-separated identity ids")
                       ->delimiter(',');
    verify->add_flag("--all", verify_args.all, "Run all identities (default)")->excludes(id_opt);
    verify->add_option("--max-n", verify_args.max_n, "Cap every single-n sweep at N")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--max-pair", verify_args.max_pair, "Pair sweeps cover 1..P x 1..P")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--k-multiplier", verify_args.k_multiplier, "k <= multiplier * n for I1/I7")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", verify_args.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--out", verify_args.out_path, "Write the report to PATH");
    verify->add_flag("--fail-fast", verify_args.fail_fast, "Stop at the first failure");
    verify->add_option("--workers", verify_args.workers, "Worker threads (>= 1)")
        ->check(CLI::PositiveNumber);

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Time evaluators over an n grid (CSV output)");
    bench_cmd->add_option("--id", bench_args.ids, "Comma-separated identity ids or function names")
        ->delimiter(',');
    bench_cmd->add_option("--ns", bench_args.ns, "Comma-separated ascending n grid")
        ->delimiter(',');
    bench_cmd->add_option("--reps", bench_args.reps, "Timed repetitions (>= 3)")
        ->check(CLI::Range(3, 1'000'000));
    bench_cmd->add_option("--out", bench_args.out_path, "Write CSV to PATH");

    ListArgs list_args;
    auto* list = app.add_subcommand("list", "List the registered identities");
    list->add_option("--format", list_args.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (eval->parsed()) return run_eval(eval_args, out);
        if (verify->parsed()) return run_verify(verify_args, out);
        if (bench_cmd->parsed()) return run_bench(bench_args, out);
        if (list->parsed()) {
            out << render(list_identities(), parse_output_format(list_args.format));
            return kExitOk;
        }
    } catch (const ResidualGuard& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const DegenerateDomain& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const ArithError& e) {
        // Inexact division, non-integer rational or a vanished denominator:
        // the formula itself is violated at this n.
        err << "identity violation: " << e.what() << '\n';
        return kExitViolation;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace arithid
