// groupdim: exact computation of the complex dimension of the closure of a
// finitely generated additive subgroup of R^n, plus the surrounding toolbox
// (density tests, densifying generators, closed-group morphisms, integer
// relation detection). Reads a JSON job, writes a JSON report.
//
// Exit codes: 0 success, 1 bad input (parse/validation/precision/budget),
// 2 internal invariant violation (always a bug).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "groupdim/errors.hpp"
#include "groupdim/json_io.hpp"
#include "groupdim/parse.hpp"

namespace {

using groupdim::Json;

std::string slurp(const std::string& path) {
    if (path.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw groupdim::InvalidInput("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

groupdim::Rational parse_delta(const std::string& text) {
    groupdim::RealElement d = groupdim::parse_real(text);
    if (!d.is_rational())
        throw groupdim::InvalidInput("--lll-delta must be rational, e.g. 0.99 or 99/100");
    return d.rational_part();
}

// Shared tuning flags; a copy hangs off every subcommand.
struct Options {
    std::string input_path;
    std::string mode;  // empty: keep the job file's mode
    int float_precision = 12;
    std::string lll_delta = "99/100";
    std::string max_coeff = "1000000";
    bool json = true;
    bool oracle = false;
    std::vector<std::size_t> axes;  // 1-based; empty: all ambient axes
    long long bound = 1000;
    double epsilon = 0.01;
};

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--input", opt.input_path, "JSON job file (default: stdin)");
    cmd->add_flag("--json,!--no-json", opt.json, "JSON report on stdout (default on)");
}

void add_job_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--mode", opt.mode, "exact|float (overrides the job's mode)")
        ->check(CLI::IsMember({"exact", "float"}));
    cmd->add_option("--float-precision", opt.float_precision,
                    "decimal digits for float-mode relation scaling (default 12)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--lll-delta", opt.lll_delta, "LLL parameter in (1/4,1] (default 99/100)");
    cmd->add_option("--max-coeff", opt.max_coeff,
                    "coefficient cap for relation detection (default 10^6)");
}

void add_oracle_flags(CLI::App* cmd, Options& opt) {
    cmd->add_flag("--oracle", opt.oracle, "cross-check the verdict with the epsilon-net oracle");
    cmd->add_option("--axes", opt.axes, "1-based target axes for the oracle (default: all)");
    cmd->add_option("--bound", opt.bound, "oracle coefficient bound K (default 1000)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--epsilon", opt.epsilon, "oracle grid resolution (default 0.01)")
        ->check(CLI::PositiveNumber);
}

groupdim::NumericOptions numeric_options(const Options& opt) {
    groupdim::NumericOptions n;
    n.scale_digits = opt.float_precision;
    n.max_coeff = groupdim::Int(opt.max_coeff);
    n.lll_delta = parse_delta(opt.lll_delta);
    return n;
}

groupdim::JobInput load_job(const Options& opt) {
    groupdim::JobInput job = groupdim::parse_job_text(slurp(opt.input_path));
    if (!opt.mode.empty()) job.mode = opt.mode;
    return job;
}

Json attach_oracle(Json report, const groupdim::JobInput& job, const Options& opt) {
    if (!opt.oracle) return report;
    groupdim::OracleOptions oo;
    oo.coefficient_bound = opt.bound;
    oo.epsilon = opt.epsilon;
    std::vector<std::size_t> axes = opt.axes;
    if (axes.empty())
        for (std::size_t a = 1; a <= job.n; ++a) axes.push_back(a);
    report["oracle"] = groupdim::oracle_report(job, axes, oo);
    return report;
}

void print_human(const Json& r) {
    const std::string cmd = r.value("command", "");
    auto yesno = [](const Json& v) { return v.get<bool>() ? "yes" : "no"; };
    if (cmd == "dim" || cmd == "dense" || cmd == "mh") {
        if (r.contains("p"))
            std::cout << "complex dimension: " << r["p"].get<long long>() << " + "
                      << r["r"].get<long long>() << "i\n";
        std::cout << "q = " << r["q"] << ", rank(M_H) = " << r["rank_MH"] << "\n";
        std::cout << "dense in span:    " << yesno(r["dense_in_span"]) << "\n";
        std::cout << "dense in ambient: " << yesno(r["dense_in_ambient"]) << "\n";
        if (r.value("heuristic", false)) std::cout << "heuristic: float mode, not a proof\n";
        if (cmd == "mh") {
            std::cout << "M_H rows:\n";
            for (const auto& row : r["MH"]) {
                for (const auto& e : row) std::cout << "  " << e.get<std::string>();
                std::cout << "\n";
            }
        }
    } else if (cmd == "densify") {
        std::cout << "u = (";
        bool first = true;
        for (const auto& e : r["u"]) {
            if (!first) std::cout << ", ";
            std::cout << e.get<std::string>();
            first = false;
        }
        std::cout << ")\n";
        std::cout << "dim(closure(H + Zu)) = " << r["dim"]["p"].get<long long>() << " + "
                  << r["dim"]["r"].get<long long>() << "i\n";
    } else if (cmd == "closure") {
        std::cout << "q = " << r["q"] << ", dim F = " << r["p"] << ", discrete generators: "
                  << r["discrete_indices"].size() << "\n";
    } else if (cmd == "morphism") {
        std::cout << "injective:  " << yesno(r["injective"]) << "\n";
        std::cout << "surjective: " << yesno(r["surjective"]) << "\n";
        std::cout << "dim image:  " << r["image"]["dim"]["p"].get<long long>() << " + "
                  << r["image"]["dim"]["r"].get<long long>() << "i\n";
        std::cout << "dim kernel: " << r["kernel"]["dim"]["p"].get<long long>() << " + "
                  << r["kernel"]["dim"]["r"].get<long long>() << "i\n";
    } else if (cmd == "relation") {
        if (r["found"].get<bool>()) {
            std::cout << "relation:";
            for (const auto& c : r["coefficients"]) std::cout << " " << c.get<std::string>();
            std::cout << "\nresidual: " << r["residual"].get<double>() << "\n";
        } else {
            std::cout << "no certified relation at this scale\n";
        }
    }
    if (r.contains("oracle"))
        std::cout << "oracle (K=" << r["oracle"]["coefficient_bound"]
                  << ", eps=" << r["oracle"]["epsilon"]
                  << "): " << (r["oracle"]["dense"].get<bool>() ? "dense" : "not dense") << "\n";
}

void emit(const Json& report, const Options& opt) {
    if (opt.json)
        std::cout << report.dump(2) << "\n";
    else
        print_human(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"complex dimension of closures of finitely generated subgroups of R^n"};
    app.require_subcommand(1);

    Options o_dim, o_dense, o_mh, o_densify, o_closure, o_morphism, o_relation;

    CLI::App* c_dim = app.add_subcommand("dim", "complex dimension of closure(H)");
    add_common_flags(c_dim, o_dim);
    add_job_flags(c_dim, o_dim);
    add_oracle_flags(c_dim, o_dim);

    CLI::App* c_dense = app.add_subcommand("dense", "density of H in span and ambient space");
    add_common_flags(c_dense, o_dense);
    add_job_flags(c_dense, o_dense);
    add_oracle_flags(c_dense, o_dense);

    CLI::App* c_mh = app.add_subcommand("mh", "full M_H construction trace");
    add_common_flags(c_mh, o_mh);
    add_job_flags(c_mh, o_mh);

    CLI::App* c_densify = app.add_subcommand("densify", "append u so H + Zu is dense in vect(H)");
    add_common_flags(c_densify, o_densify);

    CLI::App* c_closure = app.add_subcommand("closure", "candidate F + discrete decomposition");
    add_common_flags(c_closure, o_closure);

    CLI::App* c_morphism = app.add_subcommand("morphism", "closed-group homomorphism analysis");
    add_common_flags(c_morphism, o_morphism);

    CLI::App* c_relation = app.add_subcommand("relation", "integer relation among real numbers");
    add_common_flags(c_relation, o_relation);
    add_job_flags(c_relation, o_relation);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // help/version exit 0; every usage problem is an input error
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (c_dim->parsed()) {
            groupdim::JobInput job = load_job(o_dim);
            emit(attach_oracle(groupdim::run_dim(job, numeric_options(o_dim)), job, o_dim), o_dim);
        } else if (c_dense->parsed()) {
            groupdim::JobInput job = load_job(o_dense);
            emit(attach_oracle(groupdim::run_dense(job, numeric_options(o_dense)), job, o_dense),
                 o_dense);
        } else if (c_mh->parsed()) {
            groupdim::JobInput job = load_job(o_mh);
            emit(groupdim::run_mh(job, numeric_options(o_mh)), o_mh);
        } else if (c_densify->parsed()) {
            emit(groupdim::run_densify(load_job(o_densify)), o_densify);
        } else if (c_closure->parsed()) {
            emit(groupdim::run_closure(load_job(o_closure)), o_closure);
        } else if (c_morphism->parsed()) {
            Json input = Json::parse(slurp(o_morphism.input_path));
            emit(groupdim::run_morphism(input), o_morphism);
        } else if (c_relation->parsed()) {
            Json input = Json::parse(slurp(o_relation.input_path));
            emit(groupdim::run_relation(input, o_relation.float_precision,
                                        groupdim::Int(o_relation.max_coeff),
                                        parse_delta(o_relation.lll_delta)),
                 o_relation);
        }
    } catch (const groupdim::InternalInvariantViolation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const groupdim::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        std::cerr << "error: invalid JSON input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
