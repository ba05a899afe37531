#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathcover/bounded_cover.hpp"
#include "pathcover/certificate.hpp"
#include "pathcover/constants.hpp"
#include "pathcover/cycle_theorem.hpp"
#include "pathcover/detectors.hpp"
#include "pathcover/exact.hpp"
#include "pathcover/experiments.hpp"
#include "pathcover/families.hpp"
#include "pathcover/verify.hpp"
#include "pathcover/version.hpp"

namespace {

using namespace pathcover;
using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

std::string witness_line(const Witness& w) {
    std::ostringstream os;
    os << w.pattern << " at";
    for (Vertex v : w.host_vertices) os << ' ' << v;
    if (w.branch_detail >= 0) os << " (branch count " << w.branch_detail << ")";
    return os.str();
}

int cmd_gen(const std::string& family, int n, int order, double prob, std::uint64_t seed,
            const std::vector<int>& branches, const std::string& out_path) {
    std::string text;
    if (family == "random") {
        text = "# kind: digraph\n" + random_oriented(order, prob, seed).serialize();
    } else {
        Family f = family_from_name(family);
        if (f == Family::Zigzag) {
            text = "# kind: digraph\n" + zigzag_pseudo_path(order, branches).serialize();
        } else if (family_is_directed(f)) {
            text = "# kind: digraph\n" + generate_digraph(f, n).serialize();
        } else {
            text = "# kind: graph\n" + generate_graph(f, n).serialize();
        }
    }
    emit(out_path, text);
    return 0;
}

int cmd_check(const std::string& cond_name, int n, const std::string& file,
              std::uint64_t budget) {
    Digraph d = Digraph::parse(read_file(file));
    DetectorOptions opts;
    if (budget > 0) opts.state_budget = budget;
    auto report = check_condition(d, condition_from_name(cond_name), n, opts);
    switch (report.status) {
        case CheckStatus::Satisfied:
            std::cout << "satisfied";
            if (report.max_branch >= 0) std::cout << " (max branch count " << report.max_branch << ")";
            std::cout << "\n";
            return 0;
        case CheckStatus::Violated:
            std::cout << "violated: " << witness_line(*report.witness) << "\n";
            return 1;
        case CheckStatus::Inconclusive:
            std::cout << "inconclusive: scan budget exhausted\n";
            return 2;
    }
    return 2;
}

int cmd_solve(const std::string& stat, const std::string& file, int cap,
              const std::string& out_path) {
    Digraph d = Digraph::parse(read_file(file));
    SolverOptions opts;
    if (cap > 0) opts.cap = cap;
    ordered_json cert_json;
    if (stat == "alpha") {
        auto a = alpha_exact(d.underlying());
        std::cout << a.size << "\n";
    } else if (stat == "pc" || stat == "pp") {
        auto [value, cert] = stat == "pc" ? pc_exact(d, opts) : pp_exact(d, opts);
        std::cout << value << "\n";
        cert_json = to_json(cert);
    } else if (stat == "cc" || stat == "cp") {
        auto [value, cert] = stat == "cc" ? cc_exact(d, opts) : cp_exact(d, opts);
        std::cout << value << "\n";
        cert_json = to_json(cert);
    } else if (stat == "hampath") {
        auto path = hamiltonian_directed_path(d, opts);
        if (!path) {
            std::cout << "none\n";
            return 1;
        }
        for (size_t i = 0; i < path->size(); ++i)
            std::cout << (*path)[i] << (i + 1 < path->size() ? ' ' : '\n');
        PathCoverCertificate cert;
        cert.mode = CoverMode::Partition;
        cert.paths = {*path};
        cert.provenance = {{"producer", "hamiltonian_directed_path"}};
        cert_json = to_json(cert);
    } else if (stat == "gm") {
        auto cert = gallai_milgram_partition(d, opts);
        std::cout << cert.size() << "\n";
        cert_json = to_json(cert);
    } else {
        throw InvalidParameterError("unknown stat: " + stat);
    }
    if (!out_path.empty() && !cert_json.is_null()) write_file(out_path, cert_json.dump(2) + "\n");
    return 0;
}

int cmd_cover(int n, const std::string& mode_name, const std::string& file, int cap,
              const std::string& out_path) {
    Digraph d = Digraph::parse(read_file(file));
    TheoremOptions opts;
    if (cap > 0) {
        opts.search.cap = cap;
        opts.solver.cap = cap;
    }
    try {
        auto cert = certified_cover(d, n, cover_mode_from_name(mode_name), opts);
        std::cout << "paths " << cert.size() << ", claimed bound " << cert.bound->total << "\n";
        if (!out_path.empty()) write_file(out_path, to_json(cert).dump(2) + "\n");
        return 0;
    } catch (const ConditionViolatedError& e) {
        std::cout << "condition " << condition_name(e.report.condition)
                  << " violated: " << witness_line(*e.report.witness) << "\n";
        return 1;
    }
}

int cmd_verify(const std::string& graph_file, const std::string& cert_file) {
    nlohmann::json cert;
    try {
        cert = nlohmann::json::parse(read_file(cert_file));
    } catch (const std::exception& e) {
        std::cout << "certificate parse failure: " << e.what() << "\n";
        return 2;
    }
    auto result = verify_certificate(read_file(graph_file), cert);
    std::cout << result.message << "\n";
    return result.ok ? 0 : 1;
}

int cmd_cycle(int n, int max_order, const std::string& file, const std::string& format) {
    if (!file.empty()) {
        Digraph d = Digraph::parse(read_file(file));
        auto rep = check_cycle_theorem(d, n);
        if (format == "json") {
            ordered_json j;
            j["n"] = rep.n;
            j["premise_ok"] = rep.premise_ok;
            if (!rep.failure.empty()) j["failure"] = rep.failure;
            j["max_degree"] = rep.max_deg;
            j["diameter"] = rep.diam;
            j["degree_bound"] = rep.degree_bound.get_str();
            j["order_bound"] = rep.order_bound.get_str();
            j["bounds_ok"] = rep.bounds_ok;
            if (rep.cp_value) j["cp"] = *rep.cp_value;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << (rep.premise_ok ? "premise ok" : "premise fails: " + rep.failure) << "\n";
            if (rep.premise_ok) {
                std::cout << "max degree " << rep.max_deg << " (bound " << rep.degree_bound.get_str()
                          << "), diameter " << rep.diam << ", order bound "
                          << rep.order_bound.get_str() << (rep.bounds_ok ? ", bounds hold" : ", BOUNDS FAIL")
                          << "\n";
                if (rep.cp_value) std::cout << "cp = " << *rep.cp_value << "\n";
            }
        }
        return rep.premise_ok && !rep.bounds_ok ? 1 : 0;
    }
    auto sum = exhaustive_small_verification(n, max_order);
    if (format == "json") {
        ordered_json j;
        j["n"] = sum.n;
        j["max_order"] = sum.max_order;
        j["examined"] = sum.examined;
        j["survivors_labeled"] = sum.survivors_labeled;
        j["survivors_iso"] = sum.survivors_iso;
        j["max_survivor_order"] = sum.max_survivor_order;
        j["order_bound"] = sum.order_bound.get_str();
        j["all_within_bound"] = sum.all_within_bound;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "examined " << sum.examined << " oriented graphs up to order " << sum.max_order
                  << "; " << sum.survivors_labeled << " premise-passing (" << sum.survivors_iso
                  << " up to isomorphism), max order " << sum.max_survivor_order << ", bound "
                  << sum.order_bound.get_str() << (sum.all_within_bound ? ", all within bound" : ", BOUND FAIL")
                  << "\n";
    }
    return sum.all_within_bound ? 0 : 1;
}

int cmd_experiment(const std::string& kind, int trials, std::uint64_t seed, int cap,
                   const std::string& format, const std::string& out_path) {
    ExperimentConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    if (cap > 0) cfg.solver.cap = cap;
    auto rep = run_experiment(kind, cfg);
    if (format == "json") {
        emit(out_path, to_json(rep).dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << rep.kind << ": " << (rep.pass ? "pass" : "FAIL") << " (" << rep.trials << " trials, "
           << rep.failures << " failures)\n";
        for (const auto& [k, v] : rep.stats) os << "  " << k << " = " << v << "\n";
        for (const auto& r : rep.records)
            if (!r.pass) os << "  FAIL " << r.name << " seed=" << r.seed << " " << r.note << "\n";
        emit(out_path, os.str());
    }
    return rep.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"digraph path cover toolkit"};
    app.set_version_flag("--version", std::string("pathcover ") + pathcover::kVersion);
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named or random (di)graph");
    std::string gen_family;
    int gen_n = 3, gen_order = 8;
    double gen_prob = 0.5;
    std::uint64_t gen_seed = 1;
    std::vector<int> gen_branches;
    std::string gen_out;
    gen->add_option("--family", gen_family, "family name or 'random'")->required();
    gen->add_option("--n", gen_n, "family parameter");
    gen->add_option("--order", gen_order, "order for random/zigzag");
    gen->add_option("--prob", gen_prob, "arc probability for random");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--branches", gen_branches, "zigzag branch positions (0-based interior)");
    gen->add_option("--out", gen_out, "output file (stdout when absent)");

    // check
    auto* check = app.add_subcommand("check", "check a freeness condition");
    std::string check_cond, check_file;
    int check_n = 3;
    std::uint64_t check_budget = 0;
    check->add_option("--cond", check_cond, "d1|dprime1|d2|d3|sec4")->required();
    check->add_option("--n", check_n, "condition parameter")->required();
    check->add_option("file", check_file, "arc-list file")->required();
    check->add_option("--budget", check_budget, "pseudo-path scan state budget");

    // solve
    auto* solve = app.add_subcommand("solve", "run an exact solver");
    std::string solve_stat, solve_file, solve_out;
    int solve_cap = 0;
    solve->add_option("--stat", solve_stat, "pc|pp|alpha|cc|cp|hampath|gm")->required();
    solve->add_option("file", solve_file, "arc-list file")->required();
    solve->add_option("--cap", solve_cap, "solver order cap");
    solve->add_option("--out", solve_out, "certificate JSON output");

    // cover
    auto* cover = app.add_subcommand("cover", "certified bounded cover/partition");
    std::string cover_mode = "cover", cover_file, cover_out;
    int cover_n = 3, cover_cap = 0;
    cover->add_option("--n", cover_n, "parameter n")->required();
    cover->add_option("--mode", cover_mode, "cover|partition");
    cover->add_option("file", cover_file, "arc-list file")->required();
    cover->add_option("--cap", cover_cap, "instance order cap");
    cover->add_option("--out", cover_out, "certificate JSON output");

    // verify
    auto* verify = app.add_subcommand("verify", "independently verify a certificate");
    std::string verify_graph, verify_cert;
    verify->add_option("graph", verify_graph, "arc-list file")->required();
    verify->add_option("certificate", verify_cert, "certificate JSON file")->required();

    // cycle-theorem
    auto* cycle = app.add_subcommand("cycle-theorem", "premise/bound checks for cycle partitions");
    std::string cycle_file, cycle_format = "text";
    int cycle_n = 3, cycle_max_order = 0;
    cycle->add_option("--n", cycle_n, "parameter n")->required();
    cycle->add_option("--max-order", cycle_max_order, "exhaustive verification up to this order");
    cycle->add_option("file", cycle_file, "arc-list file (single-instance report)");
    cycle->add_option("--report", cycle_format, "json|text");

    // experiment
    auto* exp = app.add_subcommand("experiment", "run a property experiment");
    std::string exp_kind, exp_format = "text", exp_out;
    int exp_trials = 0, exp_cap = 0;
    std::uint64_t exp_seed = 1;
    exp->add_option("--kind", exp_kind,
                    "chain-law|pseudo-path-law|theorem-e2e|attachment-battery|cycle-small")
        ->required();
    exp->add_option("--trials", exp_trials, "trial count (0 = default)");
    exp->add_option("--seed", exp_seed, "base seed");
    exp->add_option("--cap", exp_cap, "solver cap");
    exp->add_option("--format", exp_format, "json|text");
    exp->add_option("--out", exp_out, "output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(gen_family, gen_n, gen_order, gen_prob, gen_seed, gen_branches, gen_out);
        if (check->parsed()) return cmd_check(check_cond, check_n, check_file, check_budget);
        if (solve->parsed()) return cmd_solve(solve_stat, solve_file, solve_cap, solve_out);
        if (cover->parsed()) return cmd_cover(cover_n, cover_mode, cover_file, cover_cap, cover_out);
        if (verify->parsed()) return cmd_verify(verify_graph, verify_cert);
        if (cycle->parsed()) return cmd_cycle(cycle_n, cycle_max_order, cycle_file, cycle_format);
        if (exp->parsed())
            return cmd_experiment(exp_kind, exp_trials, exp_seed, exp_cap, exp_format, exp_out);
    } catch (const pathcover::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pathcover::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
