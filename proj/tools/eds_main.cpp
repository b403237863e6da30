#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eds/crosscheck.hpp"
#include "eds/generate.hpp"
#include "eds/io.hpp"
#include "eds/oracle.hpp"
#include "eds/recognizers.hpp"
#include "eds/solver.hpp"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNone = 1;
constexpr int kExitClass = 2;
constexpr int kExitInput = 3;
constexpr int kExitGiveUp = 4;

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    return os.str();
}

void print_witness(const eds::PatternWitness& w) {
    std::cout << "witness-midpoint: " << w.midpoint << "\n";
    for (int t = 0; t < 3; ++t)
        std::cout << "witness-leg-" << t << ": " << join(w.legs[t]) << "\n";
}

int cmd_solve(const std::string& path, const eds::SolveOptions& opts, bool show_trace,
              bool show_time) {
    eds::Graph g = eds::load_graph(path);
    auto t0 = std::chrono::steady_clock::now();
    eds::SolveOutcome out = eds::solve(g, opts);
    auto t1 = std::chrono::steady_clock::now();

    std::cout << "verdict: " << eds::to_string(out.verdict) << "\n";
    if (out.found()) {
        std::cout << "solution: " << join(out.solution) << "\n";
        std::cout << "size: " << out.solution.size() << "\n";
    }
    std::cout << "nodes: " << out.stats.nodes << "\n";
    std::cout << "fallback: " << out.stats.fallback_activations << "\n";
    if (out.witness) print_witness(*out.witness);
    if (show_trace)
        for (const auto& e : out.trace)
            std::cout << "trace: " << std::string(std::size_t(e.depth) * 2, ' ') << e.text << "\n";
    if (show_time)
        std::cout << "time-ms: "
                  << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                  << "\n";

    switch (out.verdict) {
        case eds::SolveVerdict::found: return kExitFound;
        case eds::SolveVerdict::no_eds: return kExitNone;
        case eds::SolveVerdict::class_violation:
        case eds::SolveVerdict::not_bipartite: return kExitClass;
        case eds::SolveVerdict::give_up: return kExitGiveUp;
    }
    return kExitInput;
}

std::vector<int> parse_vertex_list(const std::vector<std::string>& words) {
    std::vector<int> out;
    for (const auto& word : words) {
        std::string piece;
        std::istringstream is(word);
        while (std::getline(is, piece, ','))
            if (!piece.empty()) out.push_back(std::stoi(piece));
    }
    return out;
}

int cmd_verify(const std::string& path, const std::vector<std::string>& words) {
    eds::Graph g = eds::load_graph(path);
    std::vector<int> set = parse_vertex_list(words);
    for (int v : set)
        if (v < 0 || v >= g.n) {
            std::cerr << "error: vertex " << v << " out of range\n";
            return kExitInput;
        }
    eds::VerifyReport rep = eds::verify_eds(g, set);
    std::cout << "verdict: " << (rep.ok ? "valid" : "invalid") << "\n";
    for (auto [v, c] : rep.violations)
        std::cout << "violation: vertex " << v << " dominated " << c << " times\n";
    return rep.ok ? kExitFound : kExitNone;
}

int cmd_recognize(const std::string& path) {
    eds::Graph g = eds::load_graph(path);
    eds::ClassCheck check = eds::is_s133_free_bipartite(g);
    switch (check.verdict) {
        case eds::ClassVerdict::yes:
            std::cout << "s133-free-bipartite: yes\n";
            return kExitFound;
        case eds::ClassVerdict::not_bipartite:
            std::cout << "s133-free-bipartite: not-bipartite\n";
            return kExitClass;
        case eds::ClassVerdict::no:
            std::cout << "s133-free-bipartite: no\n";
            print_witness(*check.witness);
            return kExitClass;
    }
    return kExitInput;
}

int cmd_oracle(const std::string& path, bool count, bool enumerate, int guard, bool mrc) {
    eds::Graph g = eds::load_graph(path);
    eds::OracleOptions opts;
    opts.size_guard = guard;
    opts.min_candidates = mrc;
    auto solution = eds::solve_exact(g, opts);
    std::cout << "verdict: " << (solution ? "found" : "no-eds") << "\n";
    if (solution) std::cout << "solution: " << join(*solution) << "\n";
    if (count) std::cout << "count: " << eds::count_eds(g, opts) << "\n";
    if (enumerate)
        for (const auto& s : eds::enumerate_eds(g, opts)) std::cout << "eds: " << join(s) << "\n";
    return solution ? kExitFound : kExitNone;
}

int emit_graph(const eds::Graph& g, const std::string& format) {
    if (format == "el")
        eds::write_edge_list(std::cout, g);
    else
        std::cout << eds::write_graph6(g) << "\n";
    return kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"efficient dominating set toolkit for S_{1,3,3}-free bipartite graphs"};
    app.require_subcommand(1);

    // solve
    std::string path;
    bool check_class = false, assume_class = false, show_trace = false, show_time = false,
         debug_checks = false;
    int root = -1;
    long long budget = 200000;
    auto* solve_cmd = app.add_subcommand("solve", "decide efficient domination");
    solve_cmd->add_option("path", path, "input graph (edge list or graph6)")->required();
    solve_cmd->add_flag("--check-class", check_class, "refuse graphs outside the class");
    solve_cmd->add_flag("--assume-class", assume_class, "trust the input is in the class");
    solve_cmd->add_option("--root", root, "force this root vertex");
    solve_cmd->add_flag("--trace", show_trace, "print the case trace");
    solve_cmd->add_flag("--time", show_time, "print wall time (not byte-stable)");
    solve_cmd->add_flag("--debug-checks", debug_checks, "structural audits with witness extraction");
    solve_cmd->add_option("--fallback-budget", budget, "node budget for the defensive search");

    // verify
    std::string vpath;
    std::vector<std::string> vset;
    auto* verify_cmd = app.add_subcommand("verify", "check a vertex set for the exact-domination property");
    verify_cmd->add_option("path", vpath)->required();
    verify_cmd->add_option("vertices", vset, "members, space- or comma-separated");

    // recognize
    std::string rpath;
    auto* recog_cmd = app.add_subcommand("recognize", "class membership test");
    recog_cmd->add_option("path", rpath)->required();

    // oracle
    std::string opath;
    bool ocount = false, oenum = false, omrc = false;
    int oguard = 64;
    auto* oracle_cmd = app.add_subcommand("oracle", "exact exponential solver (ground truth)");
    oracle_cmd->add_option("path", opath)->required();
    oracle_cmd->add_flag("--count", ocount, "count all solutions");
    oracle_cmd->add_flag("--enumerate", oenum, "list all solutions");
    oracle_cmd->add_flag("--min-candidates", omrc, "fewest-choices vertex selection");
    oracle_cmd->add_option("--guard", oguard, "instance size guard");

    // generate
    std::string kind, gformat = "g6";
    std::vector<std::string> gargs;
    std::uint64_t gseed = 1;
    int gbudget = 10000;
    auto* gen_cmd = app.add_subcommand("generate", "construct instances");
    gen_cmd->add_option("kind", kind, "path | cycle | random-bipartite | random-s133-free")
        ->required();
    gen_cmd->add_option("params", gargs, "kind parameters");
    gen_cmd->add_option("--seed", gseed, "random seed");
    gen_cmd->add_option("--budget", gbudget, "rejection-sampling attempt budget");
    gen_cmd->add_option("--format", gformat, "g6 (default) or el");

    // crosscheck
    eds::CrosscheckParams cc;
    bool include_nonclass = false, no_class_check = false;
    auto* cc_cmd = app.add_subcommand("crosscheck", "solver vs oracle agreement run");
    cc_cmd->add_option("--count", cc.count, "instances to check");
    cc_cmd->add_option("--max-n", cc.max_n, "vertex-count ceiling");
    cc_cmd->add_option("--seed", cc.seed, "random seed");
    cc_cmd->add_option("--jobs", cc.jobs, "parallel workers");
    cc_cmd->add_option("--budget", cc.fallback_budget, "fallback node budget");
    cc_cmd->add_flag("--include-nonclass", include_nonclass, "keep instances outside the class");
    cc_cmd->add_flag("--no-class-check", no_class_check, "run the solver without the class gate");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve_cmd) {
            eds::SolveOptions opts;
            opts.check_class = check_class;
            opts.assume_class = assume_class;
            opts.fallback_budget = budget;
            opts.debug_checks = debug_checks;
            if (solve_cmd->count("--root")) opts.root = root;
            return cmd_solve(path, opts, show_trace, show_time);
        }
        if (*verify_cmd) return cmd_verify(vpath, vset);
        if (*recog_cmd) return cmd_recognize(rpath);
        if (*oracle_cmd) return cmd_oracle(opath, ocount, oenum, oguard, omrc);
        if (*gen_cmd) {
            auto need = [&](std::size_t k) {
                if (gargs.size() != k)
                    throw std::invalid_argument("kind '" + kind + "' expects " +
                                                std::to_string(k) + " parameter(s)");
            };
            if (kind == "path") {
                need(1);
                return emit_graph(eds::make_path(std::stoi(gargs[0])), gformat);
            }
            if (kind == "cycle") {
                need(1);
                return emit_graph(eds::make_cycle(std::stoi(gargs[0])), gformat);
            }
            if (kind == "random-bipartite") {
                need(3);
                return emit_graph(eds::random_bipartite(std::stoi(gargs[0]), std::stoi(gargs[1]),
                                                        std::stod(gargs[2]), gseed),
                                  gformat);
            }
            if (kind == "random-s133-free") {
                need(3);
                auto sample = eds::random_s133_free_bipartite(
                    std::stoi(gargs[0]), std::stoi(gargs[1]), std::stod(gargs[2]), gseed, gbudget);
                if (!sample.graph) {
                    std::cerr << "error: rejection budget exhausted after " << sample.attempts
                              << " attempts\n";
                    return kExitInput;
                }
                std::cerr << "attempts: " << sample.attempts << "\n";
                return emit_graph(*sample.graph, gformat);
            }
            throw std::invalid_argument("unknown kind '" + kind + "'");
        }
        if (*cc_cmd) {
            cc.class_members_only = !include_nonclass;
            cc.solver_checks_class = !no_class_check;
            eds::CrosscheckReport rep = eds::run_crosscheck(cc);
            std::cout << "agree: " << rep.agree << "/" << rep.checked
                      << ", fallback: " << rep.fallback_activations << "\n";
            std::cout << "give-ups: " << rep.give_ups << "\n";
            std::cout << "generator-attempts: " << rep.generator_attempts << "\n";
            std::cout << "max-nodes: " << rep.max_nodes << "\n";
            for (const auto& g6 : rep.disagreements) std::cout << "disagreement: " << g6 << "\n";
            bool ok = rep.checked == cc.count && rep.all_agree() &&
                      (!cc.class_members_only || rep.fallback_activations == 0);
            return ok ? kExitFound : kExitNone;
        }
    } catch (const eds::SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
