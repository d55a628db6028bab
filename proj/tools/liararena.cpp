// liararena: comparison games against lying adversaries.
//
// Subcommands: play one game, compute exact minimax values, sweep a
// (n, k, solver, adversary) grid, print the closed-form bound table, and
// verify that nothing in the arena ever beats a proven bound.
//
// Exit codes: 0 success, 1 bound/verification violation, 2 invalid
// configuration or I/O error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "liararena/arena.hpp"
#include "liararena/bounds.hpp"
#include "liararena/exact.hpp"
#include "liararena/graph.hpp"
#include "liararena/harness.hpp"

namespace {

using namespace liararena;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;

bool write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

struct PlayArgs {
    std::string solver;
    std::string adversary;
    std::string claim1 = "off";
    int n = 2;
    int k = 0;
    std::string kind = "max";
    uint64_t seed = 0;
    int query_cap = 0;
    std::string dump_transcript_path;
    std::string dump_graph_path;
};

int cmd_play(const PlayArgs& args) {
    const GameKind kind = game_kind_from_string(args.kind);
    auto solver = make_solver(args.solver, args.n, args.k, kind, args.seed);
    auto adversary = make_adversary(args.adversary, args.claim1 == "on", args.n, args.k, kind);
    GameConfig cfg{args.n, args.k, kind};
    cfg.query_cap = args.query_cap;
    const GameResult result = run_game(*solver, *adversary, cfg);
    std::cout << result_to_json(result) << "\n";
    if (!args.dump_transcript_path.empty() &&
        !write_output(args.dump_transcript_path, dump_transcript(result.transcript)))
        return kExitConfig;
    if (!args.dump_graph_path.empty()) {
        const auto g = ComparisonGraph::from_transcript(result.transcript);
        if (!write_output(args.dump_graph_path, g.dump_edges())) return kExitConfig;
    }
    return result.verified ? kExitOk : kExitViolation;
}

struct ExactArgs {
    int n = 2;
    int k = 0;
    std::string kind = "max";
    bool table = false;
    int n_max = 4;
    int k_max = 2;
    std::string output;
};

int cmd_exact(const ExactArgs& args) {
    if (!args.table) {
        std::cout << exact::game_value(args.n, args.k, game_kind_from_string(args.kind)) << "\n";
        return kExitOk;
    }
    std::string csv = "n,k,kind,value\n";
    for (int n = 2; n <= args.n_max; ++n)
        for (int k = 0; k <= args.k_max; ++k) {
            if (!exact::within_guard(n, k)) continue;
            for (const GameKind kind : {GameKind::Max, GameKind::MaxMin})
                csv += std::to_string(n) + "," + std::to_string(k) + "," + to_string(kind) + "," +
                       std::to_string(exact::game_value(n, k, kind)) + "\n";
        }
    return write_output(args.output, csv) ? kExitOk : kExitConfig;
}

struct SweepArgs {
    SweepConfig cfg;
    std::string kind = "max";
    std::string format = "csv";
    std::string claim1 = "off";
};

int cmd_sweep(SweepArgs& args) {
    args.cfg.kind = game_kind_from_string(args.kind);
    args.cfg.claim1 = args.claim1 == "on";
    if (args.format == "csv") {
        args.cfg.format = SweepFormat::Csv;
    } else if (args.format == "json") {
        args.cfg.format = SweepFormat::Json;
    } else {
        throw CLI::ValidationError("--format must be csv or json");
    }
    const auto rows = run_sweep(args.cfg);
    const std::string text =
        args.cfg.format == SweepFormat::Csv ? sweep_to_csv(rows) : sweep_to_json(rows);
    return write_output(args.cfg.output, text) ? kExitOk : kExitConfig;
}

struct BoundsArgs {
    bool table = false;
    int n_max = 10;
    int k_max = 3;
    std::string output;
};

int cmd_bounds(const BoundsArgs& args) {
    std::string csv = "n,k,pohl,rgl_max,thm1_lower,identity_ok\n";
    for (int n = 2; n <= args.n_max; ++n)
        for (int k = 0; k <= args.k_max; ++k)
            csv += std::to_string(n) + "," + std::to_string(k) + "," +
                   std::to_string(bounds::pohl(n)) + "," + std::to_string(bounds::rgl_max(n, k)) +
                   "," + std::to_string(bounds::thm1_lower(n, k)) + "," +
                   (bounds::thm1_identity_check(n, k) ? "1" : "0") + "\n";
    return write_output(args.output, csv) ? kExitOk : kExitConfig;
}

struct VerifyArgs {
    bool exact_mode = false;
    bool adversary_mode = false;
    std::string kind = "max";
    int n_max = 4;
    int k_max = 2;
    int k_single = -1;
    int trials = 200;
    uint64_t seed = 0;
};

int cmd_verify_bounds(const VerifyArgs& args) {
    const GameKind kind = game_kind_from_string(args.kind);
    std::vector<BoundViolation> violations;
    if (args.exact_mode == args.adversary_mode)
        throw CLI::ValidationError("choose exactly one of --exact / --adversary");
    if (args.exact_mode) {
        const int k_min = args.k_single >= 0 ? args.k_single : 0;
        const int k_max = args.k_single >= 0 ? args.k_single : args.k_max;
        violations = verify_bounds_exact(kind, args.n_max, k_min, k_max);
        std::cout << "verify-bounds --exact kind=" << to_string(kind) << " n<=" << args.n_max
                  << " k=" << k_min << ".." << k_max << "\n";
    } else {
        violations = verify_bounds_adversary(kind, args.n_max, args.k_max, args.trials, args.seed);
        std::cout << "verify-bounds --adversary kind=" << to_string(kind) << " n<=" << args.n_max
                  << " k<=" << args.k_max << " trials=" << args.trials << "\n";
    }
    for (const auto& v : violations) std::cout << to_string(v) << "\n";
    std::cout << (violations.empty() ? "all bounds hold\n" : "bounds violated\n");
    return violations.empty() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arena for comparison-based search games with up to k lies"};
    app.require_subcommand(1);

    PlayArgs play;
    auto* play_cmd = app.add_subcommand("play", "run one game and print its result as JSON");
    play_cmd->add_option("--solver", play.solver, "solver name")
        ->required()
        ->check(CLI::IsMember(registered_solvers()));
    play_cmd->add_option("--adversary", play.adversary, "adversary name")
        ->required()
        ->check(CLI::IsMember(registered_adversaries()));
    play_cmd->add_option("--claim1", play.claim1, "wrap the adversary in the k-more-questions extension")
        ->check(CLI::IsMember({"on", "off"}));
    play_cmd->add_option("--n", play.n, "ground-set size")->check(CLI::PositiveNumber);
    play_cmd->add_option("--k", play.k, "lie budget")->check(CLI::NonNegativeNumber);
    play_cmd->add_option("--kind", play.kind, "game kind")->check(CLI::IsMember({"max", "maxmin"}));
    play_cmd->add_option("--seed", play.seed, "random-solver seed");
    play_cmd->add_option("--query-cap", play.query_cap, "override the query cap");
    play_cmd->add_option("--dump-transcript", play.dump_transcript_path,
                         "write the transcript ('a b winner' lines; '-' for stdout)");
    play_cmd->add_option("--dump-graph", play.dump_graph_path,
                         "write the comparison graph edge list ('-' for stdout)");

    ExactArgs exact_args;
    auto* exact_cmd = app.add_subcommand("exact", "exact minimax value of a tiny game");
    exact_cmd->add_option("--n", exact_args.n, "ground-set size");
    exact_cmd->add_option("--k", exact_args.k, "lie budget");
    exact_cmd->add_option("--kind", exact_args.kind, "game kind")
        ->check(CLI::IsMember({"max", "maxmin"}));
    exact_cmd->add_flag("--table", exact_args.table, "emit a CSV over the in-guard grid");
    exact_cmd->add_option("--n-max", exact_args.n_max, "table: largest n");
    exact_cmd->add_option("--k-max", exact_args.k_max, "table: largest k");
    exact_cmd->add_option("--output", exact_args.output, "output path (default stdout)");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "run a (n,k,solver,adversary) grid");
    sweep_cmd->add_option("--n-min", sweep.cfg.n_min, "smallest n");
    sweep_cmd->add_option("--n-max", sweep.cfg.n_max, "largest n");
    sweep_cmd->add_option("--k-min", sweep.cfg.k_min, "smallest k");
    sweep_cmd->add_option("--k-max", sweep.cfg.k_max, "largest k");
    sweep_cmd->add_option("--solvers", sweep.cfg.solvers, "solver names (default: all for kind)");
    sweep_cmd->add_option("--adversaries", sweep.cfg.adversaries,
                          "adversary names (default: all)");
    sweep_cmd->add_option("--claim1", sweep.claim1, "wrap adversaries")
        ->check(CLI::IsMember({"on", "off"}));
    sweep_cmd->add_option("--kind", sweep.kind, "game kind")
        ->check(CLI::IsMember({"max", "maxmin"}));
    sweep_cmd->add_option("--seed", sweep.cfg.seed, "base seed");
    sweep_cmd->add_option("--output", sweep.cfg.output, "output path (default stdout)");
    sweep_cmd->add_option("--format", sweep.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    BoundsArgs bounds_args;
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound table as CSV");
    bounds_cmd->add_flag("--table", bounds_args.table, "emit the table (default action)");
    bounds_cmd->add_option("--n-max", bounds_args.n_max, "largest n");
    bounds_cmd->add_option("--k-max", bounds_args.k_max, "largest k");
    bounds_cmd->add_option("--output", bounds_args.output, "output path (default stdout)");

    VerifyArgs verify;
    auto* verify_cmd =
        app.add_subcommand("verify-bounds", "check the proven bounds; exit 1 on any violation");
    verify_cmd->add_flag("--exact", verify.exact_mode, "check exact game values");
    verify_cmd->add_flag("--adversary", verify.adversary_mode,
                         "play solvers against the adversaries");
    verify_cmd->add_option("--kind", verify.kind, "game kind")
        ->check(CLI::IsMember({"max", "maxmin"}));
    verify_cmd->add_option("--n-max", verify.n_max, "largest n");
    verify_cmd->add_option("--k-max", verify.k_max, "largest k");
    verify_cmd->add_option("--k", verify.k_single, "single k (exact mode)");
    verify_cmd->add_option("--trials", verify.trials, "random-solver runs per grid point");
    verify_cmd->add_option("--seed", verify.seed, "base seed for the random trials");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (play_cmd->parsed()) return cmd_play(play);
        if (exact_cmd->parsed()) return cmd_exact(exact_args);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep);
        if (bounds_cmd->parsed()) return cmd_bounds(bounds_args);
        if (verify_cmd->parsed()) return cmd_verify_bounds(verify);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitConfig;
}
