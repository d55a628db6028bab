#include "liararena/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "liararena/bounds.hpp"
#include "liararena/exact.hpp"

namespace liararena {

namespace {

uint64_t mix_seed(uint64_t seed, uint64_t index) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
    const unsigned width = std::min<size_t>(arena_threads(), count);
    if (width <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    std::exception_ptr error;
    std::mutex error_mu;
    for (unsigned w = 0; w < width; ++w) {
        workers.emplace_back([&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : workers) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<std::string> registered_solvers() {
    return {"naive-maxmin", "pair-and-conquer", "random", "tournament-max"};
}

std::vector<std::string> registered_adversaries() { return {"consistent", "topbottom", "truthful"}; }

bool solver_supports(const std::string& name, GameKind kind) {
    if (name == "tournament-max") return kind == GameKind::Max;
    if (name == "naive-maxmin" || name == "pair-and-conquer") return kind == GameKind::MaxMin;
    if (name == "random") return true;
    return false;
}

std::unique_ptr<Solver> make_solver(const std::string& name, int n, int k, GameKind kind,
                                    uint64_t seed, int enum_cap) {
    if (!solver_supports(name, kind))
        throw std::invalid_argument("solver '" + name + "' does not play " + to_string(kind) +
                                    " games");
    if (name == "tournament-max") return std::make_unique<TournamentMaxSolver>(n, k);
    if (name == "naive-maxmin") return std::make_unique<NaiveMaxMinSolver>(n, k);
    if (name == "pair-and-conquer") return std::make_unique<PairAndConquerSolver>(n, k);
    if (name == "random")
        return std::make_unique<RandomSolver>(n, seed, [k, kind, enum_cap](const Transcript& t) {
            return determined_claim(t, k, kind, enum_cap);
        });
    throw std::invalid_argument("unknown solver: " + name);
}

std::unique_ptr<Adversary> make_adversary(const std::string& name, bool claim1, int n, int k,
                                          GameKind kind, int enum_cap) {
    std::unique_ptr<ConsistentBase> base;
    if (name == "truthful") {
        base = std::make_unique<TruthfulAdversary>(Scenario::identity(n));
    } else if (name == "consistent") {
        base = std::make_unique<ConsistentAdversary>(n);
    } else if (name == "topbottom") {
        base = std::make_unique<TopBottomAdversary>(n);
    } else {
        throw std::invalid_argument("unknown adversary: " + name);
    }
    if (!claim1) return base;
    return std::make_unique<Claim1Wrapper>(std::move(base), k, kind, enum_cap);
}

unsigned arena_threads() {
    if (const char* env = std::getenv("LIAR_ARENA_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) return static_cast<unsigned>(parsed);
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

std::vector<GameResult> run_sweep(const SweepConfig& cfg) {
    if (cfg.n_min < 1 || cfg.n_min > cfg.n_max || cfg.k_min < 0 || cfg.k_min > cfg.k_max)
        throw std::invalid_argument("run_sweep: empty or invalid n/k range");

    std::vector<std::string> solvers = cfg.solvers;
    if (solvers.empty()) {
        for (const auto& name : registered_solvers())
            if (solver_supports(name, cfg.kind)) solvers.push_back(name);
    } else {
        for (const auto& name : solvers)
            if (!solver_supports(name, cfg.kind))
                throw std::invalid_argument("solver '" + name + "' does not play " +
                                            to_string(cfg.kind) + " games");
    }
    std::vector<std::string> adversaries =
        cfg.adversaries.empty() ? registered_adversaries() : cfg.adversaries;
    for (const auto& name : adversaries)
        if (std::find(registered_adversaries().begin(), registered_adversaries().end(), name) ==
            registered_adversaries().end())
            throw std::invalid_argument("unknown adversary: " + name);
    std::sort(solvers.begin(), solvers.end());
    std::sort(adversaries.begin(), adversaries.end());

    struct Task {
        int n;
        int k;
        std::string solver;
        std::string adversary;
    };
    std::vector<Task> tasks;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n)
        for (int k = cfg.k_min; k <= cfg.k_max; ++k)
            for (const auto& s : solvers)
                for (const auto& a : adversaries) tasks.push_back({n, k, s, a});

    std::vector<GameResult> rows(tasks.size(), GameResult{});
    parallel_for(tasks.size(), [&](size_t i) {
        const Task& task = tasks[i];
        auto solver =
            make_solver(task.solver, task.n, task.k, cfg.kind, mix_seed(cfg.seed, i));
        auto adversary = make_adversary(task.adversary, cfg.claim1, task.n, task.k, cfg.kind);
        rows[i] = run_game(*solver, *adversary, GameConfig{task.n, task.k, cfg.kind});
    });
    return rows;
}

std::string sweep_to_csv(const std::vector<GameResult>& rows) {
    std::ostringstream os;
    os << "n,k,solver,adversary,kind,queries,verified\n";
    for (const auto& r : rows)
        os << r.n << "," << r.k << "," << r.solver << "," << r.adversary << ","
           << to_string(r.kind) << "," << r.queries_used << "," << (r.verified ? 1 : 0) << "\n";
    return os.str();
}

namespace {

nlohmann::json result_json_object(const GameResult& r) {
    return nlohmann::json{{"n", r.n},
                          {"k", r.k},
                          {"kind", to_string(r.kind)},
                          {"solver", r.solver},
                          {"adversary", r.adversary},
                          {"queries", r.queries_used},
                          {"verified", r.verified},
                          {"forfeit", r.adversary_forfeit}};
}

}  // namespace

std::string sweep_to_json(const std::vector<GameResult>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(result_json_object(r));
    return arr.dump() + "\n";
}

std::string result_to_json(const GameResult& r) { return result_json_object(r).dump(); }

GameResult result_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    GameResult r;
    r.n = j.at("n").get<int>();
    r.k = j.at("k").get<int>();
    r.kind = game_kind_from_string(j.at("kind").get<std::string>());
    r.solver = j.at("solver").get<std::string>();
    r.adversary = j.at("adversary").get<std::string>();
    r.queries_used = j.at("queries").get<int>();
    r.verified = j.at("verified").get<bool>();
    r.adversary_forfeit = j.at("forfeit").get<bool>();
    r.transcript = Transcript(r.n);
    return r;
}

std::string to_string(const BoundViolation& v) {
    std::ostringstream os;
    os << "VIOLATION n=" << v.n << " k=" << v.k << " bound=" << v.bound
       << " expected=" << v.expected << " observed=" << v.observed;
    if (!v.solver.empty()) os << " solver=" << v.solver;
    if (!v.adversary.empty()) os << " adversary=" << v.adversary;
    return os.str();
}

std::vector<BoundViolation> verify_bounds_exact(GameKind kind, int n_max, int k_min, int k_max) {
    std::vector<BoundViolation> out;
    for (int n = 2; n <= n_max; ++n) {
        for (int k = k_min; k <= k_max; ++k) {
            if (!exact::within_guard(n, k))
                throw std::domain_error("verify_bounds_exact: grid point outside solver guard");
            const long long value = exact::game_value(n, k, kind);
            if (kind == GameKind::Max) {
                const long long want = bounds::rgl_max(n, k);
                if (value != want)
                    out.push_back({n, k, "rgl_max", want, value, "", ""});
            } else if (k == 0) {
                const long long want = bounds::pohl(n);
                if (value != want)
                    out.push_back({n, k, "pohl", want, value, "", ""});
            } else {
                const long long floor = bounds::thm1_lower(n, k);
                if (value < floor)
                    out.push_back({n, k, "thm1_lower", floor, value, "", ""});
            }
        }
    }
    return out;
}

std::vector<BoundViolation> verify_bounds_adversary(GameKind kind, int n_max, int k_max,
                                                    int trials, uint64_t seed) {
    struct Task {
        int n;
        int k;
        std::string solver;
        std::string adversary;
        bool claim1;
        uint64_t seed;
        bool ceiling_check;  // tournament upper bound rather than lower bound
    };
    std::vector<Task> tasks;
    const std::string paper_adversary = kind == GameKind::Max ? "consistent" : "topbottom";
    for (int n = 2; n <= n_max; ++n) {
        for (int k = 0; k <= k_max; ++k) {
            size_t trial_index = 0;
            for (const auto& name : registered_solvers()) {
                if (!solver_supports(name, kind)) continue;
                if (name == "random") {
                    for (int t = 0; t < trials; ++t)
                        tasks.push_back({n, k, name, paper_adversary, true,
                                         mix_seed(seed, trial_index++), false});
                } else {
                    tasks.push_back({n, k, name, paper_adversary, true, 0, false});
                }
            }
            if (kind == GameKind::Max) {
                for (const auto& adversary : registered_adversaries())
                    for (const bool claim1 : {false, true})
                        tasks.push_back({n, k, "tournament-max", adversary, claim1, 0, true});
            }
        }
    }

    std::vector<std::vector<BoundViolation>> found(tasks.size());
    parallel_for(tasks.size(), [&](size_t i) {
        const Task& task = tasks[i];
        auto solver = make_solver(task.solver, task.n, task.k, kind, task.seed);
        auto adversary = make_adversary(task.adversary, task.claim1, task.n, task.k, kind);
        const GameResult r = run_game(*solver, *adversary, GameConfig{task.n, task.k, kind});
        const std::string adversary_name = r.adversary;
        auto& sink = found[i];
        if (r.adversary_forfeit) {
            sink.push_back({task.n, task.k, "adversary_forfeit", 0, 1, task.solver,
                            adversary_name});
            return;
        }
        if (r.claim && !r.verified) {
            sink.push_back(
                {task.n, task.k, "unsound_claim", 1, 0, task.solver, adversary_name});
            return;
        }
        if (task.ceiling_check) {
            const long long ceiling =
                static_cast<long long>(task.k + 1) * (task.n - 1) + task.k;
            if (r.queries_used > ceiling)
                sink.push_back({task.n, task.k, "tournament_ceiling", ceiling, r.queries_used,
                                task.solver, adversary_name});
            return;
        }
        if (!r.verified) return;  // cap exhaustion: no claim, nothing to check
        const long long floor = kind == GameKind::Max ? bounds::rgl_max(task.n, task.k)
                                                      : bounds::thm1_lower(task.n, task.k);
        if (r.queries_used < floor)
            sink.push_back({task.n, task.k,
                            kind == GameKind::Max ? "rgl_max_lower" : "thm1_lower", floor,
                            r.queries_used, task.solver, adversary_name});
    });

    std::vector<BoundViolation> out;
    for (const auto& sink : found) out.insert(out.end(), sink.begin(), sink.end());
    return out;
}

}  // namespace liararena
