#pragma once

// Grid-sweep and bound-verification machinery behind the CLI: named
// solver/adversary registries, deterministic seeded sweeps over
// (n, k, solver, adversary) grids with a worker pool, and the checks
// that no strategy ever beats the closed-form bounds.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liararena/arena.hpp"

namespace liararena {

std::vector<std::string> registered_solvers();
std::vector<std::string> registered_adversaries();
bool solver_supports(const std::string& name, GameKind kind);

// Throws std::invalid_argument for unknown names or unsupported kinds.
std::unique_ptr<Solver> make_solver(const std::string& name, int n, int k, GameKind kind,
                                    uint64_t seed, int enum_cap = kDefaultEnumCap);
std::unique_ptr<Adversary> make_adversary(const std::string& name, bool claim1, int n, int k,
                                          GameKind kind, int enum_cap = kDefaultEnumCap);

// Worker-pool width: LIAR_ARENA_THREADS when set (clamped to >= 1),
// otherwise the hardware concurrency.
unsigned arena_threads();

enum class SweepFormat { Csv, Json };

struct SweepConfig {
    int n_min = 2;
    int n_max = 2;
    int k_min = 0;
    int k_max = 0;
    std::vector<std::string> solvers;      // empty: all supporting `kind`
    std::vector<std::string> adversaries;  // empty: all registered
    bool claim1 = false;
    GameKind kind = GameKind::Max;
    uint64_t seed = 0;
    std::string output;  // empty: stdout
    SweepFormat format = SweepFormat::Csv;
};

// Runs the full grid; rows come back sorted by (n, k, solver, adversary)
// regardless of the worker pool, so output bytes are reproducible.
std::vector<GameResult> run_sweep(const SweepConfig& cfg);

// CSV rows "n,k,solver,adversary,kind,queries,verified" (verified 1/0).
std::string sweep_to_csv(const std::vector<GameResult>& rows);
// JSON array of GameResult objects.
std::string sweep_to_json(const std::vector<GameResult>& rows);

// The spec'd GameResult wire object {n,k,kind,solver,adversary,queries,
// verified,forfeit} as a JSON text, and its inverse.
std::string result_to_json(const GameResult& r);
GameResult result_from_json(const std::string& text);

struct BoundViolation {
    int n = 0;
    int k = 0;
    std::string bound;  // which bound / check
    long long expected = 0;
    long long observed = 0;
    std::string solver;
    std::string adversary;
};

std::string to_string(const BoundViolation& v);

// Exact-solver mode: game_value equalities (max: (k+1)n-1; maxmin k=0:
// ceil(3n/2)-2) and inequalities (maxmin k>=1: >= thm1_lower).
std::vector<BoundViolation> verify_bounds_exact(GameKind kind, int n_max, int k_min, int k_max);

// Adversary mode: every registered solver of the kind plus `trials`
// seeded random solvers plays against the claim1-wrapped paper adversary;
// a verified claim below the bound, a soundness failure, or an adversary
// forfeit is a violation. For max games the tournament ceiling
// (k+1)(n-1)+k is also checked against every adversary.
std::vector<BoundViolation> verify_bounds_adversary(GameKind kind, int n_max, int k_max,
                                                    int trials, uint64_t seed = 0);

}  // namespace liararena
