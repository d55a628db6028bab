#pragma once

// Game loop binding one solver to one adversary. The arena, not the
// solver, is the authority on determinedness: it verifies every claim
// against all scenarios within the lie budget and checks after every
// answer that the adversary has not painted itself into an unsatisfiable
// transcript.

#include <optional>
#include <string>

#include "liararena/adversaries.hpp"
#include "liararena/core.hpp"
#include "liararena/solvers.hpp"

namespace liararena {

struct GameConfig {
    int n;
    int k;
    GameKind kind;
    int query_cap = 0;  // 0 -> default_query_cap(n, k)
    int enum_cap = kDefaultEnumCap;
};

// Generous enough for every solver in scope; stops runaway strategies.
inline int default_query_cap(int n, int k) { return 10 * (k + 1) * n; }

struct GameResult {
    int n = 0;
    int k = 0;
    GameKind kind = GameKind::Max;
    std::string solver;
    std::string adversary;
    int queries_used = 0;
    std::optional<Claim> claim;
    bool verified = false;
    bool adversary_forfeit = false;
    Transcript transcript{1};
};

// True iff `claim` is the only claim compatible with some scenario lying
// at most k times against t. Enumeration is authoritative up to the cap;
// beyond it the degree criterion handles consistent transcripts and
// inconsistent ones are rejected.
bool verify_claim(const Transcript& t, const Claim& claim, int k, GameKind kind,
                  int enum_cap = kDefaultEnumCap);

// The unique within-budget claim, if the game is determined. Uses the
// degree fast path on consistent transcripts and falls back to scenario
// enumeration otherwise.
std::optional<Claim> determined_claim(const Transcript& t, int k, GameKind kind,
                                      int enum_cap = kDefaultEnumCap);

// Alternates solver decisions and adversary answers until the solver
// claims or the query cap is hit. Cap exhaustion leaves claim empty and
// verified false; an adversary that breaks satisfiability (or throws
// AdversaryForfeit) is flagged immediately.
GameResult run_game(Solver& solver, Adversary& adversary, const GameConfig& cfg);

// Transcript dump, one "a b winner" line per entry (winner is the element
// declared bigger).
std::string dump_transcript(const Transcript& t);

}  // namespace liararena
