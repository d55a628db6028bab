#pragma once

// Exhaustive minimax oracle for tiny games: the exact worst-case optimal
// query count, computed over the alive-scenario lie-count vector. States
// are memoized under a canonical key that is invariant under relabeling
// the ground set.

#include <array>
#include <cstdint>
#include <vector>

#include "liararena/core.hpp"

namespace liararena::exact {

// State-space guard: n <= 5, k <= 3, and n = 5 only with k <= 1.
bool within_guard(int n, int k);
void check_guard(int n, int k);

inline constexpr uint8_t kDead = 0xFF;

// lie_vec[i] is the lie count of the implicit transcript against the
// i-th scenario (rank arrays in lexicographic order), or kDead once it
// exceeds k.
struct GameValueState {
    int n = 0;
    int k = 0;
    GameKind kind = GameKind::Max;
    std::vector<uint8_t> lie_vec;
};

GameValueState initial_state(int n, int k, GameKind kind);

// Applies one answer: every scenario under which it is false gets +1,
// and entries above k become kDead. The result may be unsatisfiable
// (all dead); game search prunes such answers on the adversary side.
GameValueState step(const GameValueState& state, const Query& q, Answer ans);

int alive_count(const GameValueState& state);

// True iff every alive scenario yields the same claim.
bool is_determined(const GameValueState& state);

// Lexicographically minimal lie_vec over all n! relabelings of the
// ground set; equal exactly for states that are relabelings of each
// other, which makes it a sound memo key.
std::vector<uint8_t> canonical_key(const GameValueState& state);

struct SolveOptions {
    bool canonicalize = true;  // off: memo on raw vectors (test hook)
};

struct SolveStats {
    size_t states_memoized = 0;
    size_t nodes_visited = 0;
};

// Min over solver strategies of max over adversary answers of queries
// until the game is determined. Depth-capped at 4(k+1)n; the cap tripping
// indicates a search-model bug and throws.
int game_value(int n, int k, GameKind kind, const SolveOptions& opts = {},
               SolveStats* stats = nullptr);

}  // namespace liararena::exact
