#include "liararena/exact.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace liararena::exact {

bool within_guard(int n, int k) {
    if (n < 1 || n > 5 || k < 0 || k > 3) return false;
    if (n == 5 && k > 1) return false;
    return true;
}

void check_guard(int n, int k) {
    if (!within_guard(n, k))
        throw std::domain_error("exact solver guard: need n <= 5, k <= 3, and k <= 1 when n = 5");
}

namespace {

// Precomputed per-n scenario tables: all rank arrays in lex order, their
// claims, the per-(pair, direction) sets of scenarios an answer
// contradicts, and the scenario-index action of every relabeling.
struct ScenarioSpace {
    int n;
    std::vector<std::vector<int>> perms;
    std::vector<uint8_t> claim_max;
    std::vector<uint8_t> claim_min;
    std::vector<std::pair<int, int>> pairs;            // a < b
    std::vector<std::array<std::vector<uint16_t>, 2>> masks;  // [pair][0]: "a wins" false
    std::vector<std::vector<uint16_t>> relabel;        // [p][s] -> relabeled index

    explicit ScenarioSpace(int n_) : n(n_) {
        std::map<std::vector<int>, uint16_t> index;
        for_each_scenario(n, [&](const std::vector<int>& rank) {
            index.emplace(rank, static_cast<uint16_t>(perms.size()));
            perms.push_back(rank);
        });
        const size_t count = perms.size();

        claim_max.resize(count);
        claim_min.resize(count);
        for (size_t s = 0; s < count; ++s) {
            const auto& r = perms[s];
            claim_max[s] = static_cast<uint8_t>(std::max_element(r.begin(), r.end()) - r.begin());
            claim_min[s] = static_cast<uint8_t>(std::min_element(r.begin(), r.end()) - r.begin());
        }

        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        masks.resize(pairs.size());
        for (size_t p = 0; p < pairs.size(); ++p) {
            const auto [a, b] = pairs[p];
            for (size_t s = 0; s < count; ++s) {
                if (perms[s][static_cast<size_t>(a)] < perms[s][static_cast<size_t>(b)])
                    masks[p][0].push_back(static_cast<uint16_t>(s));
                else
                    masks[p][1].push_back(static_cast<uint16_t>(s));
            }
        }

        relabel.assign(count, std::vector<uint16_t>(count));
        std::vector<int> relabeled(static_cast<size_t>(n));
        for (size_t p = 0; p < count; ++p) {
            const auto& pi = perms[p];  // element e gets new label pi[e]
            for (size_t s = 0; s < count; ++s) {
                for (int e = 0; e < n; ++e)
                    relabeled[static_cast<size_t>(pi[static_cast<size_t>(e)])] =
                        perms[s][static_cast<size_t>(e)];
                relabel[p][s] = index.at(relabeled);
            }
        }
    }

    static const ScenarioSpace& get(int n) {
        static std::mutex mu;
        static std::map<int, std::unique_ptr<ScenarioSpace>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = cache[n];
        if (!slot) slot = std::make_unique<ScenarioSpace>(n);
        return *slot;
    }

    // Index of the increment mask for a declared winner/loser.
    const std::vector<uint16_t>& mask_for(ElementId winner, ElementId loser) const {
        const ElementId lo = std::min(winner, loser);
        const ElementId hi = std::max(winner, loser);
        const size_t pair_idx = static_cast<size_t>(
            std::find(pairs.begin(), pairs.end(), std::make_pair(lo, hi)) - pairs.begin());
        return masks[pair_idx][winner == lo ? 0 : 1];
    }
};

int claim_code(const ScenarioSpace& space, GameKind kind, size_t s) {
    if (kind == GameKind::Max) return space.claim_max[s];
    return space.claim_max[s] * space.n + space.claim_min[s];
}

void apply_mask(std::vector<uint8_t>& vec, const std::vector<uint16_t>& mask, int k) {
    for (const uint16_t idx : mask) {
        uint8_t& v = vec[idx];
        if (v == kDead) continue;
        ++v;
        if (v > k) v = kDead;
    }
}

std::vector<uint8_t> canonical_of(const ScenarioSpace& space, const std::vector<uint8_t>& vec) {
    std::vector<uint8_t> best = vec;  // relabel[0] is the identity
    const size_t count = vec.size();
    for (size_t p = 1; p < count; ++p) {
        const auto& tab = space.relabel[p];
        size_t i = 0;
        while (i < count && vec[tab[i]] == best[i]) ++i;
        if (i < count && vec[tab[i]] < best[i])
            for (size_t j = 0; j < count; ++j) best[j] = vec[tab[j]];
    }
    return best;
}

// Packed memo key: values 0..k plus dead fit in 2 bits for k <= 2 and 3
// bits for k = 3; with the guard (120 scenarios only at k <= 1) every
// state fits 256 bits.
struct PackedKey {
    std::array<uint64_t, 4> words{};
    friend bool operator==(const PackedKey&, const PackedKey&) = default;
    friend auto operator<=>(const PackedKey&, const PackedKey&) = default;
};

struct PackedKeyHash {
    size_t operator()(const PackedKey& key) const {
        uint64_t h = 0x9E3779B97F4A7C15ull;
        for (uint64_t w : key.words) {
            h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        }
        return static_cast<size_t>(h);
    }
};

PackedKey pack(const std::vector<uint8_t>& vec, int k, int bits) {
    PackedKey key;
    size_t bit = 0;
    for (const uint8_t raw : vec) {
        const uint64_t v = raw == kDead ? static_cast<uint64_t>(k + 1) : raw;
        key.words[bit >> 6] |= v << (bit & 63);
        // values never straddle a word boundary: bits divides 64 evenly
        // only for 2; handle 3-bit straddle explicitly
        if ((bit & 63) + static_cast<size_t>(bits) > 64)
            key.words[(bit >> 6) + 1] |= v >> (64 - (bit & 63));
        bit += static_cast<size_t>(bits);
    }
    return key;
}

class MinimaxSolver {
public:
    MinimaxSolver(int n, int k, GameKind kind, const SolveOptions& opts)
        : space_(ScenarioSpace::get(n)),
          k_(k),
          kind_(kind),
          opts_(opts),
          depth_cap_(4 * (k + 1) * n),
          bits_(k <= 2 ? 2 : 3) {}

    int solve() {
        std::vector<uint8_t> start(space_.perms.size(), 0);
        if (opts_.canonicalize) start = canonical_of(space_, start);
        return value(start, 0);
    }

    SolveStats stats() const { return stats_; }

private:
    bool determined(const std::vector<uint8_t>& vec) const {
        int claim = -1;
        for (size_t s = 0; s < vec.size(); ++s) {
            if (vec[s] == kDead) continue;
            const int c = claim_code(space_, kind_, s);
            if (claim == -1) {
                claim = c;
            } else if (c != claim) {
                return false;
            }
        }
        return claim != -1;
    }

    bool any_alive(const std::vector<uint8_t>& vec, const std::vector<uint16_t>& mask) const {
        for (const uint16_t idx : mask)
            if (vec[idx] != kDead) return true;
        return false;
    }

    int value(const std::vector<uint8_t>& vec, int depth) {
        ++stats_.nodes_visited;
        const PackedKey key = pack(vec, k_, bits_);
        if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (determined(vec)) {
            memo_.emplace(key, 0);
            ++stats_.states_memoized;
            return 0;
        }
        if (depth >= depth_cap_)
            throw std::logic_error("exact solver: depth cap exceeded (search-model bug)");

        int best = INT_MAX;
        std::vector<std::pair<PackedKey, PackedKey>> seen;
        for (size_t p = 0; p < space_.pairs.size(); ++p) {
            // Skip pairs every alive scenario agrees on: the adversary
            // would just confirm the consensus and give nothing away.
            if (!any_alive(vec, space_.masks[p][0]) || !any_alive(vec, space_.masks[p][1]))
                continue;

            std::vector<uint8_t> child_a = vec;
            apply_mask(child_a, space_.masks[p][0], k_);
            std::vector<uint8_t> child_b = vec;
            apply_mask(child_b, space_.masks[p][1], k_);
            if (opts_.canonicalize) {
                child_a = canonical_of(space_, child_a);
                child_b = canonical_of(space_, child_b);
            }
            PackedKey key_a = pack(child_a, k_, bits_);
            PackedKey key_b = pack(child_b, k_, bits_);
            if (key_b < key_a) {
                std::swap(key_a, key_b);
                std::swap(child_a, child_b);
            }
            if (std::find(seen.begin(), seen.end(), std::make_pair(key_a, key_b)) != seen.end())
                continue;
            seen.emplace_back(key_a, key_b);

            const int worst = std::max(value(child_a, depth + 1), value(child_b, depth + 1));
            best = std::min(best, worst);
        }
        if (best == INT_MAX)  // an undetermined state always has a disagreeing pair
            throw std::logic_error("exact solver: undetermined state with no usable query");
        const int result = 1 + best;
        memo_.emplace(key, static_cast<uint8_t>(result));
        ++stats_.states_memoized;
        return result;
    }

    const ScenarioSpace& space_;
    int k_;
    GameKind kind_;
    SolveOptions opts_;
    int depth_cap_;
    int bits_;
    SolveStats stats_;
    std::unordered_map<PackedKey, uint8_t, PackedKeyHash> memo_;
};

}  // namespace

GameValueState initial_state(int n, int k, GameKind kind) {
    check_guard(n, k);
    const auto& space = ScenarioSpace::get(n);
    return GameValueState{n, k, kind, std::vector<uint8_t>(space.perms.size(), 0)};
}

GameValueState step(const GameValueState& state, const Query& q, Answer ans) {
    if (q.a >= state.n || q.b >= state.n)
        throw std::invalid_argument("exact::step: query element outside ground set");
    const auto& space = ScenarioSpace::get(state.n);
    GameValueState next = state;
    apply_mask(next.lie_vec, space.mask_for(q.winner(ans), q.loser(ans)), state.k);
    return next;
}

int alive_count(const GameValueState& state) {
    int alive = 0;
    for (const uint8_t v : state.lie_vec)
        if (v != kDead) ++alive;
    return alive;
}

bool is_determined(const GameValueState& state) {
    const auto& space = ScenarioSpace::get(state.n);
    int claim = -1;
    for (size_t s = 0; s < state.lie_vec.size(); ++s) {
        if (state.lie_vec[s] == kDead) continue;
        const int c = claim_code(space, state.kind, s);
        if (claim == -1) {
            claim = c;
        } else if (c != claim) {
            return false;
        }
    }
    return claim != -1;
}

std::vector<uint8_t> canonical_key(const GameValueState& state) {
    return canonical_of(ScenarioSpace::get(state.n), state.lie_vec);
}

int game_value(int n, int k, GameKind kind, const SolveOptions& opts, SolveStats* stats) {
    check_guard(n, k);
    MinimaxSolver solver(n, k, kind, opts);
    const int v = solver.solve();
    if (stats) *stats = solver.stats();
    return v;
}

}  // namespace liararena::exact
