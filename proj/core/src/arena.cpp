#include "liararena/arena.hpp"

#include <sstream>

#include "liararena/graph.hpp"

namespace liararena {

bool verify_claim(const Transcript& t, const Claim& claim, int k, GameKind kind, int enum_cap) {
    if (t.n() <= enum_cap) {
        const auto claims = consistent_scenarios(t, k, kind, enum_cap);
        return claims.size() == 1 && *claims.begin() == claim;
    }
    const auto g = ComparisonGraph::from_transcript(t);  // throws on inconsistent large n
    const auto c = g.determined(k, kind);
    return c.has_value() && *c == claim;
}

std::optional<Claim> determined_claim(const Transcript& t, int k, GameKind kind, int enum_cap) {
    const auto g = ComparisonGraph::from_transcript(t);
    if (g.is_consistent()) return g.determined(k, kind);
    const auto claims = consistent_scenarios(t, k, kind, enum_cap);
    if (claims.size() == 1) return *claims.begin();
    return std::nullopt;
}

namespace {

// Satisfiability probe with a witness cache: the paper's adversaries keep
// one scenario within budget for the whole game, so re-checking the last
// witness almost always avoids enumeration.
class SatisfiabilityWatch {
public:
    SatisfiabilityWatch(int k, int enum_cap) : k_(k), enum_cap_(enum_cap) {}

    bool check(const Transcript& t) {
        if (witness_ && lie_count(t, *witness_) <= k_) return true;
        witness_.reset();
        const auto g = ComparisonGraph::from_transcript(t);
        if (g.is_consistent()) {
            // Any topological completion is lie-free; no need to build it
            // until an inconsistent answer shows up.
            return true;
        }
        bool found = false;
        std::optional<std::vector<int>> rank_found;
        if (t.n() > enum_cap_)
            throw std::domain_error("satisfiability check: inconsistent transcript with n above "
                                    "the enumeration cap");
        for_each_scenario(t.n(), [&](const std::vector<int>& rank) {
            if (found) return;
            Scenario s(rank);
            if (lie_count(t, s) <= k_) {
                found = true;
                rank_found = rank;
            }
        });
        if (found) witness_ = Scenario(*rank_found);
        return found;
    }

private:
    int k_;
    int enum_cap_;
    std::optional<Scenario> witness_;
};

}  // namespace

GameResult run_game(Solver& solver, Adversary& adversary, const GameConfig& cfg) {
    if (cfg.n < 1 || cfg.k < 0) throw std::invalid_argument("run_game: n >= 1, k >= 0 required");
    const int cap = cfg.query_cap > 0 ? cfg.query_cap : default_query_cap(cfg.n, cfg.k);

    GameResult result;
    result.n = cfg.n;
    result.k = cfg.k;
    result.kind = cfg.kind;
    result.solver = solver.name();
    result.adversary = adversary.name();
    result.transcript = Transcript(cfg.n);

    SatisfiabilityWatch sat(cfg.k, cfg.enum_cap);
    Transcript& t = result.transcript;

    for (;;) {
        const SolverDecision decision = solver.step(t);
        if (std::holds_alternative<Claim>(decision)) {
            result.claim = std::get<Claim>(decision);
            result.verified = verify_claim(t, *result.claim, cfg.k, cfg.kind, cfg.enum_cap);
            break;
        }
        if (static_cast<int>(t.size()) >= cap) break;  // cap exhausted: no claim
        const Query q = std::get<Query>(decision);
        Answer a;
        try {
            a = adversary.answer(t, q);
        } catch (const AdversaryForfeit&) {
            result.adversary_forfeit = true;
            break;
        }
        t.push(q, a);
        if (!sat.check(t)) {
            result.adversary_forfeit = true;
            break;
        }
    }
    result.queries_used = static_cast<int>(t.size());
    return result;
}

std::string dump_transcript(const Transcript& t) {
    std::ostringstream os;
    for (const auto& e : t.entries())
        os << e.query.a << " " << e.query.b << " " << e.query.winner(e.answer) << "\n";
    return os.str();
}

}  // namespace liararena
