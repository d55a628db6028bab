#pragma once

// Query-asking strategies. The tournament repeats one pairing until an
// element is declared bigger (or smaller) k+1 times, so a pairing's
// outcome can never be the product of lies alone; the max+min solvers
// compose tournaments. The random solver exists to stress-test the
// adversary lower bounds.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "liararena/core.hpp"

namespace liararena {

// Either the next query to ask, or a final claim.
using SolverDecision = std::variant<Query, Claim>;

class Solver {
public:
    virtual ~Solver() = default;
    // t is the full history; every entry is an answer to one of this
    // solver's earlier queries, in order.
    virtual SolverDecision step(const Transcript& t) = 0;
    virtual std::string name() const = 0;
};

// Single-elimination ladder over `contenders`, processed left to right.
// Each pairing re-asks the same comparison until one element has been
// declared bigger (FindMax) or smaller (FindMin) k+1 times, gross count;
// the other element leaves the pool.
class Tournament {
public:
    enum class Goal : uint8_t { FindMax, FindMin };

    Tournament(std::vector<ElementId> contenders, int k, Goal goal);

    bool finished() const;
    Query next_query() const;  // requires !finished()
    void feed(Answer a);       // answer to the last next_query()
    ElementId survivor() const;  // requires finished()
    int queries_asked() const { return queries_; }

private:
    std::vector<ElementId> pool_;
    int k_;
    Goal goal_;
    size_t challenger_ = 1;  // pool_[challenger_] faces the current holder
    ElementId holder_;
    int holder_score_ = 0;
    int challenger_score_ = 0;
    int queries_ = 0;
};

// Max game: tournament over the whole ground set. Never exceeds
// (k+1)(n-1) + k queries against any adversary that keeps some scenario
// within the lie budget.
class TournamentMaxSolver : public Solver {
public:
    TournamentMaxSolver(int n, int k);
    SolverDecision step(const Transcript& t) override;
    std::string name() const override { return "tournament-max"; }

private:
    Tournament ladder_;
    size_t consumed_ = 0;
};

// MaxMin baseline: tournament-max over everything, then tournament-min
// over the rest. Deliberately non-optimal.
class NaiveMaxMinSolver : public Solver {
public:
    NaiveMaxMinSolver(int n, int k);
    SolverDecision step(const Transcript& t) override;
    std::string name() const override { return "naive-maxmin"; }

private:
    int n_;
    int k_;
    Tournament max_phase_;
    std::optional<Tournament> min_phase_;
    size_t consumed_ = 0;
};

// MaxMin: pair elements up, settle each pairing by first-to-k+1 wins
// (the majority of at most 2k+1 repeats), then tournament-max over the
// winners and tournament-min over the losers. An odd element joins both
// pools. Matches the lie-free optimum ceil(3n/2)-2 at k=0 for even n.
class PairAndConquerSolver : public Solver {
public:
    PairAndConquerSolver(int n, int k);
    SolverDecision step(const Transcript& t) override;
    std::string name() const override { return "pair-and-conquer"; }

private:
    void start_tournaments();

    int n_;
    int k_;
    size_t pair_index_ = 0;
    int first_score_ = 0;
    int second_score_ = 0;
    std::vector<ElementId> winners_;
    std::vector<ElementId> losers_;
    std::optional<Tournament> max_phase_;
    std::optional<Tournament> min_phase_;
    size_t consumed_ = 0;
};

// Asks uniformly random valid queries and claims as soon as the supplied
// determinedness oracle says the game is decided. Deterministic for a
// fixed seed.
class RandomSolver : public Solver {
public:
    using Oracle = std::function<std::optional<Claim>(const Transcript&)>;

    RandomSolver(int n, uint64_t seed, Oracle oracle);
    SolverDecision step(const Transcript& t) override;
    std::string name() const override { return "random"; }

private:
    int n_;
    std::mt19937_64 rng_;
    Oracle oracle_;
};

}  // namespace liararena
