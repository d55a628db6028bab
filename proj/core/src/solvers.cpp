#include "liararena/solvers.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace liararena {

namespace {

std::vector<ElementId> all_elements(int n) {
    std::vector<ElementId> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace

Tournament::Tournament(std::vector<ElementId> contenders, int k, Goal goal)
    : pool_(std::move(contenders)), k_(k), goal_(goal) {
    if (pool_.empty()) throw std::invalid_argument("Tournament: empty contender pool");
    if (k < 0) throw std::invalid_argument("Tournament: negative lie budget");
    holder_ = pool_.front();
}

bool Tournament::finished() const { return challenger_ >= pool_.size(); }

Query Tournament::next_query() const {
    if (finished()) throw std::logic_error("Tournament::next_query: already finished");
    return Query(holder_, pool_[challenger_]);
}

void Tournament::feed(Answer a) {
    if (finished()) throw std::logic_error("Tournament::feed: already finished");
    ++queries_;
    // Query orientation is (holder, challenger): First means holder was
    // declared bigger. A pairing ends at k+1 declarations of "bigger"
    // (FindMax) or "smaller" (FindMin) for the same element.
    const bool holder_point = goal_ == Goal::FindMax ? a == Answer::First : a == Answer::Second;
    if (holder_point) {
        ++holder_score_;
    } else {
        ++challenger_score_;
    }
    if (holder_score_ > k_ || challenger_score_ > k_) {
        if (challenger_score_ > k_) holder_ = pool_[challenger_];
        ++challenger_;
        holder_score_ = 0;
        challenger_score_ = 0;
    }
}

ElementId Tournament::survivor() const {
    if (!finished()) throw std::logic_error("Tournament::survivor: not finished");
    return holder_;
}

TournamentMaxSolver::TournamentMaxSolver(int n, int k)
    : ladder_(all_elements(n), k, Tournament::Goal::FindMax) {}

SolverDecision TournamentMaxSolver::step(const Transcript& t) {
    while (consumed_ < t.size()) ladder_.feed(t.entries()[consumed_++].answer);
    if (ladder_.finished()) return Claim::max_only(ladder_.survivor());
    return ladder_.next_query();
}

NaiveMaxMinSolver::NaiveMaxMinSolver(int n, int k)
    : n_(n), k_(k), max_phase_(all_elements(n), k, Tournament::Goal::FindMax) {}

SolverDecision NaiveMaxMinSolver::step(const Transcript& t) {
    while (consumed_ < t.size()) {
        const Answer a = t.entries()[consumed_++].answer;
        if (!max_phase_.finished()) {
            max_phase_.feed(a);
        } else {
            min_phase_->feed(a);
        }
    }
    if (!max_phase_.finished()) return max_phase_.next_query();
    if (n_ == 1) return Claim::max_min(0, 0);
    if (!min_phase_) {
        std::vector<ElementId> rest;
        for (ElementId e = 0; e < n_; ++e)
            if (e != max_phase_.survivor()) rest.push_back(e);
        min_phase_.emplace(std::move(rest), k_, Tournament::Goal::FindMin);
    }
    if (!min_phase_->finished()) return min_phase_->next_query();
    return Claim::max_min(max_phase_.survivor(), min_phase_->survivor());
}

PairAndConquerSolver::PairAndConquerSolver(int n, int k) : n_(n), k_(k) {
    if (n < 1) throw std::invalid_argument("PairAndConquerSolver: n must be positive");
}

void PairAndConquerSolver::start_tournaments() {
    std::vector<ElementId> top_pool = winners_;
    std::vector<ElementId> bottom_pool = losers_;
    if (n_ % 2 == 1) {
        top_pool.push_back(n_ - 1);  // the unpaired element can still be either
        bottom_pool.push_back(n_ - 1);
    }
    max_phase_.emplace(std::move(top_pool), k_, Tournament::Goal::FindMax);
    min_phase_.emplace(std::move(bottom_pool), k_, Tournament::Goal::FindMin);
}

SolverDecision PairAndConquerSolver::step(const Transcript& t) {
    if (n_ == 1) return Claim::max_min(0, 0);
    const size_t pairings = static_cast<size_t>(n_ / 2);
    while (consumed_ < t.size()) {
        const Answer a = t.entries()[consumed_++].answer;
        if (pair_index_ < pairings) {
            if (a == Answer::First) {
                ++first_score_;
            } else {
                ++second_score_;
            }
            if (first_score_ > k_ || second_score_ > k_) {
                const ElementId a_elem = static_cast<ElementId>(2 * pair_index_);
                const ElementId b_elem = a_elem + 1;
                const bool first_won = first_score_ > k_;
                winners_.push_back(first_won ? a_elem : b_elem);
                losers_.push_back(first_won ? b_elem : a_elem);
                ++pair_index_;
                first_score_ = 0;
                second_score_ = 0;
                if (pair_index_ == pairings) start_tournaments();
            }
        } else if (!max_phase_->finished()) {
            max_phase_->feed(a);
        } else {
            min_phase_->feed(a);
        }
    }
    if (pair_index_ < pairings) {
        const ElementId a_elem = static_cast<ElementId>(2 * pair_index_);
        return Query(a_elem, a_elem + 1);
    }
    if (!max_phase_->finished()) return max_phase_->next_query();
    if (!min_phase_->finished()) return min_phase_->next_query();
    return Claim::max_min(max_phase_->survivor(), min_phase_->survivor());
}

RandomSolver::RandomSolver(int n, uint64_t seed, Oracle oracle)
    : n_(n), rng_(seed), oracle_(std::move(oracle)) {
    if (n < 1) throw std::invalid_argument("RandomSolver: n must be positive");
    if (!oracle_) throw std::invalid_argument("RandomSolver: null determinedness oracle");
}

SolverDecision RandomSolver::step(const Transcript& t) {
    if (auto claim = oracle_(t)) return *claim;
    if (n_ < 2) throw std::logic_error("RandomSolver: singleton game should be determined");
    // mt19937_64 output is standardized, so modulo keeps replays identical
    // across platforms; the slight bias is irrelevant for stress testing.
    const ElementId a = static_cast<ElementId>(rng_() % static_cast<uint64_t>(n_));
    ElementId b = static_cast<ElementId>(rng_() % static_cast<uint64_t>(n_ - 1));
    if (b >= a) ++b;
    return Query(a, b);
}

}  // namespace liararena
