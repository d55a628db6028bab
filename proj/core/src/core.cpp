#include "liararena/core.hpp"

#include <algorithm>
#include <numeric>

namespace liararena {

std::string to_string(GameKind kind) {
    return kind == GameKind::Max ? "max" : "maxmin";
}

GameKind game_kind_from_string(const std::string& s) {
    if (s == "max") return GameKind::Max;
    if (s == "maxmin") return GameKind::MaxMin;
    throw std::invalid_argument("unknown game kind: " + s);
}

Scenario::Scenario(std::vector<int> rank) : rank_(std::move(rank)) {
    std::vector<bool> seen(rank_.size(), false);
    for (int r : rank_) {
        if (r < 0 || r >= static_cast<int>(rank_.size()) || seen[static_cast<size_t>(r)])
            throw std::invalid_argument("Scenario: rank is not a permutation of 0..n-1");
        seen[static_cast<size_t>(r)] = true;
    }
}

Scenario Scenario::identity(int n) {
    std::vector<int> rank(static_cast<size_t>(n));
    std::iota(rank.begin(), rank.end(), 0);
    return Scenario(std::move(rank));
}

Scenario Scenario::from_order(const std::vector<ElementId>& biggest_first) {
    const int n = static_cast<int>(biggest_first.size());
    std::vector<int> rank(static_cast<size_t>(n), -1);
    for (int pos = 0; pos < n; ++pos) {
        const ElementId e = biggest_first[static_cast<size_t>(pos)];
        if (e < 0 || e >= n) throw std::invalid_argument("Scenario::from_order: element out of range");
        rank.at(static_cast<size_t>(e)) = n - 1 - pos;
    }
    return Scenario(std::move(rank));
}

ElementId Scenario::max_element() const {
    return static_cast<ElementId>(std::max_element(rank_.begin(), rank_.end()) - rank_.begin());
}

ElementId Scenario::min_element() const {
    return static_cast<ElementId>(std::min_element(rank_.begin(), rank_.end()) - rank_.begin());
}

Transcript::Transcript(int n) : n_(n) {
    if (n <= 0) throw std::invalid_argument("Transcript: ground-set size must be positive");
}

void Transcript::push(const Query& q, Answer ans) {
    if (q.a >= n_ || q.b >= n_)
        throw std::invalid_argument("Transcript::push: query element outside ground set");
    entries_.push_back(TranscriptEntry{q, ans});
}

std::string to_string(const Claim& c) {
    if (c.min_elem < 0) return std::to_string(c.max_elem);
    return "(" + std::to_string(c.max_elem) + "," + std::to_string(c.min_elem) + ")";
}

bool answer_truth(const Query& q, Answer ans, const Scenario& s) {
    return s.bigger(q.winner(ans), q.loser(ans));
}

int lie_count(const Transcript& t, const Scenario& s) {
    int lies = 0;
    for (const auto& e : t.entries())
        if (!answer_truth(e.query, e.answer, s)) ++lies;
    return lies;
}

Claim target_of(const Scenario& s, GameKind kind) {
    if (kind == GameKind::Max) return Claim::max_only(s.max_element());
    return Claim::max_min(s.max_element(), s.min_element());
}

void for_each_scenario(int n, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> rank(static_cast<size_t>(n));
    std::iota(rank.begin(), rank.end(), 0);
    do {
        fn(rank);
    } while (std::next_permutation(rank.begin(), rank.end()));
}

namespace {

// lie_count against a raw rank array, without constructing a Scenario.
int lie_count_raw(const Transcript& t, const std::vector<int>& rank) {
    int lies = 0;
    for (const auto& e : t.entries()) {
        const ElementId w = e.query.winner(e.answer);
        const ElementId l = e.query.loser(e.answer);
        if (rank[static_cast<size_t>(w)] < rank[static_cast<size_t>(l)]) ++lies;
    }
    return lies;
}

void check_enum_cap(int n, int enum_cap) {
    if (n > enum_cap)
        throw std::domain_error("scenario enumeration rejected: n=" + std::to_string(n) +
                                " exceeds cap " + std::to_string(enum_cap) +
                                " (use the comparison-graph criteria instead)");
}

}  // namespace

std::set<Claim> consistent_scenarios(const Transcript& t, int budget, GameKind kind,
                                     int enum_cap) {
    if (budget < 0) throw std::invalid_argument("consistent_scenarios: negative budget");
    check_enum_cap(t.n(), enum_cap);
    std::set<Claim> claims;
    for_each_scenario(t.n(), [&](const std::vector<int>& rank) {
        if (lie_count_raw(t, rank) > budget) return;
        const auto mx = std::max_element(rank.begin(), rank.end()) - rank.begin();
        if (kind == GameKind::Max) {
            claims.insert(Claim::max_only(static_cast<ElementId>(mx)));
        } else {
            const auto mn = std::min_element(rank.begin(), rank.end()) - rank.begin();
            claims.insert(Claim::max_min(static_cast<ElementId>(mx), static_cast<ElementId>(mn)));
        }
    });
    return claims;
}

bool satisfiable(const Transcript& t, int budget, int enum_cap) {
    if (budget < 0) throw std::invalid_argument("satisfiable: negative budget");
    check_enum_cap(t.n(), enum_cap);
    bool found = false;
    // No early-exit hook in for_each_scenario; n <= 8 keeps this cheap
    // and callers use the acyclicity fast path first anyway.
    for_each_scenario(t.n(), [&](const std::vector<int>& rank) {
        if (!found && lie_count_raw(t, rank) <= budget) found = true;
    });
    return found;
}

}  // namespace liararena
