#pragma once

// Ground-set, query, answer, scenario and transcript types for
// comparison games where up to k answers may be lies, plus the
// scenario-enumeration primitives everything else is checked against.

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace liararena {

using ElementId = int;

enum class Answer : uint8_t { First, Second };

enum class GameKind : uint8_t { Max, MaxMin };

std::string to_string(GameKind kind);
GameKind game_kind_from_string(const std::string& s);

// One pairwise comparison. Comparing an element to itself is rejected at
// construction; the counting arguments assume every query touches two
// distinct elements.
struct Query {
    ElementId a;
    ElementId b;

    Query(ElementId a_, ElementId b_) : a(a_), b(b_) {
        if (a < 0 || b < 0) throw std::invalid_argument("Query: negative element id");
        if (a == b) throw std::invalid_argument("Query: self-comparison is not a valid query");
    }

    ElementId winner(Answer ans) const { return ans == Answer::First ? a : b; }
    ElementId loser(Answer ans) const { return ans == Answer::First ? b : a; }

    friend bool operator==(const Query&, const Query&) = default;
};

// A total order on n elements: rank[e] is the position of element e,
// higher rank = bigger element. Ground truth against which lies count.
class Scenario {
public:
    explicit Scenario(std::vector<int> rank);

    // rank[e] = e, so element n-1 is the biggest.
    static Scenario identity(int n);
    // Build from an explicit order, biggest element first.
    static Scenario from_order(const std::vector<ElementId>& biggest_first);

    int n() const { return static_cast<int>(rank_.size()); }
    int rank_of(ElementId e) const { return rank_.at(static_cast<size_t>(e)); }
    bool bigger(ElementId a, ElementId b) const { return rank_of(a) > rank_of(b); }
    ElementId max_element() const;
    ElementId min_element() const;
    const std::vector<int>& rank() const { return rank_; }

    friend bool operator==(const Scenario&, const Scenario&) = default;

private:
    std::vector<int> rank_;
};

struct TranscriptEntry {
    Query query;
    Answer answer;
};

// Ordered history of (query, answer) pairs over a ground set of size n.
// Repeated identical queries are legal and each occurrence counts.
class Transcript {
public:
    explicit Transcript(int n);

    void push(const Query& q, Answer ans);
    int n() const { return n_; }
    size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::vector<TranscriptEntry>& entries() const { return entries_; }
    const TranscriptEntry& back() const { return entries_.back(); }

private:
    int n_;
    std::vector<TranscriptEntry> entries_;
};

// What a solver may claim: the maximum element, or the (max, min) pair.
// min_elem is -1 in Max games.
struct Claim {
    ElementId max_elem = -1;
    ElementId min_elem = -1;

    static Claim max_only(ElementId m) { return Claim{m, -1}; }
    static Claim max_min(ElementId mx, ElementId mn) { return Claim{mx, mn}; }

    friend auto operator<=>(const Claim&, const Claim&) = default;
};

std::string to_string(const Claim& c);

// True iff the declared winner has strictly higher rank under s.
bool answer_truth(const Query& q, Answer ans, const Scenario& s);

// Number of entries of t that are false under s; multiplicity counts.
int lie_count(const Transcript& t, const Scenario& s);

// Evaluates the game target on a scenario.
Claim target_of(const Scenario& s, GameKind kind);

// Default cap for n!-scenario enumeration (8! = 40320 scenarios).
inline constexpr int kDefaultEnumCap = 8;

// Calls fn with every rank permutation of [0,n) in lexicographic order.
// The vector passed to fn is reused between calls.
void for_each_scenario(int n, const std::function<void(const std::vector<int>&)>& fn);

// All claims achievable by a scenario lying at most `budget` times against t.
// The game is determined iff the result is a singleton. Throws
// std::domain_error when n exceeds enum_cap; callers must use the
// graph degree criterion instead at that size.
std::set<Claim> consistent_scenarios(const Transcript& t, int budget, GameKind kind,
                                     int enum_cap = kDefaultEnumCap);

// True iff some scenario has lie_count(t, s) <= budget. Fast path: a
// transcript whose comparison graph is acyclic is satisfiable with zero
// lies, so enumeration only runs on inconsistent transcripts.
bool satisfiable(const Transcript& t, int budget, int enum_cap = kDefaultEnumCap);

}  // namespace liararena
