#include "liararena/adversaries.hpp"

#include <algorithm>
#include <cassert>

#include "liararena/graph.hpp"

namespace liararena {

TruthfulAdversary::TruthfulAdversary(Scenario truth) : truth_(std::move(truth)) {}

Answer TruthfulAdversary::peek(const Query& q) const {
    return truth_.bigger(q.a, q.b) ? Answer::First : Answer::Second;
}

Answer TruthfulAdversary::answer(const Transcript&, const Query& q) { return peek(q); }

ConsistentAdversary::ConsistentAdversary(Scenario priority) : priority_(std::move(priority)) {}

namespace {
Scenario descending_priority(int n) {
    std::vector<ElementId> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    return Scenario::from_order(order);
}
}  // namespace

ConsistentAdversary::ConsistentAdversary(int n) : priority_(descending_priority(n)) {}

Answer ConsistentAdversary::peek(const Query& q) const {
    return priority_.bigger(q.a, q.b) ? Answer::First : Answer::Second;
}

Answer ConsistentAdversary::answer(const Transcript&, const Query& q) { return peek(q); }

TopBottomAdversary::TopBottomAdversary(int n) : n_(n) {
    if (n <= 0) throw std::invalid_argument("TopBottomAdversary: n must be positive");
    membership_.assign(static_cast<size_t>(n), Membership::Unassigned);
}

int TopBottomAdversary::position(ElementId e) const {
    const auto& order = membership(e) == Membership::Top ? top_order_ : bottom_order_;
    const auto it = std::find(order.begin(), order.end(), e);
    assert(it != order.end());
    return static_cast<int>(it - order.begin());
}

ElementId TopBottomAdversary::decide_winner(const Query& q) const {
    const Membership ma = membership(q.a);
    const Membership mb = membership(q.b);
    if (ma == Membership::Unassigned && mb == Membership::Unassigned)
        return q.a;  // first-named fresh element wins
    if (ma == Membership::Unassigned)
        return mb == Membership::Top ? q.b : q.a;  // fresh loses to TOP, beats BOTTOM
    if (mb == Membership::Unassigned)
        return ma == Membership::Top ? q.a : q.b;
    if (ma != mb) return ma == Membership::Top ? q.a : q.b;
    // same block: internal order, biggest first
    return position(q.a) < position(q.b) ? q.a : q.b;
}

Answer TopBottomAdversary::peek(const Query& q) const {
    return decide_winner(q) == q.a ? Answer::First : Answer::Second;
}

void TopBottomAdversary::assign(ElementId e, Membership m) {
    membership_[static_cast<size_t>(e)] = m;
    if (m == Membership::Top) {
        top_order_.push_back(e);  // bottom of the TOP block
    } else {
        bottom_order_.insert(bottom_order_.begin(), e);  // top of the BOTTOM block
    }
}

Answer TopBottomAdversary::answer(const Transcript&, const Query& q) {
    const ElementId w = decide_winner(q);
    const ElementId l = w == q.a ? q.b : q.a;
    if (membership(w) == Membership::Unassigned) assign(w, Membership::Top);
    if (membership(l) == Membership::Unassigned) assign(l, Membership::Bottom);
    return w == q.a ? Answer::First : Answer::Second;
}

Scenario TopBottomAdversary::implied_scenario() const {
    // TOP block above every unassigned element above the BOTTOM block;
    // unassigned elements never appeared in an answer, so any fixed slot
    // for them keeps the completion lie-free.
    std::vector<ElementId> order = top_order_;
    for (ElementId e = 0; e < n_; ++e)
        if (membership(e) == Membership::Unassigned) order.push_back(e);
    order.insert(order.end(), bottom_order_.begin(), bottom_order_.end());
    return Scenario::from_order(order);
}

Scenario select_alternative(const Transcript& t, int budget, GameKind kind, const Claim& avoid,
                            int enum_cap) {
    if (t.n() > enum_cap)
        throw std::domain_error("select_alternative: n exceeds the enumeration cap");
    std::optional<std::vector<int>> best;
    int best_lies = budget + 1;
    for_each_scenario(t.n(), [&](const std::vector<int>& rank) {
        const Scenario s(rank);
        if (target_of(s, kind) == avoid) return;
        const int lies = lie_count(t, s);
        // Lexicographic enumeration order makes "first strict improvement"
        // implement the (min lies, then lex-min rank) tie-break.
        if (lies < best_lies) {
            best_lies = lies;
            best = rank;
        }
    });
    if (!best)
        throw std::logic_error(
            "select_alternative: no alternative scenario within budget; "
            "the game was already determined");
    return Scenario(*best);
}

Claim1Wrapper::Claim1Wrapper(std::unique_ptr<ConsistentBase> base, int k, GameKind kind,
                             int enum_cap)
    : base_(std::move(base)), k_(k), kind_(kind), enum_cap_(enum_cap) {
    if (!base_) throw std::invalid_argument("Claim1Wrapper: null base adversary");
    if (k < 0) throw std::invalid_argument("Claim1Wrapper: negative lie budget");
    base_name_ = base_->name();
}

bool Claim1Wrapper::would_determine(const Transcript& t, const Query& q, Answer a) const {
    // Pre-activation transcripts consist of base answers only, so they are
    // consistent and the degree criterion applies (its equivalence with
    // scenario enumeration is a tested invariant).
    Transcript next = t;
    next.push(q, a);
    const auto g = ComparisonGraph::from_transcript(next);
    return g.determined(k_, kind_).has_value();
}

Answer Claim1Wrapper::answer(const Transcript& t, const Query& q) {
    if (k_ == 0 && !activated_) return base_->answer(t, q);  // nothing to extend with
    if (!activated_) {
        const Answer planned = base_->peek(q);
        if (!would_determine(t, q, planned)) return base_->answer(t, q);
        activated_ = true;
        x_ = base_->implied_scenario();
        remaining_ = k_;
        try {
            y_ = select_alternative(t, k_, kind_, target_of(*x_, kind_), enum_cap_);
        } catch (const std::logic_error& e) {
            throw AdversaryForfeit(e.what());
        }
    }
    const Answer per_x = x_->bigger(q.a, q.b) ? Answer::First : Answer::Second;
    if (remaining_ > 0) {
        const Answer per_y = y_->bigger(q.a, q.b) ? Answer::First : Answer::Second;
        // Answers on which x and y agree are lies against neither scenario;
        // they prolong the game legally and do not use up the budget.
        if (per_y != per_x) --remaining_;
        return per_y;
    }
    return per_x;
}

}  // namespace liararena
