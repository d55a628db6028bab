#pragma once

// Answer strategies. The consistent and TOP/BOTTOM adversaries never lie
// against their own evolving order; the claim1 wrapper extends any such
// base so that, once the next base answer would determine the game, it
// switches to an alternative scenario for k answers and forces k+1 extra
// queries.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liararena/core.hpp"

namespace liararena {

// Thrown when an adversary cannot answer without breaking its contract
// (e.g. claim1 activation on an already-determined game). The arena
// records it as adversary_forfeit.
class AdversaryForfeit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Adversary {
public:
    virtual ~Adversary() = default;
    // Answer q given the history t (which does not yet contain q).
    // May mutate internal strategy state.
    virtual Answer answer(const Transcript& t, const Query& q) = 0;
    virtual std::string name() const = 0;
};

// An adversary whose answers are all truthful under some single total
// order at every point of the game. Exposes a side-effect-free preview
// and a zero-lie completion of its current state, which is what the
// claim1 wrapper needs for lookahead and activation.
class ConsistentBase : public Adversary {
public:
    virtual Answer peek(const Query& q) const = 0;
    // A scenario under which every answer given so far is true.
    virtual Scenario implied_scenario() const = 0;
};

// Answers according to a fixed ground-truth scenario.
class TruthfulAdversary : public ConsistentBase {
public:
    explicit TruthfulAdversary(Scenario truth);

    Answer peek(const Query& q) const override;
    Answer answer(const Transcript& t, const Query& q) override;
    Scenario implied_scenario() const override { return truth_; }
    std::string name() const override { return "truthful"; }

private:
    Scenario truth_;
};

// Answers according to a fixed priority order (the answer oracle of the
// max-game lower bound: any consistent policy works, a fixed order keeps
// it deterministic).
class ConsistentAdversary : public ConsistentBase {
public:
    explicit ConsistentAdversary(Scenario priority);
    // Default priority 0 > 1 > ... > n-1.
    explicit ConsistentAdversary(int n);

    Answer peek(const Query& q) const override;
    Answer answer(const Transcript& t, const Query& q) override;
    Scenario implied_scenario() const override { return priority_; }
    std::string name() const override { return "consistent"; }

private:
    Scenario priority_;
};

// The max+min adversary: elements are assigned to TOP or BOTTOM on first
// comparison (bigger -> TOP, smaller -> BOTTOM), TOP members always beat
// BOTTOM members, and ties inside a block follow the block's internal
// linear order. New TOP members enter at the bottom of the TOP block and
// new BOTTOM members at the top of the BOTTOM block, so no past answer is
// ever contradicted.
class TopBottomAdversary : public ConsistentBase {
public:
    enum class Membership : uint8_t { Unassigned, Top, Bottom };

    explicit TopBottomAdversary(int n);

    Answer peek(const Query& q) const override;
    Answer answer(const Transcript& t, const Query& q) override;
    Scenario implied_scenario() const override;
    std::string name() const override { return "topbottom"; }

    Membership membership(ElementId e) const { return membership_.at(static_cast<size_t>(e)); }
    int top_size() const { return static_cast<int>(top_order_.size()); }
    int bottom_size() const { return static_cast<int>(bottom_order_.size()); }
    // Biggest first in both blocks.
    const std::vector<ElementId>& top_order() const { return top_order_; }
    const std::vector<ElementId>& bottom_order() const { return bottom_order_; }

private:
    // Winner of q under the current state, without assigning anything.
    ElementId decide_winner(const Query& q) const;
    void assign(ElementId e, Membership m);
    int position(ElementId e) const;  // index in its block's order

    int n_;
    std::vector<Membership> membership_;
    std::vector<ElementId> top_order_;
    std::vector<ElementId> bottom_order_;
};

// A scenario whose claim differs from `avoid`, with lie_count(t, y) <=
// budget. Ties broken by minimal lie count, then lexicographically
// smallest rank array. Throws std::logic_error if none exists (the
// caller's precondition - at least two live claims - was violated).
Scenario select_alternative(const Transcript& t, int budget, GameKind kind, const Claim& avoid,
                            int enum_cap = kDefaultEnumCap);

// Extension wrapper: delegates to the base while the base's next answer
// would keep the game undetermined; on the first query where the base's
// answer would determine it, freezes the base's implied scenario x,
// selects an alternative scenario y with a different claim, and answers
// per y until k answers disagreeing with x have been given; after that it
// answers per x forever. With k = 0 it never activates and degenerates to
// the base.
class Claim1Wrapper : public Adversary {
public:
    Claim1Wrapper(std::unique_ptr<ConsistentBase> base, int k, GameKind kind,
                  int enum_cap = kDefaultEnumCap);

    Answer answer(const Transcript& t, const Query& q) override;
    std::string name() const override { return base_name_ + "+claim1"; }

    bool activated() const { return activated_; }
    int remaining_alt_answers() const { return remaining_; }
    const std::optional<Scenario>& committed_scenario() const { return x_; }
    const std::optional<Scenario>& alt_scenario() const { return y_; }

private:
    bool would_determine(const Transcript& t, const Query& q, Answer a) const;

    std::unique_ptr<ConsistentBase> base_;
    std::string base_name_;
    int k_;
    GameKind kind_;
    int enum_cap_;
    bool activated_ = false;
    int remaining_ = 0;
    std::optional<Scenario> x_;
    std::optional<Scenario> y_;
};

}  // namespace liararena
