#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liararena/adversaries.hpp"
#include "liararena/core.hpp"
#include "liararena/graph.hpp"

using namespace liararena;

namespace {

Query random_query(int n, std::mt19937_64& rng) {
    const int a = static_cast<int>(rng() % static_cast<uint64_t>(n));
    int b = static_cast<int>(rng() % static_cast<uint64_t>(n - 1));
    if (b >= a) ++b;
    return Query(a, b);
}

}  // namespace

TEST_CASE("consistent adversary answers by priority, deterministically") {
    ConsistentAdversary adv(3);  // priority 0 > 1 > 2
    Transcript t(3);
    CHECK(adv.answer(t, Query(1, 2)) == Answer::First);
    CHECK(adv.answer(t, Query(2, 0)) == Answer::Second);
    const Query q(0, 2);
    CHECK(adv.answer(t, q) == adv.answer(t, q));
}

TEST_CASE("consistent adversary transcripts have zero lies against the priority") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        ConsistentAdversary adv(n);
        Transcript t(n);
        for (int i = 0; i < 3 * n; ++i) {
            const Query q = random_query(n, rng);
            t.push(q, adv.answer(t, q));
        }
        CHECK(lie_count(t, adv.implied_scenario()) == 0);
        CHECK(ComparisonGraph::from_transcript(t).is_consistent());
    }
}

TEST_CASE("topbottom membership case analysis") {
    SUBCASE("both fresh: first named wins, goes to TOP") {
        TopBottomAdversary adv(6);
        Transcript t(6);
        CHECK(adv.answer(t, Query(3, 5)) == Answer::First);
        CHECK(adv.membership(3) == TopBottomAdversary::Membership::Top);
        CHECK(adv.membership(5) == TopBottomAdversary::Membership::Bottom);
    }
    SUBCASE("TOP vs BOTTOM: the TOP one is bigger") {
        TopBottomAdversary adv(4);
        Transcript t(4);
        adv.answer(t, Query(0, 1));  // 0 -> TOP, 1 -> BOTTOM
        CHECK(adv.answer(t, Query(0, 1)) == Answer::First);
        CHECK(adv.answer(t, Query(1, 0)) == Answer::Second);
    }
    SUBCASE("fresh vs TOP: fresh loses and joins BOTTOM, TOP in-degrees untouched") {
        TopBottomAdversary adv(4);
        Transcript t(4);
        t.push(Query(0, 1), adv.answer(t, Query(0, 1)));  // 0 -> TOP
        const auto before = ComparisonGraph::from_transcript(t);
        t.push(Query(2, 0), adv.answer(t, Query(2, 0)));
        CHECK(t.back().answer == Answer::Second);  // the TOP member 0 wins
        CHECK(adv.membership(2) == TopBottomAdversary::Membership::Bottom);
        const auto after = ComparisonGraph::from_transcript(t);
        CHECK(after.is_consistent());
        CHECK(after.in_degree(0) == before.in_degree(0));
    }
    SUBCASE("fresh vs BOTTOM: fresh wins and joins TOP") {
        TopBottomAdversary adv(4);
        Transcript t(4);
        adv.answer(t, Query(0, 1));  // 1 -> BOTTOM
        CHECK(adv.answer(t, Query(2, 1)) == Answer::First);
        CHECK(adv.membership(2) == TopBottomAdversary::Membership::Top);
    }
    SUBCASE("inside a block the internal order rules") {
        TopBottomAdversary adv(6);
        Transcript t(6);
        adv.answer(t, Query(0, 1));  // TOP: [0], BOTTOM: [1]
        adv.answer(t, Query(2, 3));  // TOP: [0,2], BOTTOM: [3,1]
        CHECK(adv.answer(t, Query(2, 0)) == Answer::Second);  // earlier TOP member is bigger
        CHECK(adv.answer(t, Query(1, 3)) == Answer::Second);  // newer BOTTOM member is bigger
    }
}

TEST_CASE("topbottom stays consistent and disciplined under random play") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        TopBottomAdversary adv(n);
        Transcript t(n);
        ComparisonGraph g(n);
        for (int i = 0; i < 4 * n; ++i) {
            const Query q = random_query(n, rng);
            // Degree discipline: record TOP in-degrees before the answer.
            std::vector<int> top_in;
            std::vector<bool> was_top(static_cast<size_t>(n), false);
            for (ElementId v = 0; v < n; ++v) {
                if (adv.membership(v) == TopBottomAdversary::Membership::Top) {
                    was_top[static_cast<size_t>(v)] = true;
                }
                top_in.push_back(g.in_degree(v));
            }
            const bool top_top =
                adv.membership(q.a) == TopBottomAdversary::Membership::Top &&
                adv.membership(q.b) == TopBottomAdversary::Membership::Top;
            const bool bottom_bottom =
                adv.membership(q.a) == TopBottomAdversary::Membership::Bottom &&
                adv.membership(q.b) == TopBottomAdversary::Membership::Bottom;
            std::vector<int> bottom_out;
            std::vector<bool> was_bottom(static_cast<size_t>(n), false);
            for (ElementId v = 0; v < n; ++v) {
                if (adv.membership(v) == TopBottomAdversary::Membership::Bottom)
                    was_bottom[static_cast<size_t>(v)] = true;
                bottom_out.push_back(g.out_degree(v));
            }

            const Answer a = adv.answer(t, q);
            t.push(q, a);
            g.add_answer(q, a);

            for (ElementId v = 0; v < n; ++v) {
                if (was_top[static_cast<size_t>(v)] && !top_top)
                    CHECK(g.in_degree(v) == top_in[static_cast<size_t>(v)]);
                if (was_bottom[static_cast<size_t>(v)] && !bottom_bottom)
                    CHECK(g.out_degree(v) == bottom_out[static_cast<size_t>(v)]);
            }
        }
        CHECK(g.is_consistent());
        CHECK(lie_count(t, adv.implied_scenario()) == 0);
        CHECK(adv.top_size() + adv.bottom_size() <= n);
    }
}

TEST_CASE("select_alternative") {
    SUBCASE("empty transcript flips the n=2 claim") {
        const Transcript t(2);
        const auto y = select_alternative(t, 0, GameKind::Max, Claim::max_only(0));
        CHECK(y.max_element() == 1);
    }
    SUBCASE("single answer, budget 1") {
        Transcript t(2);
        t.push(Query(0, 1), Answer::First);
        const auto y = select_alternative(t, 1, GameKind::Max, Claim::max_only(0));
        CHECK(y.max_element() == 1);
        CHECK(lie_count(t, y) == 1);
    }
    SUBCASE("consistent star: minimal lies, then lexicographically smallest ranks") {
        Transcript t(3);
        t.push(Query(0, 1), Answer::First);
        t.push(Query(0, 2), Answer::First);
        // Oracle: enumerate scenarios with claim != 0, find the minimum lie
        // count and the lex-min rank array achieving it.
        int best_lies = 99;
        std::vector<int> best_rank;
        for_each_scenario(3, [&](const std::vector<int>& rank) {
            const Scenario s(rank);
            if (s.max_element() == 0) return;
            const int lies = lie_count(t, s);
            if (lies < best_lies) {
                best_lies = lies;
                best_rank = rank;
            }
        });
        CHECK(best_lies == 1);  // both 1-on-top and 2-on-top need exactly one lie
        const auto y = select_alternative(t, 1, GameKind::Max, Claim::max_only(0));
        CHECK(y.rank() == best_rank);
        CHECK(y.rank() == std::vector<int>{1, 0, 2});  // frozen: element 2 on top
        CHECK(lie_count(t, y) == 1);
    }
    SUBCASE("throws when no alternative exists") {
        Transcript t(2);
        t.push(Query(0, 1), Answer::First);
        CHECK_THROWS_AS(select_alternative(t, 0, GameKind::Max, Claim::max_only(0)),
                        std::logic_error);
    }
}

TEST_CASE("claim1 wrapper forces the n=2 k=1 extension") {
    Claim1Wrapper adv(std::make_unique<ConsistentAdversary>(2), 1, GameKind::Max);
    Transcript t(2);
    // First query: base would not determine anything, so it is delegated.
    const Answer a1 = adv.answer(t, Query(0, 1));
    CHECK(a1 == Answer::First);
    t.push(Query(0, 1), a1);
    CHECK_FALSE(adv.activated());
    // Second query: the base answer would kill the alternative claim, so
    // the wrapper activates and answers per the alternative scenario.
    const Answer a2 = adv.answer(t, Query(0, 1));
    CHECK(a2 == Answer::Second);
    t.push(Query(0, 1), a2);
    CHECK(adv.activated());
    CHECK(consistent_scenarios(t, 1, GameKind::Max).size() == 2);  // both claims alive
    // Third query: alternative answers are exhausted; back to the frozen
    // committed scenario.
    const Answer a3 = adv.answer(t, Query(0, 1));
    CHECK(a3 == Answer::First);
    t.push(Query(0, 1), a3);
    CHECK(consistent_scenarios(t, 1, GameKind::Max) == std::set<Claim>{Claim::max_only(0)});
}

TEST_CASE("claim1 with k=0 never lies and never activates") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        Claim1Wrapper adv(std::make_unique<ConsistentAdversary>(n), 0, GameKind::Max);
        const ConsistentAdversary reference(n);
        Transcript t(n);
        for (int i = 0; i < 3 * n; ++i) {
            const Query q = random_query(n, rng);
            const Answer a = adv.answer(t, q);
            CHECK(a == reference.peek(q));
            t.push(q, a);
        }
        CHECK_FALSE(adv.activated());
        CHECK(lie_count(t, reference.implied_scenario()) == 0);
    }
}

TEST_CASE("claim1 activation keeps some scenario within budget") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const int k = 1 + static_cast<int>(rng() % 2);
        const GameKind kind = rng() % 2 ? GameKind::Max : GameKind::MaxMin;
        std::unique_ptr<ConsistentBase> base;
        if (rng() % 2) {
            base = std::make_unique<ConsistentAdversary>(n);
        } else {
            base = std::make_unique<TopBottomAdversary>(n);
        }
        Claim1Wrapper adv(std::move(base), k, kind);
        Transcript t(n);
        for (int i = 0; i < 5 * n; ++i) {
            const Query q = random_query(n, rng);
            const Answer a = adv.answer(t, q);
            t.push(q, a);
            CHECK(satisfiable(t, k));
            if (adv.activated()) {
                REQUIRE(adv.alt_scenario().has_value());
                CHECK(lie_count(t, *adv.alt_scenario()) <= k);
            }
        }
    }
}

TEST_CASE("after activation both claims stay alive for the k alternative answers") {
    // n=3 max game, k=2, drive the wrapped consistent adversary with the
    // repeated-pair query pattern a tournament would use.
    const int k = 2;
    Claim1Wrapper adv(std::make_unique<ConsistentAdversary>(3), k, GameKind::Max);
    Transcript t(3);
    const std::vector<Query> plan = {Query(0, 1), Query(0, 1), Query(0, 1), Query(0, 2),
                                     Query(0, 2), Query(0, 2), Query(0, 2), Query(0, 2),
                                     Query(0, 2), Query(0, 2)};
    int activation_point = -1;
    for (const auto& q : plan) {
        const Answer a = adv.answer(t, q);
        t.push(q, a);
        if (adv.activated() && activation_point < 0)
            activation_point = static_cast<int>(t.size());
        if (adv.activated() && adv.remaining_alt_answers() >= 0 &&
            adv.remaining_alt_answers() < k) {
            // mid-extension: the game must not be determined
            if (adv.remaining_alt_answers() > 0)
                CHECK(consistent_scenarios(t, k, GameKind::Max).size() >= 2);
        }
    }
    CHECK(activation_point > 0);
}
