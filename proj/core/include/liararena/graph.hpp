#pragma once

// Comparison multigraph over the ground set: one edge per answer, directed
// from the declared bigger element to the smaller one. Acyclicity is the
// consistency test; in/out-degrees (with multiplicity) give the fast
// candidate and determinedness criteria for consistent transcripts.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liararena/core.hpp"

namespace liararena {

class ComparisonGraph {
public:
    explicit ComparisonGraph(int n);

    static ComparisonGraph from_transcript(const Transcript& t);

    // Incremental builder; single-owner, not meant for shared mutation.
    void add_answer(const Query& q, Answer ans);

    int n() const { return n_; }
    int in_degree(ElementId v) const { return in_deg_.at(static_cast<size_t>(v)); }
    int out_degree(ElementId v) const { return out_deg_.at(static_cast<size_t>(v)); }
    bool touched(ElementId v) const { return in_degree(v) + out_degree(v) > 0; }
    int total_multiplicity() const { return total_; }
    int multiplicity(ElementId winner, ElementId loser) const;
    const std::map<std::pair<ElementId, ElementId>, int>& edges() const { return edge_mult_; }

    // True iff the graph (ignoring multiplicity) has no directed cycle.
    bool is_consistent() const;

    // Elements that can still be the maximum: in-degree <= k. Only valid
    // for consistent graphs; throws std::domain_error otherwise so the
    // caller falls back to scenario enumeration.
    std::vector<ElementId> max_candidates(int k) const;
    // Dual: out-degree <= k.
    std::vector<ElementId> min_candidates(int k) const;

    // The unique claim compatible with lie budget k, if the candidate
    // set(s) for `kind` are singletons. Requires consistency.
    std::optional<Claim> determined(int k, GameKind kind) const;

    // Plain-text edge list, one "winner>loser xMult" line per edge,
    // sorted by (winner, loser).
    std::string dump_edges() const;

private:
    void require_consistent(const char* op) const;

    int n_;
    int total_ = 0;
    std::map<std::pair<ElementId, ElementId>, int> edge_mult_;
    std::vector<int> in_deg_;
    std::vector<int> out_deg_;
};

}  // namespace liararena
