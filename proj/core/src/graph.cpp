#include "liararena/graph.hpp"

#include <sstream>

namespace liararena {

ComparisonGraph::ComparisonGraph(int n) : n_(n) {
    if (n <= 0) throw std::invalid_argument("ComparisonGraph: ground-set size must be positive");
    in_deg_.assign(static_cast<size_t>(n), 0);
    out_deg_.assign(static_cast<size_t>(n), 0);
}

ComparisonGraph ComparisonGraph::from_transcript(const Transcript& t) {
    ComparisonGraph g(t.n());
    for (const auto& e : t.entries()) g.add_answer(e.query, e.answer);
    return g;
}

void ComparisonGraph::add_answer(const Query& q, Answer ans) {
    if (q.a >= n_ || q.b >= n_)
        throw std::invalid_argument("ComparisonGraph::add_answer: element outside ground set");
    const ElementId w = q.winner(ans);
    const ElementId l = q.loser(ans);
    ++edge_mult_[{w, l}];
    ++out_deg_[static_cast<size_t>(w)];
    ++in_deg_[static_cast<size_t>(l)];
    ++total_;
}

int ComparisonGraph::multiplicity(ElementId winner, ElementId loser) const {
    auto it = edge_mult_.find({winner, loser});
    return it == edge_mult_.end() ? 0 : it->second;
}

bool ComparisonGraph::is_consistent() const {
    // Iterative DFS, three colors. Multiplicity is irrelevant for cycles.
    std::vector<std::vector<ElementId>> adj(static_cast<size_t>(n_));
    for (const auto& [edge, mult] : edge_mult_) {
        (void)mult;
        adj[static_cast<size_t>(edge.first)].push_back(edge.second);
    }
    enum : uint8_t { White, Gray, Black };
    std::vector<uint8_t> color(static_cast<size_t>(n_), White);
    std::vector<std::pair<ElementId, size_t>> stack;
    for (ElementId root = 0; root < n_; ++root) {
        if (color[static_cast<size_t>(root)] != White) continue;
        stack.push_back({root, 0});
        color[static_cast<size_t>(root)] = Gray;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            const auto& out = adj[static_cast<size_t>(v)];
            if (next < out.size()) {
                const ElementId u = out[next++];
                if (color[static_cast<size_t>(u)] == Gray) return false;
                if (color[static_cast<size_t>(u)] == White) {
                    color[static_cast<size_t>(u)] = Gray;
                    stack.push_back({u, 0});
                }
            } else {
                color[static_cast<size_t>(v)] = Black;
                stack.pop_back();
            }
        }
    }
    return true;
}

void ComparisonGraph::require_consistent(const char* op) const {
    if (!is_consistent())
        throw std::domain_error(std::string(op) +
                                ": comparison graph has a directed cycle; the degree "
                                "criterion only applies to consistent transcripts");
}

std::vector<ElementId> ComparisonGraph::max_candidates(int k) const {
    require_consistent("max_candidates");
    std::vector<ElementId> out;
    for (ElementId v = 0; v < n_; ++v)
        if (in_degree(v) <= k) out.push_back(v);
    return out;
}

std::vector<ElementId> ComparisonGraph::min_candidates(int k) const {
    require_consistent("min_candidates");
    std::vector<ElementId> out;
    for (ElementId v = 0; v < n_; ++v)
        if (out_degree(v) <= k) out.push_back(v);
    return out;
}

std::optional<Claim> ComparisonGraph::determined(int k, GameKind kind) const {
    const auto maxc = max_candidates(k);
    if (maxc.size() != 1) return std::nullopt;
    if (kind == GameKind::Max) return Claim::max_only(maxc.front());
    const auto minc = min_candidates(k);
    if (minc.size() != 1) return std::nullopt;
    return Claim::max_min(maxc.front(), minc.front());
}

std::string ComparisonGraph::dump_edges() const {
    std::ostringstream os;
    for (const auto& [edge, mult] : edge_mult_)
        os << edge.first << ">" << edge.second << " x" << mult << "\n";
    return os.str();
}

}  // namespace liararena
