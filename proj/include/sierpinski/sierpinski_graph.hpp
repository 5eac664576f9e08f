#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sierpinski/graph.hpp"

namespace sierpinski {

// A vertex label is a tuple in {0..k-1}^n, stored most-significant first.
using VertexLabel = std::vector<int>;

enum class ExportFormat { Dot, Json, EdgeList };

// The Sierpinski graph S(n,k): vertex set {0..k-1}^n, two vertices adjacent
// iff their labels share a prefix, differ at the next position, and carry
// swapped constant suffixes. Immutable after construction; adjacency queries
// are answered from labels in O(n), so even graphs too large for an explicit
// adjacency structure can be generated and exported.
class SierpinskiGraph {
public:
    // Largest k^n the constructor accepts.
    static constexpr std::uint64_t kDefaultVertexBudget = std::uint64_t(1) << 26;
    // Explicit adjacency lists are precomputed below this size.
    static constexpr std::uint64_t kMaterializeThreshold = std::uint64_t(1) << 20;

    SierpinskiGraph(int n, int k,
                    std::uint64_t vertex_budget = kDefaultVertexBudget);

    // Builds S(n,k) by joining k copies of S(n-1,k); the resulting edge set
    // is identical to the label-rule construction (checked by tests).
    static SierpinskiGraph recursive(int n, int k,
                                     std::uint64_t vertex_budget = kDefaultVertexBudget);

    int n() const { return n_; }
    int k() const { return k_; }
    std::uint64_t vertex_count() const { return vertex_count_; }
    std::uint64_t edge_count() const { return std::uint64_t(k_) * (vertex_count_ - 1) / 2; }

    VertexId encode(const VertexLabel& label) const;
    VertexLabel decode(VertexId id) const;
    // Comma-separated coordinates, e.g. "0,1,2".
    std::string label_string(VertexId id) const;
    VertexId parse_label(const std::string& text) const;

    bool adjacent(VertexId u, VertexId v) const;
    bool is_extreme(VertexId u) const;

    // The k vertices sharing u's first n-1 coordinates (all vertices if n=1).
    std::vector<VertexId> clique_of(VertexId u) const;
    // The unique neighbor outside K(u); nullopt for extreme vertices.
    std::optional<VertexId> crossing_partner(VertexId u) const;

    // Sorted neighbor list, computed from the label.
    std::vector<VertexId> neighbors(VertexId u) const;
    std::size_t degree(VertexId u) const;

    // All edges between distinct cliques, each listed once with the smaller
    // endpoint first, sorted. They form a matching on the inner vertices.
    std::vector<std::pair<VertexId, VertexId>> crossing_edges() const;

    // The k^{n-1} maximal k-cliques K(.), in order of their shared prefix.
    std::vector<std::vector<VertexId>> cliques() const;

    std::string export_text(ExportFormat format) const;
    static ExportFormat parse_format(const std::string& name);

    // Explicit adjacency view; throws when the graph exceeds the
    // materialization threshold.
    const Graph& graph() const;

private:
    SierpinskiGraph(int n, int k, std::uint64_t vertex_budget, bool from_recursion);
    static void validate(int n, int k, std::uint64_t vertex_budget);

    int n_;
    int k_;
    std::uint64_t vertex_count_;
    mutable std::shared_ptr<Graph> materialized_;
};

}  // namespace sierpinski
