#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace sierpinski {

using VertexId = std::uint32_t;

// Plain undirected graph with sorted adjacency lists. The verifiers and the
// exact solver work against this interface, so they run on any graph, not
// only on Sierpinski instances.
class Graph {
public:
    explicit Graph(std::size_t vertex_count) : adj_(vertex_count) {}

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    void add_edge(VertexId u, VertexId v);
    bool adjacent(VertexId u, VertexId v) const;

    const std::vector<VertexId>& neighbors(VertexId u) const { return adj_[u]; }
    std::size_t degree(VertexId u) const { return adj_[u].size(); }

    // Sorted list of edges, smaller endpoint first.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    bool is_connected() const;

private:
    std::vector<std::vector<VertexId>> adj_;
    std::size_t edge_count_ = 0;
};

}  // namespace sierpinski
