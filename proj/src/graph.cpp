#include "sierpinski/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sierpinski {

void Graph::add_edge(VertexId u, VertexId v) {
    if (u >= adj_.size() || v >= adj_.size())
        throw std::out_of_range("Graph::add_edge: vertex id out of range");
    if (u == v)
        throw std::invalid_argument("Graph::add_edge: self-loops not allowed");
    if (adjacent(u, v)) return;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < adj_.size(); ++u)
        for (VertexId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    if (adj_.empty()) return true;
    std::vector<char> seen(adj_.size(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId v : adj_[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == adj_.size();
}

}  // namespace sierpinski
