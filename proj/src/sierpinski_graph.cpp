#include "sierpinski/sierpinski_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sierpinski {

namespace {

std::uint64_t checked_pow(int k, int n, std::uint64_t budget) {
    std::uint64_t v = 1;
    for (int i = 0; i < n; ++i) {
        v *= static_cast<std::uint64_t>(k);
        if (v > budget)
            throw std::length_error("SierpinskiGraph: k^n exceeds vertex budget");
    }
    return v;
}

// id of the length-m label (s, s, ..., s), i.e. s * (k^m - 1) / (k - 1).
std::uint64_t repunit(int s, int m, int k) {
    std::uint64_t v = 0;
    for (int i = 0; i < m; ++i) v = v * k + s;
    return v;
}

}  // namespace

void SierpinskiGraph::validate(int n, int k, std::uint64_t vertex_budget) {
    if (k < 3) throw std::invalid_argument("SierpinskiGraph: k must be >= 3");
    if (n < 1) throw std::invalid_argument("SierpinskiGraph: n must be >= 1");
    checked_pow(k, n, vertex_budget);
}

SierpinskiGraph::SierpinskiGraph(int n, int k, std::uint64_t vertex_budget)
    : n_(n), k_(k) {
    validate(n, k, vertex_budget);
    vertex_count_ = checked_pow(k, n, vertex_budget);
}

SierpinskiGraph::SierpinskiGraph(int n, int k, std::uint64_t vertex_budget, bool)
    : SierpinskiGraph(n, k, vertex_budget) {}

SierpinskiGraph SierpinskiGraph::recursive(int n, int k, std::uint64_t vertex_budget) {
    SierpinskiGraph g(n, k, vertex_budget, true);
    if (g.vertex_count_ > kMaterializeThreshold)
        throw std::length_error("SierpinskiGraph::recursive: graph too large to materialize");

    auto built = std::make_shared<Graph>(g.vertex_count_);
    // S(1,k) is a k-clique; S(m,k) is k shifted copies of S(m-1,k) plus the
    // k(k-1)/2 connecting edges (i,j,j,...,j) -- (j,i,i,...,i).
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            built->add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    std::uint64_t block = k;  // k^{m-1} while assembling S(m,k)
    for (int m = 2; m <= n; ++m) {
        auto prev = built->edges();
        for (int copy = 1; copy < k; ++copy) {
            std::uint64_t off = static_cast<std::uint64_t>(copy) * block;
            for (auto [u, v] : prev)
                built->add_edge(static_cast<VertexId>(u + off),
                                static_cast<VertexId>(v + off));
        }
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                std::uint64_t a = static_cast<std::uint64_t>(i) * block + repunit(j, m - 1, k);
                std::uint64_t b = static_cast<std::uint64_t>(j) * block + repunit(i, m - 1, k);
                built->add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
            }
        }
        block *= k;
    }
    g.materialized_ = std::move(built);
    return g;
}

VertexId SierpinskiGraph::encode(const VertexLabel& label) const {
    if (static_cast<int>(label.size()) != n_)
        throw std::invalid_argument("encode: label length != n");
    std::uint64_t id = 0;
    for (int c : label) {
        if (c < 0 || c >= k_)
            throw std::out_of_range("encode: coordinate out of [0, k)");
        id = id * k_ + static_cast<std::uint64_t>(c);
    }
    return static_cast<VertexId>(id);
}

VertexLabel SierpinskiGraph::decode(VertexId id) const {
    if (id >= vertex_count_) throw std::out_of_range("decode: id out of range");
    VertexLabel label(n_);
    std::uint64_t v = id;
    for (int i = n_ - 1; i >= 0; --i) {
        label[i] = static_cast<int>(v % k_);
        v /= k_;
    }
    return label;
}

std::string SierpinskiGraph::label_string(VertexId id) const {
    VertexLabel label = decode(id);
    std::string out;
    for (int i = 0; i < n_; ++i) {
        if (i) out += ',';
        out += std::to_string(label[i]);
    }
    return out;
}

VertexId SierpinskiGraph::parse_label(const std::string& text) const {
    VertexLabel label;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t pos = 0;
        int c = std::stoi(part, &pos);
        if (pos != part.size())
            throw std::invalid_argument("parse_label: bad coordinate '" + part + "'");
        label.push_back(c);
    }
    return encode(label);
}

bool SierpinskiGraph::adjacent(VertexId u, VertexId v) const {
    if (u >= vertex_count_ || v >= vertex_count_)
        throw std::out_of_range("adjacent: id out of range");
    if (u == v) return false;
    VertexLabel a = decode(u), b = decode(v);
    int h = 0;
    while (a[h] == b[h]) ++h;  // u != v, so a difference exists
    for (int t = h + 1; t < n_; ++t)
        if (a[t] != b[h] || b[t] != a[h]) return false;
    return true;
}

bool SierpinskiGraph::is_extreme(VertexId u) const {
    VertexLabel a = decode(u);
    return std::all_of(a.begin(), a.end(), [&](int c) { return c == a[0]; });
}

std::vector<VertexId> SierpinskiGraph::clique_of(VertexId u) const {
    if (u >= vertex_count_) throw std::out_of_range("clique_of: id out of range");
    VertexId base = static_cast<VertexId>((u / k_) * k_);
    std::vector<VertexId> out(k_);
    for (int j = 0; j < k_; ++j) out[j] = base + j;
    return out;
}

std::optional<VertexId> SierpinskiGraph::crossing_partner(VertexId u) const {
    VertexLabel a = decode(u);
    int c = a[n_ - 1];
    int h = n_ - 2;
    while (h >= 0 && a[h] == c) --h;
    if (h < 0) return std::nullopt;  // extreme vertex
    VertexLabel b(a.begin(), a.begin() + h);
    b.push_back(c);
    b.insert(b.end(), n_ - h - 1, a[h]);
    return encode(b);
}

std::vector<VertexId> SierpinskiGraph::neighbors(VertexId u) const {
    std::vector<VertexId> out = clique_of(u);
    out.erase(std::find(out.begin(), out.end(), u));
    if (auto p = crossing_partner(u))
        out.insert(std::lower_bound(out.begin(), out.end(), *p), *p);
    return out;
}

std::size_t SierpinskiGraph::degree(VertexId u) const {
    return static_cast<std::size_t>(k_) - (crossing_partner(u) ? 0 : 1);
}

std::vector<std::pair<VertexId, VertexId>> SierpinskiGraph::crossing_edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    if (n_ < 2) return out;
    out.reserve((vertex_count_ - k_) / 2);
    for (VertexId u = 0; u < vertex_count_; ++u) {
        auto p = crossing_partner(u);
        if (p && u < *p) out.emplace_back(u, *p);
    }
    return out;
}

std::vector<std::vector<VertexId>> SierpinskiGraph::cliques() const {
    std::vector<std::vector<VertexId>> out;
    out.reserve(vertex_count_ / k_);
    for (VertexId base = 0; base < vertex_count_; base += k_)
        out.push_back(clique_of(base));
    return out;
}

const Graph& SierpinskiGraph::graph() const {
    if (!materialized_) {
        if (vertex_count_ > kMaterializeThreshold)
            throw std::length_error("SierpinskiGraph::graph: too large to materialize");
        auto g = std::make_shared<Graph>(vertex_count_);
        for (VertexId u = 0; u < vertex_count_; ++u)
            for (VertexId v : neighbors(u))
                if (u < v) g->add_edge(u, v);
        materialized_ = std::move(g);
    }
    return *materialized_;
}

ExportFormat SierpinskiGraph::parse_format(const std::string& name) {
    if (name == "dot") return ExportFormat::Dot;
    if (name == "json") return ExportFormat::Json;
    if (name == "edgelist") return ExportFormat::EdgeList;
    throw std::invalid_argument("unknown export format '" + name + "'");
}

std::string SierpinskiGraph::export_text(ExportFormat format) const {
    std::ostringstream out;
    switch (format) {
        case ExportFormat::EdgeList:
            for (VertexId u = 0; u < vertex_count_; ++u)
                for (VertexId v : neighbors(u))
                    if (u < v) out << u << ' ' << v << '\n';
            break;
        case ExportFormat::Dot:
            out << "graph S_" << n_ << '_' << k_ << " {\n";
            for (VertexId u = 0; u < vertex_count_; ++u)
                out << "  \"" << label_string(u) << "\";\n";
            for (VertexId u = 0; u < vertex_count_; ++u)
                for (VertexId v : neighbors(u))
                    if (u < v)
                        out << "  \"" << label_string(u) << "\" -- \""
                            << label_string(v) << "\";\n";
            out << "}\n";
            break;
        case ExportFormat::Json: {
            out << "{\"n\":" << n_ << ",\"k\":" << k_ << ",\"edges\":[";
            bool first = true;
            for (VertexId u = 0; u < vertex_count_; ++u) {
                for (VertexId v : neighbors(u)) {
                    if (u < v) {
                        if (!first) out << ',';
                        first = false;
                        out << '[' << u << ',' << v << ']';
                    }
                }
            }
            out << "]}\n";
            break;
        }
    }
    return out.str();
}

}  // namespace sierpinski
