#pragma once

#include <random>

#include "sierpinski/bitset.hpp"
#include "sierpinski/graph.hpp"

namespace testutil {

inline sierpinski::Graph complete_graph(std::size_t n) {
    sierpinski::Graph g(n);
    for (sierpinski::VertexId u = 0; u < n; ++u)
        for (sierpinski::VertexId v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

// Connected G(n,p) sample; retries until connected.
inline sierpinski::Graph random_connected_graph(std::mt19937& rng,
                                                std::size_t max_vertices) {
    std::uniform_int_distribution<std::size_t> nd(2, max_vertices);
    std::uniform_real_distribution<double> pd(0.2, 0.7);
    for (;;) {
        std::size_t n = nd(rng);
        double p = pd(rng);
        sierpinski::Graph g(n);
        std::bernoulli_distribution edge(p);
        for (sierpinski::VertexId u = 0; u < n; ++u)
            for (sierpinski::VertexId v = u + 1; v < n; ++v)
                if (edge(rng)) g.add_edge(u, v);
        if (g.is_connected()) return g;
    }
}

inline sierpinski::Bitset random_subset(std::mt19937& rng, std::size_t n) {
    sierpinski::Bitset b(n);
    std::bernoulli_distribution in(0.5);
    for (std::size_t i = 0; i < n; ++i)
        if (in(rng)) b.set(i);
    return b;
}

}  // namespace testutil
