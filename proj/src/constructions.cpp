#include "sierpinski/constructions.hpp"

#include <stdexcept>
#include <vector>

namespace sierpinski {

namespace {

std::uint64_t ipow(int k, int n) {
    std::uint64_t v = 1;
    for (int i = 0; i < n; ++i) v *= static_cast<std::uint64_t>(k);
    return v;
}

void require_params(int n, int k) {
    if (k < 3) throw std::invalid_argument("constructions: k must be >= 3");
    if (n < 2) throw std::invalid_argument("constructions: n must be >= 2");
    if (ipow(k, n) > SierpinskiGraph::kDefaultVertexBudget)
        throw std::length_error("constructions: k^n exceeds vertex budget");
}

Code empty_code(int n, int k) {
    Code c;
    c.n = n;
    c.k = k;
    c.members = Bitset(ipow(k, n));
    return c;
}

// Vertex (prefix, x, y) where prefix indexes a level-2 block.
std::uint64_t block_vertex(std::uint64_t block, int x, int y, int k) {
    return block * k * k + static_cast<std::uint64_t>(x) * k + y;
}

// Designates, for every level-2 block of S(n,k) with odd k, the clique index
// whose extreme vertex joins the total-dominating code. Blocks are paired so
// the chosen extreme vertices are crossing partners: within the subtree at
// `prefix`, the leftover block is (prefix, tail, tail, ...) and its extreme
// gets designated index `tail`. Exactly one block chain stays unpaired, the
// one ending at the all-(k-1) block.
void designate(std::vector<int>& u_of_block, std::uint64_t prefix, int depth,
               int tail, int k) {
    if (depth == 0) {
        u_of_block[prefix] = tail;
        return;
    }
    std::vector<int> rest;
    for (int s = 0; s < k; ++s)
        if (s != tail) rest.push_back(s);
    for (std::size_t i = 0; i + 1 < rest.size(); i += 2) {
        designate(u_of_block, prefix * k + rest[i], depth - 1, rest[i + 1], k);
        designate(u_of_block, prefix * k + rest[i + 1], depth - 1, rest[i], k);
    }
    designate(u_of_block, prefix * k + tail, depth - 1, tail, k);
}

}  // namespace

Code identifying_code(int n, int k) {
    require_params(n, k);
    Code c = empty_code(n, k);
    std::uint64_t blocks = ipow(k, n - 2);
    for (std::uint64_t b = 0; b < blocks; ++b)
        for (int x = 0; x < k; ++x)
            for (int y = 0; y < k; ++y)
                if (x != y) c.members.set(block_vertex(b, x, y, k));
    return c;
}

Code locating_dominating_code(int n, int k) {
    require_params(n, k);
    Code c = empty_code(n, k);
    std::uint64_t blocks = ipow(k, n - 2);
    for (std::uint64_t b = 0; b < blocks; ++b) {
        // One endpoint per internal crossing edge {i,j}: along the
        // Hamiltonian cycle 0-1-...-(k-1)-0 take (i, i+1 mod k), which puts a
        // code vertex in every clique; chords take the min endpoint first.
        for (int i = 0; i < k; ++i)
            c.members.set(block_vertex(b, i, (i + 1) % k, k));
        for (int i = 0; i < k; ++i)
            for (int j = i + 2; j < k; ++j)
                if (!(i == 0 && j == k - 1))
                    c.members.set(block_vertex(b, i, j, k));
    }
    return c;
}

Code total_dominating_code(int n, int k) {
    require_params(n, k);
    Code c = empty_code(n, k);
    std::uint64_t blocks = ipow(k, n - 2);

    if (k % 2 == 0) {
        // Both endpoints of the crossing edges induced by the perfect
        // matching {0,1},{2,3},...,{k-2,k-1}.
        for (std::uint64_t b = 0; b < blocks; ++b) {
            for (int i = 0; i + 1 < k; i += 2) {
                c.members.set(block_vertex(b, i, i + 1, k));
                c.members.set(block_vertex(b, i + 1, i, k));
            }
        }
        return c;
    }

    if (n == 2) {
        // Maximum matching on indices 0..k-2; the clique k-1 stays
        // undominated, so add two of its vertices adjacent to its extreme.
        for (int i = 0; i + 1 < k - 1; i += 2) {
            c.members.set(block_vertex(0, i, i + 1, k));
            c.members.set(block_vertex(0, i + 1, i, k));
        }
        c.members.set(block_vertex(0, k - 1, 0, k));
        c.members.set(block_vertex(0, k - 1, 1, k));
        return c;
    }

    std::vector<int> u_of_block(blocks, k - 1);
    designate(u_of_block, 0, n - 2, k - 1, k);
    for (std::uint64_t b = 0; b < blocks; ++b) {
        int u = u_of_block[b];
        std::vector<int> rest;
        for (int s = 0; s < k; ++s)
            if (s != u) rest.push_back(s);
        for (std::size_t i = 0; i + 1 < rest.size(); i += 2) {
            c.members.set(block_vertex(b, rest[i], rest[i + 1], k));
            c.members.set(block_vertex(b, rest[i + 1], rest[i], k));
        }
        c.members.set(block_vertex(b, u, u, k));
    }
    // The all-(k-1) extreme vertex has no crossing partner; give it a
    // companion in its own clique.
    c.members.set(block_vertex(blocks - 1, k - 1, 0, k));
    return c;
}

Code construct_code(CodeKind kind, int n, int k) {
    switch (kind) {
        case CodeKind::Identifying: return identifying_code(n, k);
        case CodeKind::LocatingDominating: return locating_dominating_code(n, k);
        case CodeKind::TotalDominating: return total_dominating_code(n, k);
        case CodeKind::Dominating:
            throw std::invalid_argument(
                "construct_code: no explicit dominating-code construction; "
                "use the solver");
    }
    throw std::logic_error("construct_code: bad kind");
}

std::uint64_t predicted_size(CodeKind kind, int n, int k) {
    require_params(n, k);
    switch (kind) {
        case CodeKind::Identifying:
            return ipow(k, n - 1) * (k - 1);
        case CodeKind::LocatingDominating:
            return ipow(k, n - 1) * (k - 1) / 2;
        case CodeKind::TotalDominating:
            return ipow(k, n - 1) + (k % 2 == 1 ? 1 : 0);
        case CodeKind::Dominating: {
            std::uint64_t num = (n % 2 == 0)
                ? static_cast<std::uint64_t>(k) * (ipow(k, n - 1) + 1)
                : ipow(k, n) + 1;
            if (num % (k + 1) != 0)
                throw std::logic_error("predicted_size: domination formula not integral");
            return num / (k + 1);
        }
    }
    throw std::logic_error("predicted_size: bad kind");
}

std::uint64_t conjecture_bound(int n, int k) {
    require_params(n, k);
    // ceil(k^n - k^n / k) is exact: k divides k^n.
    return ipow(k, n) - ipow(k, n - 1);
}

}  // namespace sierpinski
