#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "sierpinski/codes.hpp"
#include "sierpinski/constructions.hpp"
#include "sierpinski/graph.hpp"
#include "sierpinski/sierpinski_graph.hpp"

namespace sierpinski {

struct SolveOptions {
    CodeKind kind = CodeKind::Dominating;
    std::optional<std::uint64_t> node_budget;
    std::optional<std::chrono::milliseconds> time_budget;
    bool deterministic = true;
    std::optional<Bitset> initial_upper_bound;
    // A trusted lower bound on the optimum (e.g. from structural_lower_bound).
    // Zero disables it; the generic bounds are always active.
    std::size_t lower_bound_hint = 0;
    int jobs = 1;
};

enum class SolveStatus { ProvedOptimal, BudgetExhausted, Infeasible };

const char* solve_status_name(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::optional<std::size_t> min_size;
    std::optional<Bitset> witness;
    std::uint64_t nodes_explored = 0;
    std::size_t lower_bound_used = 0;
};

// Proof-derived lower bounds for S(n,k), n >= 2: the disjoint-M(K) argument
// (identifying), the crossing-edge partition argument (locating-dominating),
// the per-S(2,k) counting argument plus odd-k parity (total-dominating), and
// the 1-perfect-code formula (dominating). All are tight on S(n,k).
std::uint64_t structural_lower_bound(const SierpinskiGraph& g, CodeKind kind);

// Exact minimum-cardinality code by branch and bound over vertex
// inclusion/exclusion in canonical id order.
SolveResult min_code(const Graph& g, const SolveOptions& opts);

// Independent oracle: enumerate subsets in increasing size. |V| <= 20.
SolveResult brute_force_min(const Graph& g, CodeKind kind);

struct CertifyReport {
    CodeKind kind;
    int n = 0;
    int k = 0;
    std::uint64_t value = 0;
    std::string method;  // "bounds-met" or "searched"
    bool matches_predicted = false;
    SolveStatus status = SolveStatus::ProvedOptimal;
    std::uint64_t nodes_explored = 0;
};

// Certifies the closed-form value on S(n,k): construction as upper bound,
// structural bound below; falls back to search when they do not meet (and
// always for Dominating, which has no explicit construction here).
CertifyReport certify_paper_value(int n, int k, CodeKind kind,
                                  const SolveOptions& opts = {});

}  // namespace sierpinski
