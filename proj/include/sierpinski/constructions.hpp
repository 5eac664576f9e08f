#pragma once

#include <cstdint>

#include "sierpinski/codes.hpp"
#include "sierpinski/sierpinski_graph.hpp"

namespace sierpinski {

// Explicit minimum codes for S(n,k), n >= 2. All three constructions are
// deterministic: the same (n,k) always yields the same code.

// All inner vertices of every level-2 block; size k^{n-1}(k-1).
Code identifying_code(int n, int k);

// One endpoint per level-2-internal crossing edge, chosen so every k-clique
// is hit; size k^{n-1}(k-1)/2.
Code locating_dominating_code(int n, int k);

// k even: both endpoints of the canonical perfect-matching crossing edges in
// every level-2 block, size k^{n-1}. k odd: maximum-matching pattern per
// block plus paired extreme vertices, size k^{n-1}+1.
Code total_dominating_code(int n, int k);

Code construct_code(CodeKind kind, int n, int k);

// Closed-form minimum sizes (Dominating uses the 1-perfect-code formula).
std::uint64_t predicted_size(CodeKind kind, int n, int k);

// ceil(|V| - |V|/Delta) of the identifying-code upper-bound conjecture;
// equals predicted_size(Identifying, n, k) on S(n,k).
std::uint64_t conjecture_bound(int n, int k);

}  // namespace sierpinski
