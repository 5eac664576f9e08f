#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sierpinski/bitset.hpp"
#include "sierpinski/graph.hpp"
#include "sierpinski/sierpinski_graph.hpp"

namespace sierpinski {

enum class CodeKind { Dominating, TotalDominating, Identifying, LocatingDominating };

const char* code_kind_name(CodeKind kind);
// Accepts the short CLI names: dom, td, id, ld.
CodeKind parse_code_kind(const std::string& name);

// A vertex subset over a specific S(n,k).
struct Code {
    Bitset members;
    int n = 0;
    int k = 0;

    std::size_t size() const { return members.count(); }
};

struct VerificationReport {
    bool valid = false;
    CodeKind kind = CodeKind::Dominating;
    // Failure witness: an uncovered (or non-totally-covered) vertex, or an
    // unseparated pair together with its shared I-set.
    std::optional<VertexId> uncovered;
    std::optional<std::pair<VertexId, VertexId>> unseparated;
    std::vector<VertexId> shared_iset;
};

// I(u,C): the code members in the closed neighborhood of u, sorted.
std::vector<VertexId> ball(const Graph& g, VertexId u, const Bitset& code);

VerificationReport is_dominating(const Graph& g, const Bitset& code);
VerificationReport is_total_dominating(const Graph& g, const Bitset& code);
VerificationReport is_identifying(const Graph& g, const Bitset& code);
VerificationReport is_locating_dominating(const Graph& g, const Bitset& code);

VerificationReport verify(const Graph& g, const Bitset& code, CodeKind kind);

// No two distinct vertices with equal closed neighborhoods; equivalent to
// the full vertex set being an identifying code.
bool is_twin_free(const Graph& g);

std::vector<CodeKind> classify(const Graph& g, const Bitset& code);

// Code file format: one label per line ("0,1"), blank lines and '#'
// comments ignored.
Code parse_code(std::istream& in, const SierpinskiGraph& g);
std::string format_code(const Code& code, const SierpinskiGraph& g);

}  // namespace sierpinski
