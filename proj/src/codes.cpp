#include "sierpinski/codes.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace sierpinski {

const char* code_kind_name(CodeKind kind) {
    switch (kind) {
        case CodeKind::Dominating: return "dominating";
        case CodeKind::TotalDominating: return "total-dominating";
        case CodeKind::Identifying: return "identifying";
        case CodeKind::LocatingDominating: return "locating-dominating";
    }
    return "?";
}

CodeKind parse_code_kind(const std::string& name) {
    if (name == "dom" || name == "dominating") return CodeKind::Dominating;
    if (name == "td" || name == "total-dominating") return CodeKind::TotalDominating;
    if (name == "id" || name == "identifying") return CodeKind::Identifying;
    if (name == "ld" || name == "locating-dominating") return CodeKind::LocatingDominating;
    throw std::invalid_argument("unknown code kind '" + name + "'");
}

std::vector<VertexId> ball(const Graph& g, VertexId u, const Bitset& code) {
    std::vector<VertexId> out;
    // closed neighborhood, keeping the result sorted
    bool self_emitted = false;
    for (VertexId v : g.neighbors(u)) {
        if (!self_emitted && u < v) {
            if (code.test(u)) out.push_back(u);
            self_emitted = true;
        }
        if (code.test(v)) out.push_back(v);
    }
    if (!self_emitted && code.test(u)) out.push_back(u);
    return out;
}

namespace {

bool covered(const Graph& g, VertexId u, const Bitset& code, bool total) {
    if (!total && code.test(u)) return true;
    for (VertexId v : g.neighbors(u))
        if (code.test(v)) return true;
    return false;
}

VerificationReport coverage_report(const Graph& g, const Bitset& code,
                                   CodeKind kind, bool total) {
    VerificationReport r;
    r.kind = kind;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (!covered(g, u, code, total)) {
            r.valid = false;
            r.uncovered = u;
            return r;
        }
    }
    r.valid = true;
    return r;
}

struct IsetHash {
    std::size_t operator()(const std::vector<VertexId>& v) const {
        std::size_t h = v.size();
        for (VertexId x : v) h = h * 1000003u + x + 1;
        return h;
    }
};

// Buckets vertices in `subject` by their I-set; reports the first collision.
VerificationReport separation_report(const Graph& g, const Bitset& code,
                                     CodeKind kind, const Bitset* subject) {
    VerificationReport r = coverage_report(g, code, kind, /*total=*/false);
    if (!r.valid) return r;
    std::unordered_map<std::vector<VertexId>, VertexId, IsetHash> seen;
    seen.reserve(g.vertex_count());
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (subject && !subject->test(u)) continue;
        auto iset = ball(g, u, code);
        auto [it, inserted] = seen.emplace(std::move(iset), u);
        if (!inserted) {
            r.valid = false;
            r.unseparated = {it->second, u};
            r.shared_iset = it->first;
            return r;
        }
    }
    return r;
}

}  // namespace

VerificationReport is_dominating(const Graph& g, const Bitset& code) {
    return coverage_report(g, code, CodeKind::Dominating, false);
}

VerificationReport is_total_dominating(const Graph& g, const Bitset& code) {
    return coverage_report(g, code, CodeKind::TotalDominating, true);
}

VerificationReport is_identifying(const Graph& g, const Bitset& code) {
    return separation_report(g, code, CodeKind::Identifying, nullptr);
}

VerificationReport is_locating_dominating(const Graph& g, const Bitset& code) {
    Bitset outside = ~code;
    return separation_report(g, code, CodeKind::LocatingDominating, &outside);
}

VerificationReport verify(const Graph& g, const Bitset& code, CodeKind kind) {
    switch (kind) {
        case CodeKind::Dominating: return is_dominating(g, code);
        case CodeKind::TotalDominating: return is_total_dominating(g, code);
        case CodeKind::Identifying: return is_identifying(g, code);
        case CodeKind::LocatingDominating: return is_locating_dominating(g, code);
    }
    throw std::logic_error("verify: bad kind");
}

bool is_twin_free(const Graph& g) {
    Bitset all(g.vertex_count());
    all.set_all();
    return is_identifying(g, all).valid;
}

std::vector<CodeKind> classify(const Graph& g, const Bitset& code) {
    std::vector<CodeKind> out;
    for (CodeKind kind : {CodeKind::Dominating, CodeKind::TotalDominating,
                          CodeKind::Identifying, CodeKind::LocatingDominating})
        if (verify(g, code, kind).valid) out.push_back(kind);
    return out;
}

Code parse_code(std::istream& in, const SierpinskiGraph& g) {
    Code code;
    code.n = g.n();
    code.k = g.k();
    code.members = Bitset(g.vertex_count());
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto from = line.find_first_not_of(" \t\r");
        if (from == std::string::npos) continue;
        auto to = line.find_last_not_of(" \t\r");
        std::string token = line.substr(from, to - from + 1);
        try {
            code.members.set(g.parse_label(token));
        } catch (const std::exception& e) {
            throw std::invalid_argument("code file line " + std::to_string(lineno) +
                                        ": " + e.what());
        }
    }
    return code;
}

std::string format_code(const Code& code, const SierpinskiGraph& g) {
    if (code.n != g.n() || code.k != g.k())
        throw std::invalid_argument("format_code: code belongs to another graph");
    std::string out;
    code.members.for_each([&](std::size_t u) {
        out += g.label_string(static_cast<VertexId>(u));
        out += '\n';
    });
    return out;
}

}  // namespace sierpinski
