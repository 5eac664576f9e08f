// pybind11 bindings for the main operations: graph construction and export,
// code verification, the explicit constructions, and the exact solver.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sierpinski/codes.hpp"
#include "sierpinski/constructions.hpp"
#include "sierpinski/sierpinski_graph.hpp"
#include "sierpinski/solver.hpp"

namespace py = pybind11;
using namespace sierpinski;

namespace {

Bitset labels_to_bitset(const SierpinskiGraph& g,
                        const std::vector<std::vector<int>>& labels) {
    Bitset b(g.vertex_count());
    for (const auto& label : labels) b.set(g.encode(label));
    return b;
}

std::vector<std::vector<int>> bitset_to_labels(const SierpinskiGraph& g,
                                               const Bitset& b) {
    std::vector<std::vector<int>> out;
    b.for_each([&](std::size_t u) {
        out.push_back(g.decode(static_cast<VertexId>(u)));
    });
    return out;
}

py::dict report_to_dict(const SierpinskiGraph& g, const VerificationReport& r) {
    py::dict d;
    d["valid"] = r.valid;
    d["kind"] = std::string(code_kind_name(r.kind));
    if (r.uncovered) d["uncovered"] = g.decode(*r.uncovered);
    if (r.unseparated) {
        d["unseparated"] = py::make_tuple(g.decode(r.unseparated->first),
                                          g.decode(r.unseparated->second));
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_sierpinski, m) {
    m.doc() = "Sierpinski graph covering-code toolkit";

    py::class_<SierpinskiGraph>(m, "SierpinskiGraph")
        .def(py::init<int, int>(), py::arg("n"), py::arg("k"))
        .def_static("recursive",
                    [](int n, int k) { return SierpinskiGraph::recursive(n, k); },
                    py::arg("n"), py::arg("k"))
        .def_property_readonly("n", &SierpinskiGraph::n)
        .def_property_readonly("k", &SierpinskiGraph::k)
        .def_property_readonly("vertex_count", &SierpinskiGraph::vertex_count)
        .def_property_readonly("edge_count", &SierpinskiGraph::edge_count)
        .def("encode", &SierpinskiGraph::encode)
        .def("decode", &SierpinskiGraph::decode)
        .def("adjacent",
             [](const SierpinskiGraph& g, const std::vector<int>& a,
                const std::vector<int>& b) {
                 return g.adjacent(g.encode(a), g.encode(b));
             })
        .def("is_extreme",
             [](const SierpinskiGraph& g, const std::vector<int>& a) {
                 return g.is_extreme(g.encode(a));
             })
        .def("clique_of",
             [](const SierpinskiGraph& g, const std::vector<int>& a) {
                 std::vector<std::vector<int>> out;
                 for (VertexId v : g.clique_of(g.encode(a))) out.push_back(g.decode(v));
                 return out;
             })
        .def("crossing_partner",
             [](const SierpinskiGraph& g, const std::vector<int>& a)
                 -> std::optional<std::vector<int>> {
                 auto p = g.crossing_partner(g.encode(a));
                 if (!p) return std::nullopt;
                 return g.decode(*p);
             })
        .def("crossing_edges",
             [](const SierpinskiGraph& g) {
                 std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
                 for (auto [u, v] : g.crossing_edges())
                     out.emplace_back(g.decode(u), g.decode(v));
                 return out;
             })
        .def("export_text",
             [](const SierpinskiGraph& g, const std::string& format) {
                 return g.export_text(SierpinskiGraph::parse_format(format));
             },
             py::arg("format"))
        .def("is_twin_free",
             [](const SierpinskiGraph& g) { return is_twin_free(g.graph()); })
        .def("verify",
             [](const SierpinskiGraph& g, const std::string& kind,
                const std::vector<std::vector<int>>& labels) {
                 auto r = verify(g.graph(), labels_to_bitset(g, labels),
                                 parse_code_kind(kind));
                 return report_to_dict(g, r);
             },
             py::arg("kind"), py::arg("code"))
        .def("classify",
             [](const SierpinskiGraph& g,
                const std::vector<std::vector<int>>& labels) {
                 std::vector<std::string> out;
                 for (CodeKind kind : classify(g.graph(), labels_to_bitset(g, labels)))
                     out.emplace_back(code_kind_name(kind));
                 return out;
             },
             py::arg("code"))
        .def("structural_lower_bound",
             [](const SierpinskiGraph& g, const std::string& kind) {
                 return structural_lower_bound(g, parse_code_kind(kind));
             },
             py::arg("kind"));

    m.def("construct_code",
          [](const std::string& kind, int n, int k) {
              SierpinskiGraph g(n, k);
              return bitset_to_labels(g, construct_code(parse_code_kind(kind), n, k).members);
          },
          py::arg("kind"), py::arg("n"), py::arg("k"));

    m.def("predicted_size",
          [](const std::string& kind, int n, int k) {
              return predicted_size(parse_code_kind(kind), n, k);
          },
          py::arg("kind"), py::arg("n"), py::arg("k"));

    m.def("conjecture_bound", &conjecture_bound, py::arg("n"), py::arg("k"));

    m.def("solve",
          [](const std::string& kind, int n, int k,
             std::optional<std::uint64_t> node_budget, bool use_structural_bound) {
              SierpinskiGraph g(n, k);
              SolveOptions opts;
              opts.kind = parse_code_kind(kind);
              if (node_budget) opts.node_budget = node_budget;
              if (use_structural_bound && n >= 2) {
                  opts.lower_bound_hint =
                      static_cast<std::size_t>(structural_lower_bound(g, opts.kind));
                  if (opts.kind != CodeKind::Dominating)
                      opts.initial_upper_bound = construct_code(opts.kind, n, k).members;
              }
              SolveResult res = min_code(g.graph(), opts);
              py::dict d;
              d["status"] = std::string(solve_status_name(res.status));
              d["nodes_explored"] = res.nodes_explored;
              if (res.min_size) d["min_size"] = *res.min_size;
              if (res.witness) d["witness"] = bitset_to_labels(g, *res.witness);
              return d;
          },
          py::arg("kind"), py::arg("n"), py::arg("k"),
          py::arg("node_budget") = std::nullopt,
          py::arg("use_structural_bound") = true);

    m.def("certify_paper_value",
          [](const std::string& kind, int n, int k) {
              auto rep = certify_paper_value(n, k, parse_code_kind(kind));
              py::dict d;
              d["value"] = rep.value;
              d["method"] = rep.method;
              d["matches_predicted"] = rep.matches_predicted;
              return d;
          },
          py::arg("kind"), py::arg("n"), py::arg("k"));
}
