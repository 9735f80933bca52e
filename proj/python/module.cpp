#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ternvec/census.hpp"
#include "ternvec/errors.hpp"
#include "ternvec/generate.hpp"
#include "ternvec/graph_io.hpp"
#include "ternvec/matching.hpp"
#include "ternvec/recognize.hpp"
#include "ternvec/search.hpp"
#include "ternvec/transform.hpp"

namespace py = pybind11;
using namespace ternvec;

namespace {

Graph graph_of(const py::object& obj) {
    if (py::isinstance<Graph>(obj)) return obj.cast<Graph>();
    if (py::isinstance<py::str>(obj)) return parse_graph6(obj.cast<std::string>());
    throw py::type_error("expected a Graph or a graph6 string");
}

Valuation valuation_of(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return Valuation::parse(obj.cast<std::string>());
    std::vector<std::int8_t> values;
    for (const auto& x : obj) {
        const int v = x.cast<int>();
        if (v < -1 || v > 1) throw ContractViolation("valuation entries must be -1, 0 or 1");
        values.push_back(static_cast<std::int8_t>(v));
    }
    return Valuation(std::move(values));
}

std::vector<Certificate> certs(const SearchResult& r) { return r.certificates(); }

py::dict family_dict(const Family& f) {
    py::dict d;
    py::list kinds;
    for (FamilyKind k : f.kinds()) kinds.append(to_string(k));
    d["kinds"] = kinds;
    d["connected"] = f.connected;
    d["cyclomatic"] = f.cyclomatic;
    d["shape"] = f.shape ? py::cast(f.shape->to_string()) : py::none();
    d["regular_degree"] = f.regular_degree ? py::cast(*f.regular_degree) : py::none();
    d["text"] = f.to_string();
    return d;
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const std::vector<Edge>& edges) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const Edge& e : edges) out.emplace_back(e.u, e.v);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bivalent and trivalent Laplacian eigenvectors";

    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    static py::exception<ContractViolation> contract(m, "ContractViolation", PyExc_ValueError);
    static py::exception<Rejected> rejected(m, "Rejected", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::set_error(parse_error, e.what());
        } catch (const ContractViolation& e) {
            py::set_error(contract, e.what());
        } catch (const Rejected& e) {
            py::set_error(rejected, e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
                 std::vector<Edge> es;
                 for (auto [a, b] : edges) es.emplace_back(a, b);
                 return Graph::from_edges(n, es);
             }),
             py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
        .def_static("from_graph6", &parse_graph6)
        .def_static("from_edge_list", &parse_edge_list)
        .def("graph6", &to_graph6)
        .def("edge_list", &to_edge_list)
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("edges", [](const Graph& g) { return edge_pairs(g.edges()); })
        .def("neighbors", [](const Graph& g, Vertex v) {
            const auto nb = g.neighbors(v);
            return std::vector<Vertex>(nb.begin(), nb.end());
        })
        .def("degree", &Graph::degree)
        .def("adjacent", &Graph::adjacent)
        .def("dot", [](const Graph& g) { return to_dot(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph('" + to_graph6(g) + "')"; });

    py::class_<Certificate>(m, "Certificate")
        .def(py::init([](const py::object& g, const py::object& v) { return Certificate(graph_of(g), valuation_of(v)); }),
             py::arg("graph"), py::arg("valuation"))
        .def_static("from_json", &Certificate::from_json)
        .def("to_json", &Certificate::to_json)
        .def_property_readonly("graph", &Certificate::graph)
        .def_property_readonly("lambda_", &Certificate::lambda)
        .def_property_readonly("valuation", [](const Certificate& c) { return c.valuation().to_string(); })
        .def_property_readonly("values", [](const Certificate& c) {
            const auto v = c.valuation().values();
            return std::vector<int>(v.begin(), v.end());
        })
        .def_property_readonly("valence", [](const Certificate& c) { return to_string(c.valence()); })
        .def("equal_links", [](const Certificate& c) { return edge_pairs(equal_links(c)); })
        .def("dot", [](const Certificate& c) { return to_dot(c.graph(), c.valuation().values()); })
        .def("__repr__", [](const Certificate& c) { return "Certificate(" + c.to_json() + ")"; });

    m.def("verify", [](const py::object& g, const py::object& v) { return verify(graph_of(g), valuation_of(v)); },
          py::arg("graph"), py::arg("valuation"),
          "Eigenvalue if the valuation is a Laplacian eigenvector with integer lambda >= 1, else None.");

    m.def("full_spectrum",
          [](const py::object& g) {
              const Graph graph = graph_of(g);
              py::gil_scoped_release release;
              return certs(full_spectrum(graph));
          },
          py::arg("graph"));
    m.def("csp_search",
          [](const py::object& g, int lambda) {
              const Graph graph = graph_of(g);
              py::gil_scoped_release release;
              return certs(csp_search(graph, lambda));
          },
          py::arg("graph"), py::arg("lambda_"));
    m.def("brute_force",
          [](const py::object& g) {
              const Graph graph = graph_of(g);
              py::gil_scoped_release release;
              return certs(brute_force(graph));
          },
          py::arg("graph"));

    m.def("classify_family", [](const py::object& g) { return family_dict(classify_family(graph_of(g))); },
          py::arg("graph"));
    m.def("recognize",
          [](const py::object& g, bool enumerate_all) {
              const FamilyReport r = recognize(graph_of(g), {.enumerate_all = enumerate_all});
              py::list out;
              for (const Finding& f : r.found) {
                  py::dict d;
                  d["lambda"] = f.lambda;
                  d["clause"] = to_string(f.clause);
                  d["count"] = f.count;
                  d["certificate"] = f.certificate;
                  out.append(d);
              }
              return py::make_tuple(to_string(r.family), out);
          },
          py::arg("graph"), py::arg("enumerate_all") = false,
          "(family, findings); raises Rejected outside trees, unicyclic, bicyclic and cactus graphs.");
    m.def("decompose",
          [](const Certificate& c) {
              const Decomposition d = decompose(c);
              py::list comps;
              for (const Component& comp : d.components) {
                  py::dict x;
                  x["class"] = comp.cls.to_string();
                  x["kind"] = to_string(comp.cls.kind);
                  x["vertices"] = comp.vertices;
                  x["lambda"] = comp.cls.lambda ? py::cast(*comp.cls.lambda) : py::none();
                  comps.append(x);
              }
              return py::make_tuple(edge_pairs(d.equal_links), comps);
          },
          py::arg("certificate"));

    m.def("add_equal_link", &add_equal_link);
    m.def("remove_equal_link", &remove_equal_link);

    m.def("gen_p2_tree", [](int p) { return gen_p2_tree(p); }, py::arg("p"));
    m.def("gen_soft_star", &gen_soft_star, py::arg("k"));
    m.def("gen_cycle",
          [](const std::string& kind, int k) {
              if (kind == "c4k") return gen_cycle(CycleKind::C4k, k);
              if (kind == "c3k") return gen_cycle(CycleKind::C3k, k);
              if (kind == "c2k") return gen_cycle(CycleKind::C2k, k);
              throw ParseError("unknown cycle kind '" + kind + "'", 0);
          },
          py::arg("kind"), py::arg("k"));
    m.def("gen_B1", &gen_B1, py::arg("p"), py::arg("q"), py::arg("lambda_") = std::nullopt);
    m.def("gen_B3", [](const std::vector<int>& chains) { return gen_B3(chains); }, py::arg("chains"));
    m.def("gen_diamond", &gen_diamond);
    m.def("gen_regular_bipartite", &gen_regular_bipartite, py::arg("k"), py::arg("l"));
    m.def("gen_counterexample", &gen_counterexample);

    m.def("perfect_matching_partition",
          [](const py::object& g) {
              const Graph graph = graph_of(g);
              std::vector<std::vector<std::pair<Vertex, Vertex>>> out;
              for (const auto& mt : perfect_matching_partition(graph).matchings) out.push_back(edge_pairs(mt));
              return out;
          },
          py::arg("graph"));
    m.def("is_hamiltonian", [](const py::object& g) { return is_hamiltonian(graph_of(g)); }, py::arg("graph"));
    m.def("cyclomatic_check", &cyclomatic_check, py::arg("n"), py::arg("d"));
    m.def("achievable_c", &achievable_c, py::arg("c"), py::arg("max_order") = 200);

    m.def("census_row",
          [](const py::object& g, bool oracle_check, bool families) -> py::object {
              CensusOptions o;
              o.oracle_check = oracle_check;
              o.families = families;
              const auto row = census_row(graph_of(g), o);
              if (!row) return py::none();
              return py::module_::import("json").attr("loads")(row->to_jsonl(false));
          },
          py::arg("graph"), py::arg("oracle_check") = false, py::arg("families") = false);
}
