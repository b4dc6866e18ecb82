#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "topecycle/catalogue.hpp"
#include "topecycle/dns.hpp"
#include "topecycle/hamilton.hpp"
#include "topecycle/io.hpp"
#include "topecycle/lattice.hpp"
#include "topecycle/oracle.hpp"

namespace py = pybind11;
using namespace topecycle;

namespace {

Arrangement generate_named(const std::string& family, int n, int s, int m) {
  return generate({family_from_name(family), n, s, m});
}

BuildOptions options(std::uint64_t seed, long long max_topes) {
  BuildOptions opt;
  opt.seed = seed;
  opt.max_topes = max_topes;
  return opt;
}

} // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "tope graphs and Hamiltonian cycles of simplicial hyperplane arrangements";

  py::register_exception<Error>(mod, "TopecycleError");

  py::class_<Arrangement>(mod, "Arrangement")
      .def_property_readonly("dim", &Arrangement::dim)
      .def_property_readonly("field_d", &Arrangement::field_d)
      .def_property_readonly("rank", &Arrangement::rank)
      .def("__len__", &Arrangement::size)
      .def("__repr__",
           [](const Arrangement& a) {
             return "<Arrangement dim=" + std::to_string(a.dim()) + " m=" +
                    std::to_string(a.size()) + ">";
           })
      .def("normal",
           [](const Arrangement& a, int i) {
             std::vector<std::string> out;
             for (const auto& c : a.hyperplane(i).normal) out.push_back(c.str());
             return out;
           })
      .def("text", &write_arrangement);

  py::class_<TopeGraph>(mod, "TopeGraph")
      .def_property_readonly("m", &TopeGraph::m)
      .def_property_readonly("tope_count", &TopeGraph::tope_count)
      .def_property_readonly("edge_count", &TopeGraph::edge_count)
      .def("topes", [](const TopeGraph& g) { return g.topes(); })
      .def("edges",
           [](const TopeGraph& g) {
             std::vector<std::tuple<int, int, int>> out;
             for (const auto& e : g.edges()) out.push_back({e.a, e.b, e.type});
             return out;
           })
      .def("__eq__", [](const TopeGraph& a, const TopeGraph& b) { return a == b; })
      .def("__repr__",
           [](const TopeGraph& g) {
             return "<TopeGraph topes=" + std::to_string(g.tope_count()) + " edges=" +
                    std::to_string(g.edge_count()) + ">";
           })
      .def("text", &write_tope_graph);

  py::class_<HamiltonCertificate>(mod, "HamiltonCertificate")
      .def_readonly("start", &HamiltonCertificate::start)
      .def_readonly("flips", &HamiltonCertificate::flips)
      .def("__len__", [](const HamiltonCertificate& c) { return c.flips.size(); })
      .def("text", &write_certificate);

  mod.def("generate", &generate_named, py::arg("family"), py::arg("n") = 0, py::arg("s") = 0,
          py::arg("m") = 0, "exact generator for the A/B/D/Dns/I2m/R0/R1/R2 families");
  mod.def("parse_arrangement", &parse_arrangement_text);
  mod.def("parse_tope_graph", &parse_tope_graph);
  mod.def("parse_certificate", &parse_certificate);

  mod.def(
      "build_tope_graph",
      [](const Arrangement& a, std::uint64_t seed, long long max_topes) {
        return build_tope_graph(a, options(seed, max_topes));
      },
      py::arg("arrangement"), py::arg("seed") = 0, py::arg("max_topes") = 1000000,
      "wall-crossing tope graph of a simplicial arrangement");
  mod.def("oracle_enumerate", &oracle_enumerate, py::arg("arrangement"),
          py::arg("max_topes") = 1000000, "independent brute-force tope enumeration");
  mod.def("contract_graph", [](const TopeGraph& g, const std::vector<int>& drop) {
    return contract_graph(g, std::set<int>(drop.begin(), drop.end()));
  });

  mod.def("is_supersolvable",
          [](const Arrangement& a) { return supersolvable_decomposition(a).has_value(); });
  mod.def("decomposition_chain", [](const Arrangement& a) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    auto d = supersolvable_decomposition(a);
    if (!d) return out;
    for (const auto& lvl : d->chain) out.push_back({lvl.a0, lvl.a1});
    return out;
  });

  mod.def(
      "supersolvable_cycle",
      [](const Arrangement& a) { return supersolvable_cycle(a); }, py::arg("arrangement"));
  mod.def(
      "dns_cycle", [](int n, int s) { return dns_cycle(n, s); }, py::arg("n"), py::arg("s"));
  mod.def(
      "search_cycle",
      [](const TopeGraph& g, long long budget) -> py::object {
        SearchResult res = search_cycle(g, budget);
        if (res.status == SearchResult::Found) return py::cast(*res.certificate);
        if (res.status == SearchResult::ProvedNone) return py::none();
        throw Error(Errc::SizeLimit, "search budget exceeded");
      },
      py::arg("graph"), py::arg("budget") = 50000000,
      "Hamiltonian cycle by search; None when provably absent");
  mod.def("product_cycle", &product_cycle);

  mod.def("verify_certificate", [](const TopeGraph& g, const HamiltonCertificate& c) {
    VerifyReport rep = verify_certificate(g, c);
    return py::make_tuple(rep.ok(), std::string(verify_status_name(rep.status)), rep.step,
                          rep.detail);
  });
}
