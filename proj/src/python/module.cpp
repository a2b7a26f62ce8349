#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cliquecover/bounds.hpp"
#include "cliquecover/certificate.hpp"
#include "cliquecover/cliques.hpp"
#include "cliquecover/cover.hpp"
#include "cliquecover/exact.hpp"
#include "cliquecover/graph.hpp"
#include "cliquecover/partition.hpp"
#include "cliquecover/sequence.hpp"
#include "cliquecover/sweep.hpp"

namespace py = pybind11;
using namespace cliquecover;

namespace {

std::string cert_json(const CoverCertificate& cert) { return certificate_to_json(cert).dump(); }

GreedySequence seq_of(const std::vector<int>& entries) { return GreedySequence(entries); }

}  // namespace

PYBIND11_MODULE(_cliquecover, m) {
  m.doc() = "clique cover construction, exact solving and bound verification";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def("add_edge", &Graph::add_edge)
      .def("remove_edge", &Graph::remove_edge)
      .def("adjacent", &Graph::adjacent)
      .def("size", &Graph::size)
      .def("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.size()) + ", m=" + std::to_string(g.edge_count()) +
               ")";
      });

  m.def("turan_graph", &turan_graph, py::arg("n"), py::arg("t"));
  m.def("parse_edge_list", [](const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
  });
  m.def("write_edge_list", [](const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
  });

  m.def("count_cliques", &count_cliques, py::arg("g"), py::arg("t"));
  m.def("clique_number", &clique_number);
  m.def("max_clique", &max_clique);
  m.def("is_turan", &is_turan, py::arg("g"), py::arg("t"));

  m.def("greedy_partition", [](const Graph& g) { return greedy_partition(g).parts; });
  m.def("verify_partition", [](const Graph& g, const std::vector<std::vector<int>>& parts) {
    PartitionCheck check = verify_partition(g, CliquePartition{parts});
    return py::make_tuple(check.ok, check.message);
  });

  m.def("value_f", [](const std::vector<int>& entries) {
    FValue v = value_f(seq_of(entries));
    return py::make_tuple(v.s1, v.s2, v.s3, v.f);
  });
  m.def("reduce_sequence", [](const std::vector<int>& entries) {
    return trace_to_json(reduce(seq_of(entries))).dump();
  });
  m.def("closed_form_f",
        [](int kind, int m, int q) { return to_string(closed_form_f(kind, m, q)); });
  m.def("adjustment_bound", [](int m, int q) { return to_string(adjustment_bound(m, q)); });
  m.def("key_lemma_bound", [](int m, int q) { return to_string(key_lemma_bound(m, q)); });

  m.def(
      "build_3cover",
      [](const Graph& g, bool refine) {
        Build3CoverResult built = build_3cover(g);
        if (refine) built = refine_3cover(g, built);
        return cert_json(built.cert);
      },
      py::arg("g"), py::arg("refine") = false);
  m.def("build_4cover", [](const Graph& g) { return cert_json(build_4cover(g)); });
  m.def(
      "exact_min_cover",
      [](const Graph& g, int t, long long node_limit) {
        ExactOptions opt;
        if (node_limit > 0) opt.node_limit = node_limit;
        ExactResult result = exact_min_cover(g, t, opt);
        return cert_json(result.cert);
      },
      py::arg("g"), py::arg("t"), py::arg("node_limit") = 0);
  m.def("validate_cover", [](const Graph& g, const std::string& cert_text) {
    CoverCertificate cert = certificate_from_json(nlohmann::json::parse(cert_text));
    ValidationResult result = validate_cover(g, cert);
    return py::make_tuple(result.ok, result.message);
  });

  m.def("erdos_h", &erdos_h, py::arg("n"), py::arg("k"), py::arg("t"));
  m.def("moon_moser_check", [](const Graph& g, int t) {
    MoonMoserCheck mm = moon_moser_check(g, t);
    return py::make_tuple(mm.holds, to_string(mm.slack));
  });
  m.def("peel_margin", [](long long n, int c) { return to_string(peel_margin(n, c)); });
  m.def("base_case_margin", [](long long n) { return to_string(base_case_margin(n)); });
  m.def("chain_check", [](long long n) {
    ChainCheckResult r = chain_check(n);
    return py::make_tuple(r.pass, r.pairs, static_cast<long long>(r.equalities.size()));
  });
}
