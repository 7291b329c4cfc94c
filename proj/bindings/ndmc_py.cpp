#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ndmc/checker.hpp"
#include "ndmc/cliquewidth.hpp"
#include "ndmc/hardness.hpp"
#include "ndmc/parser.hpp"
#include "ndmc/quotient.hpp"
#include "ndmc/solvers.hpp"
#include "ndmc/vertex_cover.hpp"

namespace py = pybind11;
using namespace ndmc;

namespace {

// Opaque immutable handle; the AST itself stays const-shared.
struct PyFormula {
    FormulaPtr ptr;
};

CheckerOptions make_options(uint64_t budget, bool memoize) {
    CheckerOptions opts;
    opts.budget = budget;
    opts.memoize = memoize;
    return opts;
}

py::dict stage_report(const HardnessInstance& inst) {
    py::dict meta;
    meta["stage"] = stage_name(inst.stage);
    meta["vertices"] = inst.graph.n;
    meta["bit_width"] = inst.metadata.bit_width;
    meta["vertex_cover"] = inst.metadata.vertex_cover_size;
    const SentenceMetrics& sm = inst.metadata.sentence_metrics;
    py::dict m;
    m["q_v"] = sm.q_v;
    m["q_s"] = sm.q_s;
    m["depth"] = sm.depth;
    m["size"] = sm.size;
    meta["metrics"] = m;
    py::dict out;
    out["graph"] = render_graph(inst.graph);
    out["formula"] = render(inst.sentence);
    out["metadata"] = meta;
    return out;
}

}  // namespace

PYBIND11_MODULE(ndmc, m) {
    m.doc() = "FO/MSO model checking on colored labeled graphs via neighborhood diversity";

    py::register_exception<InputError>(m, "InputError");
    py::register_exception<ResourceError>(m, "ResourceError");
    py::register_exception<ParseError>(m, "FormulaParseError");

    py::class_<Graph>(m, "Graph")
        .def_static("parse", &parse_graph, py::arg("text"))
        .def_readonly("directed", &Graph::directed)
        .def_readonly("n", &Graph::n)
        .def("edge_count", &Graph::edge_count)
        .def("__str__", &render_graph);

    py::class_<PyFormula>(m, "Formula")
        .def_static("parse",
                    [](const std::string& text) { return PyFormula{parse_formula(text)}; },
                    py::arg("text"))
        .def("__str__", [](const PyFormula& f) { return render(f.ptr); });

    m.def("parse_graph", &parse_graph, py::arg("text"));
    m.def(
        "parse_formula", [](const std::string& text) { return PyFormula{parse_formula(text)}; },
        py::arg("text"));
    m.def(
        "render_formula", [](const PyFormula& f) { return render(f.ptr); }, py::arg("formula"));
    m.def(
        "to_prenex", [](const PyFormula& f) { return PyFormula{to_prenex(f.ptr)}; },
        py::arg("formula"));
    m.def(
        "formula_metrics",
        [](const PyFormula& f) {
            SentenceMetrics sm = metrics(f.ptr);
            py::dict d;
            d["q_v"] = sm.q_v;
            d["q_s"] = sm.q_s;
            d["depth"] = sm.depth;
            d["size"] = sm.size;
            return d;
        },
        py::arg("formula"));

    m.def("nd", &nd, py::arg("graph"), "Neighborhood diversity");
    m.def(
        "vertex_cover",
        [](const Graph& g) {
            VertexCoverResult r = vertex_cover(g);
            return py::make_tuple(r.size, r.cover);
        },
        py::arg("graph"), "Minimum vertex cover: (size, lexicographically smallest cover)");
    m.def(
        "quotient",
        [](const Graph& g) {
            QuotientGraph q = quotient_graph(g, neighborhood_partition(g));
            py::list nodes;
            for (int i = 0; i < q.width(); ++i) {
                py::dict d;
                d["kind"] = q.nodes[i].kind == ClassKind::clique ? "clique" : "independent";
                d["size"] = q.nodes[i].size;
                d["neighbors"] = q.adj[i];
                nodes.append(d);
            }
            return nodes;
        },
        py::arg("graph"));

    m.def(
        "check",
        [](const Graph& g, const PyFormula& f, const std::string& engine, uint64_t budget,
           bool memoize) {
            if (engine == "naive") {
                EvalOptions opts;
                opts.budget = budget;
                return eval_naive(g, f.ptr, opts);
            }
            return check_mso(g, f.ptr, make_options(budget, memoize));
        },
        py::arg("graph"), py::arg("formula"), py::arg("engine") = "fast", py::arg("budget") = 0,
        py::arg("memoize") = true,
        "Decide graph |= sentence with the chosen engine");

    m.def("chromatic_number", &chromatic_number, py::arg("graph"));
    m.def("hamiltonian_cycle", &hamiltonian_cycle, py::arg("graph"));
    m.def("eds_size", &eds_size, py::arg("graph"), "Minimum edge dominating set size");

    m.def(
        "generate_sat_instance",
        [](const std::string& dimacs, const std::string& stage, int weighted, bool fo_path,
           bool compute_vc) {
            CnfFormula cnf = parse_dimacs(dimacs);
            GenOptions opts;
            opts.fo_path_encoding = fo_path;
            opts.compute_vertex_cover = compute_vc;
            HardnessInstance inst = sat_to_directed(cnf, opts);
            if (weighted >= 0) {
                inst.sentence = weighted_variant(cnf, weighted);
                inst.metadata.sentence_metrics = metrics(inst.sentence, inst.graph);
            }
            if (stage != "directed") inst = directed_to_undirected(inst, opts);
            if (stage == "uncolored" || stage == "unlabeled") inst = decolor(inst);
            if (stage == "unlabeled") inst = delabel(inst);
            return stage_report(inst);
        },
        py::arg("dimacs"), py::arg("stage") = "directed", py::arg("weighted") = -1,
        py::arg("fo_path") = false, py::arg("compute_vertex_cover") = false,
        "Build a SAT reduction instance; returns {graph, formula, metadata}");
}
