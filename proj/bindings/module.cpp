#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nsflow/builders.hpp"
#include "nsflow/document.hpp"
#include "nsflow/gf2.hpp"
#include "nsflow/graph.hpp"
#include "nsflow/template.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace nsflow;

namespace {

using Rows = std::vector<std::vector<std::uint64_t>>;

VertexLabel label_from_args(const std::string& kind, const std::optional<Rows>& matrix,
                            const std::optional<int>& index) {
    if (kind == "attractor") return VertexLabel::attractor();
    if (kind == "repeller") return VertexLabel::repeller();
    if (kind == "boundary") return VertexLabel::boundary();
    if (kind == "saddle") {
        if (!matrix) throw std::invalid_argument("saddle label needs a matrix");
        return VertexLabel::saddle(IntMatrix::from_rows(*matrix));
    }
    if (kind == "singularity") {
        if (!index) throw std::invalid_argument("singularity label needs an index");
        return VertexLabel::singularity(*index);
    }
    throw std::invalid_argument("unknown label kind: " + kind);
}

std::string label_kind_name(LabelKind kind) {
    switch (kind) {
        case LabelKind::attractor: return "attractor";
        case LabelKind::repeller: return "repeller";
        case LabelKind::saddle: return "saddle";
        case LabelKind::singularity: return "singularity";
        case LabelKind::boundary: return "boundary";
    }
    return "?";
}

WalkDirection direction_from_name(const std::string& name) {
    if (name == "forward") return WalkDirection::forward;
    if (name == "backward") return WalkDirection::backward;
    throw std::invalid_argument("direction must be 'forward' or 'backward'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Lyapunov graphs and templates of nonsingular Smale flows on 3-manifolds";

    // ----- matrices over the integers and the two-element field -----
    m.def(
        "mod2_reduce",
        [](const Rows& rows) {
            const Gf2Matrix b = mod2_reduce(IntMatrix::from_rows(rows));
            Rows out(b.dim(), std::vector<std::uint64_t>(b.dim(), 0));
            for (std::size_t i = 0; i < b.dim(); ++i)
                for (std::size_t j = 0; j < b.dim(); ++j) out[i][j] = b.at(i, j) ? 1 : 0;
            return out;
        },
        py::arg("matrix"), "Entrywise reduction mod 2.");
    m.def(
        "kernel_dim",
        [](const Rows& rows) { return kernel_dim(mod2_reduce(IntMatrix::from_rows(rows))); },
        py::arg("matrix"),
        "dim ker(I - B) over the two-element field, B the matrix mod 2.");
    m.def(
        "ssft_k", [](const Rows& rows) { return ssft_k(IntMatrix::from_rows(rows)); },
        py::arg("matrix"), "The k-invariant of the subshift with this transition matrix.");
    m.def(
        "is_irreducible",
        [](const Rows& rows) { return is_irreducible(IntMatrix::from_rows(rows)); },
        py::arg("matrix"), "Strong connectivity of the support digraph.");
    m.def(
        "find_matrix_with_k", [](std::size_t k) { return find_matrix_with_k(k).rows(); },
        py::arg("k"), "Deterministic irreducible matrix with the prescribed k-invariant.");

    // ----- diagnostics -----
    py::class_<Diagnostic>(m, "Diagnostic")
        .def_readonly("code", &Diagnostic::code)
        .def_readonly("subject", &Diagnostic::subject)
        .def_readonly("message", &Diagnostic::message)
        .def("__repr__", [](const Diagnostic& d) { return render(d); });

    // ----- Lyapunov graphs -----
    py::class_<LyapunovGraph>(m, "LyapunovGraph")
        .def(py::init<>())
        .def(
            "add_vertex",
            [](LyapunovGraph& g, const std::string& id, const std::string& kind,
               const std::optional<Rows>& matrix, const std::optional<int>& index) {
                g.add_vertex(id, label_from_args(kind, matrix, index));
            },
            py::arg("id"), py::arg("kind"), py::arg("matrix") = py::none(),
            py::arg("index") = py::none())
        .def("add_edge", &LyapunovGraph::add_edge, py::arg("id"), py::arg("from_vertex"),
             py::arg("to_vertex"), py::arg("weight"))
        .def("set_weight", &LyapunovGraph::set_weight, py::arg("id"), py::arg("weight"))
        .def("vertices",
             [](const LyapunovGraph& g) {
                 std::vector<py::dict> out;
                 for (const Vertex& v : g.vertices()) {
                     py::dict d;
                     d["id"] = v.id;
                     d["kind"] = label_kind_name(v.label.kind);
                     if (v.label.matrix) d["matrix"] = v.label.matrix->rows();
                     if (v.label.index) d["index"] = *v.label.index;
                     out.push_back(d);
                 }
                 return out;
             })
        .def("edges",
             [](const LyapunovGraph& g) {
                 std::vector<py::dict> out;
                 for (const Edge& e : g.edges()) {
                     py::dict d;
                     d["id"] = e.id;
                     d["from"] = e.from;
                     d["to"] = e.to;
                     d["weight"] = e.weight;
                     out.push_back(d);
                 }
                 return out;
             })
        .def("to_json", [](const LyapunovGraph& g) { return serialize_graph_document(g); })
        .def_static(
            "from_json", [](const std::string& text) { return parse_graph_document(text); },
            py::arg("text"))
        .def("to_dot", [](const LyapunovGraph& g) { return export_dot(g); })
        .def("__eq__", [](const LyapunovGraph& a, const LyapunovGraph& b) { return a == b; })
        .def("__repr__", [](const LyapunovGraph& g) {
            return "<LyapunovGraph with " + std::to_string(g.vertices().size()) +
                   " vertices, " + std::to_string(g.edges().size()) + " edges>";
        });

    m.def("validate_abstract", &validate_abstract, py::arg("graph"));
    m.def("cycle_rank", &cycle_rank, py::arg("graph"));
    m.def("vertex_residual", &vertex_residual, py::arg("graph"), py::arg("vertex"));

    py::class_<BalanceViolation>(m, "BalanceViolation")
        .def_readonly("vertex", &BalanceViolation::vertex)
        .def_readonly("actual", &BalanceViolation::actual)
        .def_readonly("required", &BalanceViolation::required);
    m.def("nsf_balance_check", &nsf_balance_check, py::arg("graph"));

    py::class_<S3Condition>(m, "S3Condition")
        .def_readonly("ok", &S3Condition::pass)
        .def_readonly("details", &S3Condition::details);
    py::class_<S3Report>(m, "S3Report")
        .def_readonly("preamble", &S3Report::preamble)
        .def_readonly("condition1", &S3Report::condition1)
        .def_readonly("condition2", &S3Report::condition2)
        .def_readonly("condition3", &S3Report::condition3)
        .def_property_readonly("ok", &S3Report::pass);
    m.def("check_s3", &check_s3, py::arg("graph"));

    m.def(
        "reachable_by_nonzero",
        [](const LyapunovGraph& g, const std::string& start, const std::string& direction) {
            return reachable_by_nonzero(g, start, direction_from_name(direction));
        },
        py::arg("graph"), py::arg("start"), py::arg("direction") = "forward");
    m.def("vanishing_zero_edges", &vanishing_zero_edges, py::arg("graph"), py::arg("edge"));

    py::class_<SummandReport>(m, "SummandReport")
        .def_readonly("n", &SummandReport::n)
        .def_readonly("certificate", &SummandReport::certificate)
        .def_readonly("ok", &SummandReport::ok)
        .def_readonly("cycle_rank", &SummandReport::cycle_rank)
        .def_readonly("rank_at_least_n", &SummandReport::rank_at_least_n)
        .def_readonly("diagnostics", &SummandReport::diagnostics);
    m.def("summand_lower_bound", &summand_lower_bound, py::arg("graph"));

    py::class_<TemplateVertexReport>(m, "TemplateVertexReport")
        .def_readonly("s", &TemplateVertexReport::s)
        .def_readonly("genus_sum", &TemplateVertexReport::genus_sum)
        .def_readonly("g_T", &TemplateVertexReport::g_T)
        .def_readonly("s_ok", &TemplateVertexReport::s_ok)
        .def_readonly("genus_ok", &TemplateVertexReport::genus_ok)
        .def_readonly("summand_ok", &TemplateVertexReport::summand_ok)
        .def_readonly("certificate", &TemplateVertexReport::certificate);
    m.def("check_template_vertex", &check_template_vertex, py::arg("graph"), py::arg("vertex"),
          py::arg("report"));

    // ----- builders -----
    m.def("build_lemma34", &build_lemma34, py::arg("n"));
    m.def("build_prop35", &build_prop35, py::arg("n"));
    m.def("surgery_connect", &surgery_connect, py::arg("left"), py::arg("left_edge"),
          py::arg("right"), py::arg("right_edge"));
    m.def("build_section5", [] {
        SectionFiveGraphs pair = build_section5();
        return py::make_tuple(pair.G, pair.L);
    });

    // ----- templates -----
    py::class_<Template>(m, "Template")
        .def(py::init<>())
        .def(
            "add_chart",
            [](Template& t, const std::string& id, const std::string& kind) {
                if (kind != "joining" && kind != "splitting")
                    throw std::invalid_argument("chart kind must be joining or splitting");
                t.charts.push_back(
                    {id, kind == "joining" ? ChartKind::joining : ChartKind::splitting});
            },
            py::arg("id"), py::arg("kind"))
        .def(
            "add_strip",
            [](Template& t, const std::string& from_chart, const std::string& from_port,
               const std::string& to_chart, const std::string& to_port, int twist) {
                t.strips.push_back({{from_chart, port_from_name(from_port)},
                                    {to_chart, port_from_name(to_port)},
                                    twist});
            },
            py::arg("from_chart"), py::arg("from_port"), py::arg("to_chart"),
            py::arg("to_port"), py::arg("twist") = 0)
        .def("charts",
             [](const Template& t) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (const Chart& c : t.charts)
                     out.push_back(
                         {c.id, c.kind == ChartKind::joining ? "joining" : "splitting"});
                 return out;
             })
        .def("strips",
             [](const Template& t) {
                 std::vector<py::dict> out;
                 for (const Strip& s : t.strips) {
                     py::dict d;
                     d["from"] = py::make_tuple(s.from.chart, port_name(s.from.port));
                     d["to"] = py::make_tuple(s.to.chart, port_name(s.to.port));
                     d["twist"] = s.twist;
                     out.push_back(d);
                 }
                 return out;
             })
        .def("to_json", [](const Template& t) { return serialize_template_document(t); })
        .def_static(
            "from_json", [](const std::string& text) { return parse_template_document(text); },
            py::arg("text"))
        .def("__eq__", [](const Template& a, const Template& b) { return a == b; })
        .def("__repr__", [](const Template& t) {
            return "<Template with " + std::to_string(t.charts.size()) + " charts, " +
                   std::to_string(t.strips.size()) + " strips>";
        });

    m.def("validate_template", &validate_template, py::arg("template"));
    m.def("build_lorenz", &build_lorenz);

    py::class_<SurfaceComponent>(m, "SurfaceComponent")
        .def_readonly("entrance", &SurfaceComponent::entrance)
        .def_readonly("euler_char", &SurfaceComponent::euler_char)
        .def_readonly("boundary_circles", &SurfaceComponent::boundary_circles)
        .def_readonly("capped_genus", &SurfaceComponent::capped_genus);
    py::class_<ClosedComponent>(m, "ClosedComponent")
        .def_readonly("euler_char", &ClosedComponent::euler_char)
        .def_readonly("genus", &ClosedComponent::genus);
    py::class_<BoundaryReport>(m, "BoundaryReport")
        .def_readonly("entrance", &BoundaryReport::entrance)
        .def_readonly("exit", &BoundaryReport::exit)
        .def_readonly("closed", &BoundaryReport::closed)
        .def_readonly("dividing_curves", &BoundaryReport::dividing_curves)
        .def_readonly("curve_entrance_component", &BoundaryReport::curve_entrance_component)
        .def_readonly("curve_exit_component", &BoundaryReport::curve_exit_component)
        .def_readonly("s0", &BoundaryReport::s0)
        .def_readonly("s1", &BoundaryReport::s1)
        .def_readonly("t0", &BoundaryReport::t0)
        .def_readonly("t1", &BoundaryReport::t1)
        .def_readonly("total_boundary_euler", &BoundaryReport::total_boundary_euler);
    m.def("thicken_boundary", &thicken_boundary, py::arg("template"));
    m.def("template_genus", &template_genus, py::arg("report"));
    m.def("check_lemma41", &check_lemma41, py::arg("report"));
    m.def(
        "enumerate_small_templates",
        [](int max_charts) { return enumerate_small_templates(max_charts); },
        py::arg("max_charts"),
        "All closed connected templates up to chart relabeling; materializes the stream, so "
        "keep max_charts at 4 or below from Python.");
}
