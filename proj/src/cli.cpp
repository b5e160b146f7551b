#include "nsflow/cli.hpp"

#include "nsflow/builders.hpp"
#include "nsflow/document.hpp"
#include "nsflow/graph.hpp"
#include "nsflow/template.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace nsflow {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DocumentError("cannot write file: " + path);
    out << content;
}

void print_diagnostics(std::ostream& out, const std::vector<Diagnostic>& diags) {
    for (const Diagnostic& d : diags) out << render(d) << "\n";
}

ordered_json diagnostics_json(const std::vector<Diagnostic>& diags) {
    ordered_json arr = ordered_json::array();
    for (const Diagnostic& d : diags)
        arr.push_back({{"code", d.code}, {"subject", d.subject}, {"message", d.message}});
    return arr;
}

int cmd_graph_validate(const std::string& file, bool as_json, std::ostream& out) {
    const LyapunovGraph g = parse_graph_document(read_file(file));
    const std::vector<Diagnostic> diags = validate_abstract(g);
    if (as_json) {
        out << ordered_json{{"ok", diags.empty()}, {"diagnostics", diagnostics_json(diags)}}.dump(2)
            << "\n";
    } else if (diags.empty()) {
        out << "OK\n";
    } else {
        print_diagnostics(out, diags);
    }
    return diags.empty() ? 0 : 1;
}

int cmd_graph_s3check(const std::string& file, bool as_json, std::ostream& out) {
    const LyapunovGraph g = parse_graph_document(read_file(file));
    const S3Report report = check_s3(g);
    if (as_json) {
        ordered_json doc;
        doc["preamble"] = diagnostics_json(report.preamble);
        doc["condition1"] = {{"pass", report.condition1.pass},
                             {"details", diagnostics_json(report.condition1.details)}};
        doc["condition2"] = {{"pass", report.condition2.pass},
                             {"details", diagnostics_json(report.condition2.details)}};
        doc["condition3"] = {{"pass", report.condition3.pass},
                             {"details", diagnostics_json(report.condition3.details)}};
        doc["pass"] = report.pass();
        out << doc.dump(2) << "\n";
        return report.pass() ? 0 : 1;
    }
    if (report.preamble.empty()) {
        out << "preamble: ok\n";
    } else {
        out << "preamble: " << report.preamble.size() << " violation(s)\n";
        print_diagnostics(out, report.preamble);
    }
    auto show = [&](const char* name, const char* what, const S3Condition& c) {
        out << name << " (" << what << "): " << (c.pass ? "pass" : "fail") << "\n";
        print_diagnostics(out, c.details);
    };
    show("condition1", "tree with degree-1 sinks and sources", report.condition1);
    show("condition2", "saddle k-invariant bounds", report.condition2);
    show("condition3", "Poincare-Hopf balance", report.condition3);
    out << (report.pass() ? "PASS" : "FAIL") << "\n";
    return report.pass() ? 0 : 1;
}

int cmd_graph_residuals(const std::string& file, bool as_json, std::ostream& out) {
    const LyapunovGraph g = parse_graph_document(read_file(file));
    const std::vector<Diagnostic> diags = validate_abstract(g);
    if (!diags.empty()) {
        print_diagnostics(out, diags);
        return 1;
    }
    const std::vector<BalanceViolation> violations = nsf_balance_check(g);
    if (as_json) {
        ordered_json rows = ordered_json::array();
        for (const Vertex& v : g.vertices()) {
            if (v.label.kind == LabelKind::boundary) continue;
            rows.push_back({{"vertex", v.id}, {"residual", vertex_residual(g, v.id)}});
        }
        out << ordered_json{{"ok", violations.empty()}, {"residuals", rows}}.dump(2) << "\n";
        return violations.empty() ? 0 : 1;
    }
    for (const Vertex& v : g.vertices()) {
        if (v.label.kind == LabelKind::boundary) {
            out << v.id << ": boundary (exempt)\n";
            continue;
        }
        const long long actual = vertex_residual(g, v.id);
        long long required = 0;
        if (v.label.kind == LabelKind::singularity) required = *v.label.index % 2 == 0 ? 1 : -1;
        out << v.id << ": residual " << actual << ", required " << required << " "
            << (actual == required ? "(ok)" : "(VIOLATION)") << "\n";
    }
    out << (violations.empty() ? "balanced" : "unbalanced") << "\n";
    return violations.empty() ? 0 : 1;
}

int cmd_graph_summands(const std::string& file, bool as_json, std::ostream& out) {
    const LyapunovGraph g = parse_graph_document(read_file(file));
    const SummandReport report = summand_lower_bound(g);
    if (as_json) {
        out << ordered_json{{"n", report.n},
                            {"ok", report.ok},
                            {"certificate", report.certificate},
                            {"cycle_rank", report.cycle_rank},
                            {"rank_at_least_n", report.rank_at_least_n},
                            {"diagnostics", diagnostics_json(report.diagnostics)}}
                   .dump(2)
            << "\n";
        return report.ok ? 0 : 1;
    }
    out << "n = " << report.n << "\n";
    out << "certificate =";
    for (const std::string& e : report.certificate) out << " " << e;
    out << "\n";
    out << "cycle rank = " << report.cycle_rank << " (>= n: " << (report.rank_at_least_n ? "yes" : "no")
        << ")\n";
    print_diagnostics(out, report.diagnostics);
    out << (report.ok ? "OK" : "NO CERTIFICATE") << "\n";
    return report.ok ? 0 : 1;
}

int cmd_graph_surgery(const std::string& left, const std::string& left_edge,
                      const std::string& right, const std::string& right_edge,
                      const std::string& output, std::ostream& out) {
    const LyapunovGraph l = parse_graph_document(read_file(left));
    const LyapunovGraph r = parse_graph_document(read_file(right));
    const LyapunovGraph result = surgery_connect(l, left_edge, r, right_edge);
    write_file(output, serialize_graph_document(result));
    out << "wrote " << output << "\n";
    return 0;
}

int cmd_template_validate(const std::string& file, bool as_json, std::ostream& out) {
    const Template t = parse_template_document(read_file(file));
    const std::vector<Diagnostic> diags = validate_template(t);
    if (as_json) {
        out << ordered_json{{"ok", diags.empty()}, {"diagnostics", diagnostics_json(diags)}}.dump(2)
            << "\n";
    } else if (diags.empty()) {
        out << "OK\n";
    } else {
        print_diagnostics(out, diags);
    }
    return diags.empty() ? 0 : 1;
}

ordered_json report_json(const Template& t, const BoundaryReport& report) {
    ordered_json doc;
    doc["charts"] = t.charts.size();
    doc["strips"] = t.strips.size();
    doc["total_boundary_euler"] = report.total_boundary_euler;
    doc["closed"] = ordered_json::array();
    for (const ClosedComponent& c : report.closed)
        doc["closed"].push_back({{"euler_char", c.euler_char}, {"genus", c.genus}});
    auto components = [](const std::vector<SurfaceComponent>& list) {
        ordered_json arr = ordered_json::array();
        for (const SurfaceComponent& c : list)
            arr.push_back({{"euler_char", c.euler_char},
                           {"boundary_circles", c.boundary_circles},
                           {"capped_genus", c.capped_genus}});
        return arr;
    };
    doc["entrance"] = components(report.entrance);
    doc["exit"] = components(report.exit);
    doc["dividing_curves"] = report.dividing_curves;
    doc["s0"] = report.s0;
    doc["s1"] = report.s1;
    doc["t0"] = report.t0;
    doc["t1"] = report.t1;
    doc["template_genus"] = template_genus(report);
    doc["lemma41"] = check_lemma41(report);
    return doc;
}

int cmd_template_boundary(const std::string& file, bool as_json, std::ostream& out) {
    const Template t = parse_template_document(read_file(file));
    const std::vector<Diagnostic> diags = validate_template(t);
    if (!diags.empty()) {
        print_diagnostics(out, diags);
        return 1;
    }
    const BoundaryReport report = thicken_boundary(t);
    if (as_json) {
        out << report_json(t, report).dump(2) << "\n";
        return 0;
    }
    out << "charts: " << t.charts.size() << ", strips: " << t.strips.size() << "\n";
    out << "total boundary euler characteristic: " << report.total_boundary_euler << "\n";
    out << "closed components:\n";
    for (const ClosedComponent& c : report.closed)
        out << "  euler " << c.euler_char << ", genus " << c.genus << "\n";
    auto show = [&](const char* name, const std::vector<SurfaceComponent>& list) {
        out << name << " components:\n";
        for (const SurfaceComponent& c : list)
            out << "  euler " << c.euler_char << ", circles " << c.boundary_circles
                << ", capped genus " << c.capped_genus << "\n";
    };
    show("entrance", report.entrance);
    show("exit", report.exit);
    out << "dividing curves: " << report.dividing_curves << "\n";
    out << "s0 = " << report.s0 << ", s1 = " << report.s1 << ", t0 = " << report.t0
        << ", t1 = " << report.t1 << "\n";
    out << "template genus: " << template_genus(report) << "\n";
    out << "entrance/exit euler identity: " << (check_lemma41(report) ? "ok" : "VIOLATED") << "\n";
    return 0;
}

int cmd_template_genus(const std::string& file, bool as_json, std::ostream& out) {
    const Template t = parse_template_document(read_file(file));
    const std::vector<Diagnostic> diags = validate_template(t);
    if (!diags.empty()) {
        print_diagnostics(out, diags);
        return 1;
    }
    const int genus = template_genus(thicken_boundary(t));
    if (as_json)
        out << ordered_json{{"template_genus", genus}}.dump(2) << "\n";
    else
        out << genus << "\n";
    return 0;
}

int cmd_template_check_vertex(const std::string& graph_file, const std::string& vertex,
                              const std::string& template_file, bool as_json,
                              std::ostream& out) {
    const LyapunovGraph g = parse_graph_document(read_file(graph_file));
    const Template t = parse_template_document(read_file(template_file));
    const std::vector<Diagnostic> diags = validate_template(t);
    if (!diags.empty()) {
        print_diagnostics(out, diags);
        return 1;
    }
    const BoundaryReport report = thicken_boundary(t);
    const TemplateVertexReport r = check_template_vertex(g, vertex, report);
    const bool pass = r.s_ok && r.genus_ok && r.summand_ok;
    if (as_json) {
        out << ordered_json{{"s", r.s},
                            {"genus_sum", r.genus_sum},
                            {"g_T", r.g_T},
                            {"s_ok", r.s_ok},
                            {"genus_ok", r.genus_ok},
                            {"summand_ok", r.summand_ok},
                            {"certificate", r.certificate},
                            {"pass", pass}}
                   .dump(2)
            << "\n";
        return pass ? 0 : 1;
    }
    out << "heavy incoming edges s = " << r.s << ", total weight = " << r.genus_sum << "\n";
    out << "template genus g(T) = " << r.g_T << "\n";
    out << "s <= s0: " << (r.s_ok ? "ok" : "VIOLATED") << "\n";
    out << "sum(g) - s >= g(T): " << (r.genus_ok ? "ok" : "VIOLATED") << "\n";
    out << "g(T) cuttable weight-0 edges: " << (r.summand_ok ? "ok" : "VIOLATED") << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lyapunov graphs and templates of nonsingular Smale flows"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string file, left, left_edge, right, right_edge, output, vertex, graph_file,
        template_file;
    int n = 1;

    auto* graph = app.add_subcommand("graph", "analyze graph documents");
    graph->require_subcommand(1);
    auto* g_validate = graph->add_subcommand("validate", "abstract Lyapunov graph invariants");
    g_validate->add_option("file", file, "graph document")->required();
    auto* g_s3 = graph->add_subcommand("s3check", "realizability conditions on the 3-sphere");
    g_s3->add_option("file", file, "graph document")->required();
    auto* g_residuals = graph->add_subcommand("residuals", "per-vertex balance residuals");
    g_residuals->add_option("file", file, "graph document")->required();
    auto* g_summands = graph->add_subcommand("summands", "summand lower bound with certificate");
    g_summands->add_option("file", file, "graph document")->required();
    auto* g_surgery = graph->add_subcommand("surgery", "connected-sum surgery of two graphs");
    g_surgery->add_option("--left", left, "left graph document")->required();
    g_surgery->add_option("--left-edge", left_edge, "weight-1 edge into a left attractor")
        ->required();
    g_surgery->add_option("--right", right, "right graph document")->required();
    g_surgery->add_option("--right-edge", right_edge, "weight-1 edge into a right attractor")
        ->required();
    g_surgery->add_option("-o,--output", output, "output path")->required();

    auto* gen = app.add_subcommand("gen", "generate example graphs");
    gen->require_subcommand(1);
    auto* gen_lemma = gen->add_subcommand("lemma34", "singular tree with a weight n+1 level");
    gen_lemma->add_option("--n", n, "chain length")->required()->check(CLI::PositiveNumber);
    gen_lemma->add_option("-o,--output", output, "output path")->required();
    auto* gen_prop = gen->add_subcommand("prop35", "spliced graph with cycle rank n");
    gen_prop->add_option("--n", n, "splice count")->required()->check(CLI::PositiveNumber);
    gen_prop->add_option("-o,--output", output, "output path")->required();
    auto* gen_s5 = gen->add_subcommand("section5", "the example pair G and L");
    gen_s5->add_option("-o,--output", output, "output directory")->required();

    auto* tmpl = app.add_subcommand("template", "analyze template documents");
    tmpl->require_subcommand(1);
    auto* t_validate = tmpl->add_subcommand("validate", "chart/strip well-formedness");
    t_validate->add_option("file", file, "template document")->required();
    auto* t_boundary = tmpl->add_subcommand("boundary", "boundary of the thickened template");
    t_boundary->add_option("file", file, "template document")->required();
    auto* t_genus = tmpl->add_subcommand("genus", "template genus");
    t_genus->add_option("file", file, "template document")->required();
    auto* t_lorenz = tmpl->add_subcommand("lorenz", "write the Lorenz template");
    t_lorenz->add_option("-o,--output", output, "output path")->required();
    auto* t_check = tmpl->add_subcommand("check-vertex", "saddle vertex vs template boundary");
    t_check->add_option("--graph", graph_file, "graph document")->required();
    t_check->add_option("--vertex", vertex, "saddle vertex id")->required();
    t_check->add_option("--template", template_file, "template document")->required();

    auto* exp = app.add_subcommand("export", "export to other formats");
    exp->require_subcommand(1);
    auto* exp_dot = exp->add_subcommand("dot", "DOT digraph text");
    exp_dot->add_option("file", file, "graph document")->required();
    exp_dot->add_option("-o,--output", output, "output path")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (g_validate->parsed()) return cmd_graph_validate(file, as_json, out);
        if (g_s3->parsed()) return cmd_graph_s3check(file, as_json, out);
        if (g_residuals->parsed()) return cmd_graph_residuals(file, as_json, out);
        if (g_summands->parsed()) return cmd_graph_summands(file, as_json, out);
        if (g_surgery->parsed())
            return cmd_graph_surgery(left, left_edge, right, right_edge, output, out);
        if (gen_lemma->parsed()) {
            write_file(output, serialize_graph_document(build_lemma34(n)));
            out << "wrote " << output << "\n";
            return 0;
        }
        if (gen_prop->parsed()) {
            write_file(output, serialize_graph_document(build_prop35(n)));
            out << "wrote " << output << "\n";
            return 0;
        }
        if (gen_s5->parsed()) {
            std::filesystem::create_directories(output);
            const SectionFiveGraphs graphs = build_section5();
            const std::string g_path = output + "/section5_G.json";
            const std::string l_path = output + "/section5_L.json";
            write_file(g_path, serialize_graph_document(graphs.G));
            write_file(l_path, serialize_graph_document(graphs.L));
            out << "wrote " << g_path << "\n" << "wrote " << l_path << "\n";
            return 0;
        }
        if (t_validate->parsed()) return cmd_template_validate(file, as_json, out);
        if (t_boundary->parsed()) return cmd_template_boundary(file, as_json, out);
        if (t_genus->parsed()) return cmd_template_genus(file, as_json, out);
        if (t_lorenz->parsed()) {
            write_file(output, serialize_template_document(build_lorenz()));
            out << "wrote " << output << "\n";
            return 0;
        }
        if (t_check->parsed())
            return cmd_template_check_vertex(graph_file, vertex, template_file, as_json, out);
        if (exp_dot->parsed()) {
            write_file(output, export_dot(parse_graph_document(read_file(file))));
            out << "wrote " << output << "\n";
            return 0;
        }
    } catch (const DocumentError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand executed\n";
    return 2;
}

}  // namespace nsflow
