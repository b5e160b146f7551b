#include "nsflow/document.hpp"

#include <json.hpp>

#include <sstream>

namespace nsflow {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DocumentError(std::string("not valid JSON: ") + e.what());
    }
}

const json& member(const json& obj, const std::string& path, const char* key) {
    if (!obj.is_object()) throw DocumentError(path + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw DocumentError(path + ": missing field '" + key + "'");
    return *it;
}

std::string string_at(const json& obj, const std::string& path, const char* key) {
    const json& v = member(obj, path, key);
    if (!v.is_string()) throw DocumentError(path + "." + key + ": expected a string");
    return v.get<std::string>();
}

long long unsigned_at(const json& v, const std::string& path) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw DocumentError(path + ": expected a nonnegative integer");
    return v.get<long long>();
}

}  // namespace

LyapunovGraph parse_graph_document(const std::string& text) {
    const json doc = parse_json(text);
    const json& vertices = member(doc, "document", "vertices");
    const json& edges = member(doc, "document", "edges");
    if (!vertices.is_array()) throw DocumentError("vertices: expected an array");
    if (!edges.is_array()) throw DocumentError("edges: expected an array");

    LyapunovGraph g;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const std::string path = "vertices[" + std::to_string(i) + "]";
        const json& v = vertices[i];
        const std::string id = string_at(v, path, "id");
        const json& label = member(v, path, "label");
        const std::string kind = string_at(label, path + ".label", "kind");

        VertexLabel parsed;
        if (kind == "attractor") {
            parsed = VertexLabel::attractor();
        } else if (kind == "repeller") {
            parsed = VertexLabel::repeller();
        } else if (kind == "boundary") {
            parsed = VertexLabel::boundary();
        } else if (kind == "saddle") {
            const json& rows = member(label, path + ".label", "matrix");
            if (!rows.is_array() || rows.empty())
                throw DocumentError(path + ".label.matrix: expected a nonempty array of rows");
            std::vector<std::vector<std::uint64_t>> entries;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                const std::string row_path =
                    path + ".label.matrix[" + std::to_string(r) + "]";
                if (!rows[r].is_array() || rows[r].size() != rows.size())
                    throw DocumentError(row_path + ": matrix must be square");
                std::vector<std::uint64_t> row;
                for (std::size_t c = 0; c < rows[r].size(); ++c)
                    row.push_back(static_cast<std::uint64_t>(
                        unsigned_at(rows[r][c], row_path + "[" + std::to_string(c) + "]")));
                entries.push_back(std::move(row));
            }
            parsed = VertexLabel::saddle(IntMatrix::from_rows(entries));
        } else if (kind == "singularity") {
            const long long r = unsigned_at(member(label, path + ".label", "index"),
                                            path + ".label.index");
            if (r > 3) throw DocumentError(path + ".label.index: must be in 0..3");
            parsed = VertexLabel::singularity(static_cast<int>(r));
        } else {
            throw DocumentError(path + ".label.kind: unknown kind '" + kind + "'");
        }
        if (kind != "saddle" && label.contains("matrix"))
            throw DocumentError(path + ".label.matrix: only saddle labels carry a matrix");
        if (kind != "singularity" && label.contains("index"))
            throw DocumentError(path + ".label.index: only singularity labels carry an index");

        try {
            g.add_vertex(id, std::move(parsed));
        } catch (const std::invalid_argument& e) {
            throw DocumentError(path + ": " + e.what());
        }
    }

    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string path = "edges[" + std::to_string(i) + "]";
        const json& e = edges[i];
        const std::string id = string_at(e, path, "id");
        const std::string from = string_at(e, path, "from");
        const std::string to = string_at(e, path, "to");
        const long long weight = unsigned_at(member(e, path, "weight"), path + ".weight");
        try {
            g.add_edge(id, from, to, static_cast<int>(weight));
        } catch (const std::invalid_argument& ex) {
            throw DocumentError(path + ": " + ex.what());
        }
    }
    return g;
}

std::string serialize_graph_document(const LyapunovGraph& g) {
    json doc;
    doc["vertices"] = json::array();
    for (const Vertex& v : g.vertices()) {
        json label;
        switch (v.label.kind) {
            case LabelKind::attractor: label["kind"] = "attractor"; break;
            case LabelKind::repeller: label["kind"] = "repeller"; break;
            case LabelKind::boundary: label["kind"] = "boundary"; break;
            case LabelKind::saddle:
                label["kind"] = "saddle";
                label["matrix"] = v.label.matrix->rows();
                break;
            case LabelKind::singularity:
                label["kind"] = "singularity";
                label["index"] = *v.label.index;
                break;
        }
        doc["vertices"].push_back({{"id", v.id}, {"label", label}});
    }
    doc["edges"] = json::array();
    for (const Edge& e : g.edges())
        doc["edges"].push_back(
            {{"id", e.id}, {"from", e.from}, {"to", e.to}, {"weight", e.weight}});
    return doc.dump(2) + "\n";
}

Template parse_template_document(const std::string& text) {
    const json doc = parse_json(text);
    const json& charts = member(doc, "document", "charts");
    const json& strips = member(doc, "document", "strips");
    if (!charts.is_array()) throw DocumentError("charts: expected an array");
    if (!strips.is_array()) throw DocumentError("strips: expected an array");

    Template t;
    for (std::size_t i = 0; i < charts.size(); ++i) {
        const std::string path = "charts[" + std::to_string(i) + "]";
        const std::string id = string_at(charts[i], path, "id");
        const std::string kind = string_at(charts[i], path, "kind");
        if (kind != "joining" && kind != "splitting")
            throw DocumentError(path + ".kind: expected 'joining' or 'splitting'");
        for (const Chart& prior : t.charts)
            if (prior.id == id) throw DocumentError(path + ".id: duplicate chart id '" + id + "'");
        t.charts.push_back({id, kind == "joining" ? ChartKind::joining : ChartKind::splitting});
    }

    auto parse_ref = [](const json& v, const std::string& path) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
            throw DocumentError(path + ": expected [chart id, port]");
        try {
            return PortRef{v[0].get<std::string>(), port_from_name(v[1].get<std::string>())};
        } catch (const std::invalid_argument& e) {
            throw DocumentError(path + ": " + e.what());
        }
    };
    for (std::size_t i = 0; i < strips.size(); ++i) {
        const std::string path = "strips[" + std::to_string(i) + "]";
        const json& s = strips[i];
        Strip strip;
        strip.from = parse_ref(member(s, path, "from"), path + ".from");
        strip.to = parse_ref(member(s, path, "to"), path + ".to");
        const long long twist = unsigned_at(member(s, path, "twist"), path + ".twist");
        if (twist > 1) throw DocumentError(path + ".twist: must be 0 or 1");
        strip.twist = static_cast<int>(twist);
        t.strips.push_back(strip);
    }
    return t;
}

std::string serialize_template_document(const Template& t) {
    json doc;
    doc["charts"] = json::array();
    for (const Chart& c : t.charts)
        doc["charts"].push_back(
            {{"id", c.id}, {"kind", c.kind == ChartKind::joining ? "joining" : "splitting"}});
    doc["strips"] = json::array();
    for (const Strip& s : t.strips)
        doc["strips"].push_back({{"from", {s.from.chart, port_name(s.from.port)}},
                                 {"to", {s.to.chart, port_name(s.to.port)}},
                                 {"twist", s.twist}});
    return doc.dump(2) + "\n";
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string export_dot(const LyapunovGraph& g) {
    std::ostringstream out;
    out << "digraph lyapunov {\n";
    for (const Vertex& v : g.vertices()) {
        const char* shape = "circle";
        std::string label = v.id;
        switch (v.label.kind) {
            case LabelKind::attractor: shape = "doublecircle"; break;
            case LabelKind::repeller: shape = "diamond"; break;
            case LabelKind::saddle: shape = "box"; break;
            case LabelKind::singularity:
                shape = "ellipse";
                label += " (index " + std::to_string(*v.label.index) + ")";
                break;
            case LabelKind::boundary: shape = "none"; break;
        }
        out << "  " << dot_quote(v.id) << " [shape=" << shape << ", label=" << dot_quote(label)
            << "];\n";
    }
    for (const Edge& e : g.edges())
        out << "  " << dot_quote(e.from) << " -> " << dot_quote(e.to)
            << " [label=" << dot_quote(std::to_string(e.weight)) << "];\n";
    out << "}\n";
    return out.str();
}

}  // namespace nsflow
