#include "nsflow/builders.hpp"

#include <stdexcept>

namespace nsflow {

LyapunovGraph build_lemma34(int n) {
    if (n < 1) throw std::invalid_argument("build_lemma34 requires n >= 1");
    LyapunovGraph g;
    g.add_vertex("repeller", VertexLabel::repeller());
    for (int j = 1; j <= n; ++j)
        g.add_vertex("u" + std::to_string(j),
                     VertexLabel::saddle(find_matrix_with_k(static_cast<std::size_t>(j))));
    for (int j = n; j >= 1; --j)
        g.add_vertex("w" + std::to_string(j),
                     VertexLabel::saddle(find_matrix_with_k(static_cast<std::size_t>(j))));
    g.add_vertex("attractor", VertexLabel::attractor());
    for (int j = 1; j <= n; ++j)
        g.add_vertex("s0_" + std::to_string(j), VertexLabel::singularity(0));
    for (int j = 1; j <= n; ++j)
        g.add_vertex("s3_" + std::to_string(j), VertexLabel::singularity(3));

    // Source-side chain ascends 1..n, the central edge carries n+1, the
    // sink-side chain descends back to 1.
    g.add_edge("e_up_1", "repeller", "u1", 1);
    for (int j = 2; j <= n; ++j)
        g.add_edge("e_up_" + std::to_string(j), "u" + std::to_string(j - 1),
                   "u" + std::to_string(j), j);
    g.add_edge("e_mid", "u" + std::to_string(n), "w" + std::to_string(n), n + 1);
    for (int j = n; j >= 2; --j)
        g.add_edge("e_dn_" + std::to_string(j), "w" + std::to_string(j),
                   "w" + std::to_string(j - 1), j);
    g.add_edge("e_dn_1", "w1", "attractor", 1);
    for (int j = 1; j <= n; ++j)
        g.add_edge("z_up_" + std::to_string(j), "u" + std::to_string(j),
                   "s0_" + std::to_string(j), 0);
    for (int j = 1; j <= n; ++j)
        g.add_edge("z_dn_" + std::to_string(j), "s3_" + std::to_string(j),
                   "w" + std::to_string(j), 0);
    return g;
}

LyapunovGraph build_prop35(int n) {
    LyapunovGraph g = build_lemma34(n);
    for (int j = 1; j <= n; ++j) {
        const std::string idx = std::to_string(j);
        g.remove_edge("z_up_" + idx);
        g.remove_edge("z_dn_" + idx);
        g.remove_vertex("s0_" + idx);
        g.remove_vertex("s3_" + idx);
        g.add_edge("splice_" + idx, "u" + idx, "w" + idx, 0);
    }
    return g;
}

namespace {

void require_surgery_edge(const LyapunovGraph& g, const std::string& edge_id,
                          const char* side) {
    if (!g.has_edge(edge_id))
        throw std::invalid_argument(std::string(side) + " edge not found: " + edge_id);
    const Edge& e = g.edge(edge_id);
    if (e.weight != 1)
        throw std::invalid_argument(std::string(side) + " edge must have weight 1: " + edge_id);
    const Vertex& target = g.vertex(e.to);
    if (target.label.kind != LabelKind::attractor)
        throw std::invalid_argument(std::string(side) +
                                    " edge must terminate at an attracting orbit: " + edge_id);
    const VertexStats stats = vertex_stats(g, e.to);
    if (stats.e_plus + stats.e_minus != 1)
        throw std::invalid_argument(std::string(side) +
                                    " edge must terminate at a degree-1 vertex: " + edge_id);
}

void copy_prefixed(LyapunovGraph& out, const LyapunovGraph& src, const std::string& prefix,
                   const std::string& dropped_vertex, const std::string& redirected_edge) {
    for (const Vertex& v : src.vertices())
        if (v.id != dropped_vertex) out.add_vertex(prefix + v.id, v.label);
    for (const Edge& e : src.edges()) {
        const std::string to =
            e.id == redirected_edge ? std::string("surgery_saddle") : prefix + e.to;
        out.add_edge(prefix + e.id, prefix + e.from, to, e.weight);
    }
}

}  // namespace

LyapunovGraph surgery_connect(const LyapunovGraph& left, const std::string& e1,
                              const LyapunovGraph& right, const std::string& e2) {
    require_surgery_edge(left, e1, "left");
    require_surgery_edge(right, e2, "right");

    LyapunovGraph out;
    out.add_vertex("surgery_saddle", VertexLabel::saddle(IntMatrix::from_rows({{1}})));
    out.add_vertex("surgery_attractor", VertexLabel::attractor());
    copy_prefixed(out, left, "l:", left.edge(e1).to, e1);
    copy_prefixed(out, right, "r:", right.edge(e2).to, e2);
    out.add_edge("surgery_out", "surgery_saddle", "surgery_attractor", 1);
    return out;
}

SectionFiveGraphs build_section5() {
    SectionFiveGraphs result;

    result.G.add_vertex("bx1", VertexLabel::boundary());
    result.G.add_vertex("bx2", VertexLabel::boundary());
    result.G.add_vertex("saddle", VertexLabel::saddle(IntMatrix::from_rows({{1}})));
    result.G.add_vertex("by", VertexLabel::boundary());
    result.G.add_edge("x1", "bx1", "saddle", 2);
    result.G.add_edge("x2", "bx2", "saddle", 0);
    result.G.add_edge("y", "saddle", "by", 1);

    result.L.add_vertex("repeller", VertexLabel::repeller());
    result.L.add_vertex("vminus", VertexLabel::saddle(IntMatrix::from_rows({{1}})));
    result.L.add_vertex("vplus", VertexLabel::saddle(IntMatrix::from_rows({{1}})));
    result.L.add_vertex("attractor", VertexLabel::attractor());
    result.L.add_edge("in", "repeller", "vminus", 1);
    result.L.add_edge("mid", "vminus", "vplus", 2);
    result.L.add_edge("zero", "vminus", "vplus", 0);
    result.L.add_edge("out", "vplus", "attractor", 1);
    return result;
}

}  // namespace nsflow
