#include "nsflow/template.hpp"

#include "nsflow/graph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace nsflow {

bool is_in_port(Port p) { return p == Port::in1 || p == Port::in2 || p == Port::in; }

bool port_valid_for(ChartKind kind, Port p) {
    if (kind == ChartKind::joining)
        return p == Port::in1 || p == Port::in2 || p == Port::out;
    return p == Port::in || p == Port::out1 || p == Port::out2;
}

const char* port_name(Port p) {
    switch (p) {
        case Port::in1: return "in1";
        case Port::in2: return "in2";
        case Port::in: return "in";
        case Port::out: return "out";
        case Port::out1: return "out1";
        case Port::out2: return "out2";
    }
    return "?";
}

Port port_from_name(const std::string& name) {
    if (name == "in1") return Port::in1;
    if (name == "in2") return Port::in2;
    if (name == "in") return Port::in;
    if (name == "out") return Port::out;
    if (name == "out1") return Port::out1;
    if (name == "out2") return Port::out2;
    throw std::invalid_argument("unknown port name: " + name);
}

std::vector<Diagnostic> validate_template(const Template& t) {
    std::vector<Diagnostic> diags;
    auto add = [&](std::string code, std::string subject, std::string message) {
        diags.push_back(Diagnostic{std::move(code), std::move(subject), std::move(message)});
    };

    if (t.charts.empty()) {
        add("template.empty", "", "template has no charts");
        return diags;
    }

    std::map<std::string, std::size_t> chart_index;
    std::size_t joining = 0, splitting = 0;
    for (std::size_t i = 0; i < t.charts.size(); ++i) {
        const Chart& c = t.charts[i];
        if (!chart_index.emplace(c.id, i).second)
            add("chart.duplicate-id", c.id, "chart id appears more than once");
        (c.kind == ChartKind::joining ? joining : splitting) += 1;
    }
    if (joining != splitting)
        add("template.chart-balance", "",
            "joining and splitting chart counts differ (" + std::to_string(joining) + " vs " +
                std::to_string(splitting) + ")");

    // One strip per out-port and per in-port.
    std::map<std::pair<std::string, Port>, int> out_use, in_use;
    for (std::size_t s = 0; s < t.strips.size(); ++s) {
        const Strip& strip = t.strips[s];
        const std::string subject = "strip[" + std::to_string(s) + "]";
        if (strip.twist != 0 && strip.twist != 1)
            add("strip.twist", subject, "twist must be 0 or 1");
        bool ends_ok = true;
        for (const auto* ref : {&strip.from, &strip.to}) {
            auto it = chart_index.find(ref->chart);
            if (it == chart_index.end()) {
                add("strip.unknown-chart", subject, "no chart with id '" + ref->chart + "'");
                ends_ok = false;
            } else if (!port_valid_for(t.charts[it->second].kind, ref->port)) {
                add("strip.port-kind", subject,
                    "chart '" + ref->chart + "' has no port '" + port_name(ref->port) + "'");
                ends_ok = false;
            }
        }
        if (!ends_ok) continue;
        if (is_in_port(strip.from.port)) {
            add("strip.port-kind", subject, "strip source must be an out-port");
            continue;
        }
        if (!is_in_port(strip.to.port)) {
            add("strip.port-kind", subject, "strip target must be an in-port");
            continue;
        }
        out_use[{strip.from.chart, strip.from.port}] += 1;
        in_use[{strip.to.chart, strip.to.port}] += 1;
    }
    for (const auto& [key, count] : out_use)
        if (count > 1)
            add("port.multiple", key.first + "." + port_name(key.second),
                "out-port feeds more than one strip");
    for (const auto& [key, count] : in_use)
        if (count > 1)
            add("port.multiple", key.first + "." + port_name(key.second),
                "in-port receives more than one strip");
    for (const Chart& c : t.charts) {
        const auto outs = c.kind == ChartKind::joining
                              ? std::vector<Port>{Port::out}
                              : std::vector<Port>{Port::out1, Port::out2};
        const auto ins = c.kind == ChartKind::joining
                             ? std::vector<Port>{Port::in1, Port::in2}
                             : std::vector<Port>{Port::in};
        for (Port p : outs)
            if (!out_use.count({c.id, p}))
                add("port.dangling", c.id + "." + port_name(p), "out-port has no strip");
        for (Port p : ins)
            if (!in_use.count({c.id, p}))
                add("port.dangling", c.id + "." + port_name(p), "in-port has no strip");
    }

    // Connectivity of the chart/strip graph.
    if (chart_index.size() == t.charts.size()) {
        std::vector<std::size_t> parent(t.charts.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const Strip& strip : t.strips) {
            auto a = chart_index.find(strip.from.chart);
            auto b = chart_index.find(strip.to.chart);
            if (a != chart_index.end() && b != chart_index.end())
                parent[find(a->second)] = find(b->second);
        }
        for (std::size_t i = 1; i < t.charts.size(); ++i)
            if (find(i) != find(0)) {
                add("template.disconnected", t.charts[i].id,
                    "chart not connected to '" + t.charts[0].id + "'");
                break;
            }
    }
    return diags;
}

Template build_lorenz() {
    Template t;
    t.charts = {{"J", ChartKind::joining}, {"S", ChartKind::splitting}};
    t.strips = {{{"J", Port::out}, {"S", Port::in}, 0},
                {{"S", Port::out1}, {"J", Port::in1}, 0},
                {{"S", Port::out2}, {"J", Port::in2}, 0}};
    return t;
}

// ---------------------------------------------------------------------------
// Boundary tracer.
//
// Every chart becomes a fixed 14-vertex / 21-edge / 6-face patch of the
// boundary surface; the three port rectangles are open holes whose edges and
// corners are shared with the strip glued there. Thickness faces carry the
// entrance set, width faces the exit set.
//
// Joining chart (two stacked inputs merging toward one output): entrance
// faces are the outer top/bottom and the two notch faces between the input
// slabs, which meet along the branch-line edge; exit faces are the two side
// walls. The splitting chart is the width-direction mirror: one input, two
// side-by-side outputs separated by a gap whose walls meet along the
// splitting edge, interior to the exit set.
// ---------------------------------------------------------------------------

namespace {

constexpr int kChartVerts = 14;
constexpr int kChartEdges = 21;

struct LocalEdge {
    int v0, v1;
};

struct LocalFace {
    bool entrance;
    std::vector<int> cycle;  // vertex cycle
};

struct PortCells {
    // Corners TL, TR, BL, BR and edges top, bottom, left, right, as local ids.
    std::array<int, 4> corner;
    std::array<int, 4> edge;
};

struct AssembledFace {
    bool entrance;
    std::uint8_t size;
    std::array<int, 8> verts;
    std::array<int, 8> edges;  // edges[i] joins verts[i] and verts[i+1]
};

struct ChartTable {
    std::array<LocalEdge, kChartEdges> edges;
    std::vector<LocalFace> faces;
    std::map<Port, PortCells> ports;
    std::array<AssembledFace, 6> assembled;  // faces with edge ids resolved

    void assemble() {
        std::map<std::pair<int, int>, int> local_pair;
        for (int e = 0; e < kChartEdges; ++e)
            local_pair[{std::min(edges[e].v0, edges[e].v1),
                        std::max(edges[e].v0, edges[e].v1)}] = e;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            AssembledFace& af = assembled[f];
            af.entrance = faces[f].entrance;
            af.size = static_cast<std::uint8_t>(faces[f].cycle.size());
            for (std::size_t i = 0; i < faces[f].cycle.size(); ++i) {
                const int a = faces[f].cycle[i];
                const int b = faces[f].cycle[(i + 1) % faces[f].cycle.size()];
                af.verts[i] = a;
                af.edges[i] = local_pair.at({std::min(a, b), std::max(a, b)});
            }
        }
    }
};

// Joining chart corners: in1 = A B / C D, in2 = E F / G H (top row / bottom
// row, left then right), branch edge P-Q, out = R S / T U.
const ChartTable& joining_table() {
    static const ChartTable table = [] {
        enum { A, B, C, D, E, F, G, H, P, Q, R, S, T, U };
        ChartTable t;
        t.edges = {{{A, B}, {C, D}, {A, C}, {B, D},    // in1 top/bottom/left/right
                    {E, F}, {G, H}, {E, G}, {F, H},    // in2
                    {R, S}, {T, U}, {R, T}, {S, U},    // out
                    {P, Q},                            // branch line
                    {C, P}, {E, P}, {D, Q}, {F, Q},    // notch sides
                    {A, R}, {B, S}, {G, T}, {H, U}}};  // outer long edges
        t.faces = {{true, {A, B, S, R}},               // outer top
                   {true, {G, H, U, T}},               // outer bottom
                   {true, {C, D, Q, P}},               // notch upper
                   {true, {E, F, Q, P}},               // notch lower
                   {false, {A, C, P, E, G, T, R}},     // left wall
                   {false, {B, D, Q, F, H, U, S}}};    // right wall
        t.ports[Port::in1] = {{A, B, C, D}, {0, 1, 2, 3}};
        t.ports[Port::in2] = {{E, F, G, H}, {4, 5, 6, 7}};
        t.ports[Port::out] = {{R, S, T, U}, {8, 9, 10, 11}};
        t.assemble();
        return t;
    }();
    return table;
}

// Splitting chart corners: in = A B / G H, splitting edge P-Q, out1 = R1 R2 /
// T1 T2 (left output), out2 = S1 S2 / U1 U2 (right output).
const ChartTable& splitting_table() {
    static const ChartTable table = [] {
        enum { A, B, G, H, P, Q, R1, R2, T1, T2, S1, S2, U1, U2 };
        ChartTable t;
        t.edges = {{{A, B}, {G, H}, {A, G}, {B, H},        // in
                    {R1, R2}, {T1, T2}, {R1, T1}, {R2, T2},    // out1
                    {S1, S2}, {U1, U2}, {S1, U1}, {S2, U2},    // out2
                    {P, Q},                                    // splitting edge
                    {P, R2}, {Q, T2}, {P, S1}, {Q, U1},        // gap sides
                    {A, R1}, {B, S2}, {G, T1}, {H, U2}}};      // outer long edges
        t.faces = {{true, {A, B, S2, S1, P, R2, R1}},          // top
                   {true, {G, H, U2, U1, Q, T2, T1}},          // bottom
                   {false, {A, G, T1, R1}},                    // outer left
                   {false, {B, H, U2, S2}},                    // outer right
                   {false, {P, Q, T2, R2}},                    // gap left
                   {false, {P, Q, U1, S1}}};                   // gap right
        t.ports[Port::in] = {{A, B, G, H}, {0, 1, 2, 3}};
        t.ports[Port::out1] = {{R1, R2, T1, T2}, {4, 5, 6, 7}};
        t.ports[Port::out2] = {{S1, S2, U1, U2}, {8, 9, 10, 11}};
        t.assemble();
        return t;
    }();
    return table;
}

struct Complex {
    struct EdgeRec {
        int v0 = -1, v1 = -1;
        int face[2] = {-1, -1};
        bool fwd[2] = {false, false};  // does the face traverse v0 -> v1?
        int n_faces = 0;
    };
    struct FaceRec {
        bool entrance = false;
        std::uint8_t size = 0;
        std::array<int, 8> verts{};
        std::array<int, 8> edges{};
    };
    int n_vertices = 0;
    std::vector<EdgeRec> edges;
    std::vector<FaceRec> faces;

    int add_edge(int v0, int v1) {
        edges.push_back({v0, v1, {-1, -1}, {false, false}, 0});
        return static_cast<int>(edges.size()) - 1;
    }

    // Registers a face whose boundary walks verts[i] -> verts[i+1] along
    // edge_ids[i]; checks that each step really is that edge.
    void add_face(bool entrance, std::initializer_list<int> verts,
                  std::initializer_list<int> edge_ids) {
        FaceRec rec;
        rec.entrance = entrance;
        rec.size = static_cast<std::uint8_t>(verts.size());
        std::copy(verts.begin(), verts.end(), rec.verts.begin());
        std::copy(edge_ids.begin(), edge_ids.end(), rec.edges.begin());
        push_face(rec);
    }

    void push_face(const FaceRec& rec) {
        const int f = static_cast<int>(faces.size());
        for (int i = 0; i < rec.size; ++i) {
            const int a = rec.verts[i], b = rec.verts[(i + 1) % rec.size];
            EdgeRec& e = edges[rec.edges[i]];
            const bool fwd = (e.v0 == a && e.v1 == b);
            if (!fwd && !(e.v0 == b && e.v1 == a))
                throw std::logic_error("face boundary does not follow its edges");
            if (e.n_faces >= 2) throw std::logic_error("edge incident to more than two faces");
            e.face[e.n_faces] = f;
            e.fwd[e.n_faces] = fwd;
            e.n_faces += 1;
        }
        faces.push_back(rec);
    }
};

struct GlobalPort {
    std::array<int, 4> corner;  // TL TR BL BR
    std::array<int, 4> edge;    // top bottom left right
};

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

Complex build_boundary_complex(const Template& t) {
    std::map<std::string, std::size_t> chart_index;
    for (std::size_t i = 0; i < t.charts.size(); ++i) chart_index[t.charts[i].id] = i;

    Complex cx;
    cx.n_vertices = static_cast<int>(t.charts.size()) * kChartVerts;
    cx.edges.reserve(t.charts.size() * kChartEdges + t.strips.size() * 4);
    cx.faces.reserve(t.charts.size() * 6 + t.strips.size() * 4);

    // Chart patches first: edges in table order, then faces.
    for (std::size_t c = 0; c < t.charts.size(); ++c) {
        const ChartTable& table =
            t.charts[c].kind == ChartKind::joining ? joining_table() : splitting_table();
        const int vbase = static_cast<int>(c) * kChartVerts;
        const int ebase = static_cast<int>(c) * kChartEdges;
        for (int e = 0; e < kChartEdges; ++e)
            cx.add_edge(vbase + table.edges[e].v0, vbase + table.edges[e].v1);
        for (const AssembledFace& af : table.assembled) {
            Complex::FaceRec rec;
            rec.entrance = af.entrance;
            rec.size = af.size;
            for (int i = 0; i < af.size; ++i) {
                rec.verts[i] = vbase + af.verts[i];
                rec.edges[i] = ebase + af.edges[i];
            }
            cx.push_face(rec);
        }
    }

    auto resolve_port = [&](const PortRef& ref) {
        const std::size_t c = chart_index.at(ref.chart);
        const ChartTable& table =
            t.charts[c].kind == ChartKind::joining ? joining_table() : splitting_table();
        const PortCells& pc = table.ports.at(ref.port);
        GlobalPort gp;
        for (int i = 0; i < 4; ++i) {
            gp.corner[i] = static_cast<int>(c) * kChartVerts + pc.corner[i];
            gp.edge[i] = static_cast<int>(c) * kChartEdges + pc.edge[i];
        }
        return gp;
    };

    enum { TL, TR, BL, BR };          // corner slots
    enum { TOP, BOT, LEFT, RIGHT };   // edge slots
    for (const Strip& strip : t.strips) {
        const GlobalPort src = resolve_port(strip.from);
        const GlobalPort dst = resolve_port(strip.to);
        // A half twist rotates the cross-section by a half turn, so the strip
        // arrives with top against bottom and left against right.
        const bool tw = strip.twist != 0;
        const int ltl = cx.add_edge(src.corner[TL], tw ? dst.corner[BR] : dst.corner[TL]);
        const int ltr = cx.add_edge(src.corner[TR], tw ? dst.corner[BL] : dst.corner[TR]);
        const int lbl = cx.add_edge(src.corner[BL], tw ? dst.corner[TR] : dst.corner[BL]);
        const int lbr = cx.add_edge(src.corner[BR], tw ? dst.corner[TL] : dst.corner[BR]);
        if (!tw) {
            cx.add_face(true, {src.corner[TL], src.corner[TR], dst.corner[TR], dst.corner[TL]},
                        {src.edge[TOP], ltr, dst.edge[TOP], ltl});
            cx.add_face(true, {src.corner[BL], src.corner[BR], dst.corner[BR], dst.corner[BL]},
                        {src.edge[BOT], lbr, dst.edge[BOT], lbl});
            cx.add_face(false, {src.corner[TL], src.corner[BL], dst.corner[BL], dst.corner[TL]},
                        {src.edge[LEFT], lbl, dst.edge[LEFT], ltl});
            cx.add_face(false, {src.corner[TR], src.corner[BR], dst.corner[BR], dst.corner[TR]},
                        {src.edge[RIGHT], lbr, dst.edge[RIGHT], ltr});
        } else {
            cx.add_face(true, {src.corner[TL], src.corner[TR], dst.corner[BL], dst.corner[BR]},
                        {src.edge[TOP], ltr, dst.edge[BOT], ltl});
            cx.add_face(true, {src.corner[BL], src.corner[BR], dst.corner[TL], dst.corner[TR]},
                        {src.edge[BOT], lbr, dst.edge[TOP], lbl});
            cx.add_face(false, {src.corner[TL], src.corner[BL], dst.corner[TR], dst.corner[BR]},
                        {src.edge[LEFT], lbl, dst.edge[RIGHT], ltl});
            cx.add_face(false, {src.corner[TR], src.corner[BR], dst.corner[TL], dst.corner[BL]},
                        {src.edge[RIGHT], lbr, dst.edge[LEFT], ltr});
        }
    }

    for (const Complex::EdgeRec& e : cx.edges)
        if (e.n_faces != 2)
            throw std::logic_error("boundary complex is not closed: edge with " +
                                   std::to_string(e.n_faces) + " faces");
    return cx;
}

void check_orientable(const Complex& cx) {
    // Propagate face orientations; two faces must traverse a shared edge in
    // opposite directions once flips are resolved.
    std::vector<int> flip(cx.faces.size(), -1);
    for (std::size_t seed = 0; seed < cx.faces.size(); ++seed) {
        if (flip[seed] != -1) continue;
        flip[seed] = 0;
        std::vector<int> stack{static_cast<int>(seed)};
        while (!stack.empty()) {
            const int f = stack.back();
            stack.pop_back();
            for (int i = 0; i < cx.faces[f].size; ++i) {
                const int e = cx.faces[f].edges[i];
                const Complex::EdgeRec& er = cx.edges[e];
                const int self = er.face[0] == f ? 0 : 1;
                const int other = 1 - self;
                const int g = er.face[other];
                if (er.face[0] == er.face[1]) {
                    // Same face on both sides: orientable iff directions differ.
                    if (er.fwd[0] == er.fwd[1])
                        throw std::logic_error("non-orientable gluing detected");
                    continue;
                }
                const int need =
                    (er.fwd[self] == er.fwd[other]) ? 1 - flip[f] : flip[f];
                if (flip[g] == -1) {
                    flip[g] = need;
                    stack.push_back(g);
                } else if (flip[g] != need) {
                    throw std::logic_error("non-orientable gluing detected");
                }
            }
        }
    }
}

}  // namespace

BoundaryReport thicken_boundary(const Template& t) {
    const std::vector<Diagnostic> diags = validate_template(t);
    if (!diags.empty())
        throw std::invalid_argument("invalid template: " + diags.front().code + " (" +
                                    diags.front().message + ")");

    const Complex cx = build_boundary_complex(t);
    check_orientable(cx);

    const int nf = static_cast<int>(cx.faces.size());
    const int ne = static_cast<int>(cx.edges.size());

    // Entrance/exit components: union faces of equal class across interior
    // edges. Closed components: union across every edge.
    DisjointSet same_class(nf), closed(nf);
    std::vector<bool> dividing(ne, false);
    for (int e = 0; e < ne; ++e) {
        const auto& er = cx.edges[e];
        closed.unite(er.face[0], er.face[1]);
        if (cx.faces[er.face[0]].entrance != cx.faces[er.face[1]].entrance)
            dividing[e] = true;
        else
            same_class.unite(er.face[0], er.face[1]);
    }

    // Dense component ids, entrance and exit numbered separately.
    std::vector<int> comp_of_face(nf, -1), closed_of_face(nf, -1);
    std::vector<int> root_to_comp(nf, -1), root_to_closed(nf, -1);
    int n_entrance = 0, n_exit = 0, n_closed = 0;
    for (int f = 0; f < nf; ++f) {
        const int root = same_class.find(f);
        if (root_to_comp[root] == -1)
            root_to_comp[root] = cx.faces[f].entrance ? n_entrance++ : n_exit++;
        comp_of_face[f] = root_to_comp[root];
        const int croot = closed.find(f);
        if (root_to_closed[croot] == -1) root_to_closed[croot] = n_closed++;
        closed_of_face[f] = root_to_closed[croot];
    }

    BoundaryReport report;
    report.entrance.resize(n_entrance);
    report.exit.resize(n_exit);
    report.closed.resize(n_closed);
    for (auto& c : report.entrance) c.entrance = true;
    for (auto& c : report.exit) c.entrance = false;

    // Euler characteristics: faces, then edges (a dividing edge counts once on
    // each side), then vertices (counted once per incident component).
    std::vector<long long> chi_entrance(n_entrance, 0), chi_exit(n_exit, 0),
        chi_closed(n_closed, 0);
    for (int f = 0; f < nf; ++f) {
        (cx.faces[f].entrance ? chi_entrance : chi_exit)[comp_of_face[f]] += 1;
        chi_closed[closed_of_face[f]] += 1;
    }
    for (int e = 0; e < ne; ++e) {
        const auto& er = cx.edges[e];
        chi_closed[closed_of_face[er.face[0]]] -= 1;
        if (!dividing[e]) {
            (cx.faces[er.face[0]].entrance ? chi_entrance : chi_exit)[comp_of_face[er.face[0]]] -=
                1;
        } else {
            for (int side : {0, 1})
                (cx.faces[er.face[side]].entrance ? chi_entrance
                                                  : chi_exit)[comp_of_face[er.face[side]]] -= 1;
        }
    }
    {
        // No vertex of the complex meets more than four faces.
        std::vector<std::array<int, 6>> vertex_faces(cx.n_vertices);
        std::vector<int> vertex_face_count(cx.n_vertices, 0);
        for (int f = 0; f < nf; ++f)
            for (int i = 0; i < cx.faces[f].size; ++i) {
                const int v = cx.faces[f].verts[i];
                if (vertex_face_count[v] >= 6)
                    throw std::logic_error("vertex incident to too many faces");
                vertex_faces[v][vertex_face_count[v]++] = f;
            }
        for (int v = 0; v < cx.n_vertices; ++v) {
            std::array<int, 6> seen_entrance{}, seen_exit{}, seen_closed{};
            int ne_seen = 0, nx_seen = 0, nc_seen = 0;
            for (int i = 0; i < vertex_face_count[v]; ++i) {
                const int f = vertex_faces[v][i];
                auto* seen = cx.faces[f].entrance ? seen_entrance.data() : seen_exit.data();
                int& n_seen = cx.faces[f].entrance ? ne_seen : nx_seen;
                const int comp = comp_of_face[f];
                if (std::find(seen, seen + n_seen, comp) == seen + n_seen) {
                    seen[n_seen++] = comp;
                    (cx.faces[f].entrance ? chi_entrance : chi_exit)[comp] += 1;
                }
                const int ccomp = closed_of_face[f];
                if (std::find(seen_closed.data(), seen_closed.data() + nc_seen, ccomp) ==
                    seen_closed.data() + nc_seen) {
                    seen_closed[nc_seen++] = ccomp;
                    chi_closed[ccomp] += 1;
                }
            }
        }
    }

    // Dividing curves: the dividing edges form a disjoint union of cycles
    // (every vertex of the complex meets exactly zero or two of them).
    std::vector<std::array<int, 2>> vertex_dividing(cx.n_vertices, {-1, -1});
    for (int e = 0; e < ne; ++e)
        if (dividing[e])
            for (const int v : {cx.edges[e].v0, cx.edges[e].v1}) {
                if (vertex_dividing[v][0] == -1)
                    vertex_dividing[v][0] = e;
                else if (vertex_dividing[v][1] == -1)
                    vertex_dividing[v][1] = e;
                else
                    throw std::logic_error("dividing edges do not form disjoint circles");
            }
    for (int v = 0; v < cx.n_vertices; ++v)
        if (vertex_dividing[v][0] != -1 && vertex_dividing[v][1] == -1)
            throw std::logic_error("dividing edges do not form disjoint circles");

    std::vector<bool> visited(ne, false);
    for (int e0 = 0; e0 < ne; ++e0) {
        if (!dividing[e0] || visited[e0]) continue;
        int entrance_comp = -1, exit_comp = -1;
        int e = e0, v = cx.edges[e0].v0;
        do {
            visited[e] = true;
            for (int side : {0, 1}) {
                const int f = cx.edges[e].face[side];
                (cx.faces[f].entrance ? entrance_comp : exit_comp) = comp_of_face[f];
            }
            v = cx.edges[e].v0 == v ? cx.edges[e].v1 : cx.edges[e].v0;  // step to far end
            const auto& next = vertex_dividing[v];
            e = next[0] == e ? next[1] : next[0];
        } while (e != e0);
        report.curve_entrance_component.push_back(entrance_comp);
        report.curve_exit_component.push_back(exit_comp);
        report.entrance[entrance_comp].boundary_circles += 1;
        report.exit[exit_comp].boundary_circles += 1;
        report.dividing_curves += 1;
    }

    auto finish = [](SurfaceComponent& c, long long chi) {
        c.euler_char = chi;
        const long long capped = chi + c.boundary_circles;
        if (capped % 2 != 0 || capped > 2)
            throw std::logic_error("boundary component with impossible Euler characteristic");
        c.capped_genus = static_cast<int>((2 - capped) / 2);
    };
    for (std::size_t i = 0; i < report.entrance.size(); ++i)
        finish(report.entrance[i], chi_entrance[i]);
    for (std::size_t i = 0; i < report.exit.size(); ++i) finish(report.exit[i], chi_exit[i]);
    for (std::size_t i = 0; i < report.closed.size(); ++i) {
        report.closed[i].euler_char = chi_closed[i];
        if (chi_closed[i] % 2 != 0 || chi_closed[i] > 2)
            throw std::logic_error("closed component with odd Euler characteristic");
        report.closed[i].genus = static_cast<int>((2 - chi_closed[i]) / 2);
        report.total_boundary_euler += chi_closed[i];
    }
    for (const SurfaceComponent& c : report.entrance) {
        if (c.capped_genus > 1) report.s0 += 1;
        if (c.capped_genus == 0) report.s1 += 1;
    }
    for (const SurfaceComponent& c : report.exit) {
        if (c.capped_genus > 1) report.t0 += 1;
        if (c.capped_genus == 0) report.t1 += 1;
    }
    return report;
}

int template_genus(const BoundaryReport& report) {
    long long in_side = 0, out_side = 0;
    for (const SurfaceComponent& c : report.entrance)
        if (c.capped_genus > 1) in_side += c.capped_genus;
    for (const SurfaceComponent& c : report.exit)
        if (c.capped_genus > 1) out_side += c.capped_genus;
    return static_cast<int>(std::max(in_side - report.s0, out_side - report.t0));
}

bool check_lemma41(const BoundaryReport& report) {
    long long lhs = -report.s0 - report.s1, rhs = -report.t0 - report.t1;
    for (const SurfaceComponent& c : report.entrance)
        if (c.capped_genus > 1) lhs += c.capped_genus;
    for (const SurfaceComponent& c : report.exit)
        if (c.capped_genus > 1) rhs += c.capped_genus;
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Enumeration. Out-ports in the fixed order J1.out..Jn.out, S1.out1, S1.out2,
// ..; in-ports in the order J1.in1, J1.in2, .., S1.in, ... A matching is a
// bijection out-slot -> in-slot with no strip returning to its own chart; it
// is kept iff it is the lexicographic minimum over all relabelings of the
// joining charts and of the splitting charts. Twists then run through all
// 2^strips assignments in binary order.
// ---------------------------------------------------------------------------

namespace {

struct SlotLayout {
    int n;  // joining (= splitting) chart count
    int out_slots() const { return 3 * n; }
    // chart of an out-slot: slots [0, n) are J.out, then pairs (out1, out2).
    int out_chart(int slot) const { return slot < n ? slot : n + (slot - n) / 2; }
    Port out_port(int slot) const {
        return slot < n ? Port::out : ((slot - n) % 2 == 0 ? Port::out1 : Port::out2);
    }
    // chart of an in-slot: pairs (in1, in2) for J charts, then S.in.
    int in_chart(int slot) const { return slot < 2 * n ? slot / 2 : n + (slot - 2 * n); }
    Port in_port(int slot) const {
        return slot < 2 * n ? (slot % 2 == 0 ? Port::in1 : Port::in2) : Port::in;
    }
    int relabel_out(int slot, const std::vector<int>& pj, const std::vector<int>& ps) const {
        return slot < n ? pj[slot] : n + ps[(slot - n) / 2] * 2 + (slot - n) % 2;
    }
    int relabel_in(int slot, const std::vector<int>& pj, const std::vector<int>& ps) const {
        return slot < 2 * n ? pj[slot / 2] * 2 + slot % 2 : 2 * n + ps[slot - 2 * n];
    }
};

bool is_canonical(const SlotLayout& lay, const std::vector<int>& match) {
    std::vector<int> pj(lay.n), ps(lay.n), image(match.size());
    std::iota(pj.begin(), pj.end(), 0);
    do {
        std::iota(ps.begin(), ps.end(), 0);
        do {
            for (int s = 0; s < lay.out_slots(); ++s)
                image[lay.relabel_out(s, pj, ps)] = lay.relabel_in(match[s], pj, ps);
            if (std::lexicographical_compare(image.begin(), image.end(), match.begin(),
                                             match.end()))
                return false;
        } while (std::next_permutation(ps.begin(), ps.end()));
    } while (std::next_permutation(pj.begin(), pj.end()));
    return true;
}

bool is_connected_matching(const SlotLayout& lay, const std::vector<int>& match) {
    DisjointSet ds(2 * lay.n);
    for (int s = 0; s < lay.out_slots(); ++s) ds.unite(lay.out_chart(s), lay.in_chart(match[s]));
    for (int c = 1; c < 2 * lay.n; ++c)
        if (ds.find(c) != ds.find(0)) return false;
    return true;
}

}  // namespace

void enumerate_small_templates(int max_charts,
                               const std::function<void(const Template&)>& yield) {
    if (max_charts > 8) throw std::invalid_argument("enumerate_small_templates: max_charts > 8");
    for (int n = 1; 2 * n <= max_charts; ++n) {
        SlotLayout lay{n};
        Template t;
        for (int j = 0; j < n; ++j) t.charts.push_back({"J" + std::to_string(j + 1), ChartKind::joining});
        for (int s = 0; s < n; ++s) t.charts.push_back({"S" + std::to_string(s + 1), ChartKind::splitting});

        std::vector<int> match(lay.out_slots());
        std::iota(match.begin(), match.end(), 0);
        do {
            bool ok = true;
            for (int s = 0; s < lay.out_slots() && ok; ++s)
                ok = lay.out_chart(s) != lay.in_chart(match[s]);
            if (!ok || !is_connected_matching(lay, match) || !is_canonical(lay, match)) continue;

            t.strips.clear();
            for (int s = 0; s < lay.out_slots(); ++s)
                t.strips.push_back({{t.charts[lay.out_chart(s)].id, lay.out_port(s)},
                                    {t.charts[lay.in_chart(match[s])].id, lay.in_port(match[s])},
                                    0});
            const std::uint64_t twist_count = std::uint64_t{1} << lay.out_slots();
            for (std::uint64_t bits = 0; bits < twist_count; ++bits) {
                for (int s = 0; s < lay.out_slots(); ++s)
                    t.strips[s].twist = static_cast<int>((bits >> s) & 1u);
                yield(t);
            }
        } while (std::next_permutation(match.begin(), match.end()));
    }
}

std::vector<Template> enumerate_small_templates(int max_charts) {
    std::vector<Template> out;
    enumerate_small_templates(max_charts, [&](const Template& t) { out.push_back(t); });
    return out;
}

}  // namespace nsflow
