#include "nsflow/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace nsflow {

VertexLabel VertexLabel::singularity(int r) {
    if (r < 0 || r > 3) throw std::invalid_argument("singularity index must be in 0..3");
    return {LabelKind::singularity, {}, r};
}

std::string render(const Diagnostic& d) {
    std::string out = d.code;
    if (!d.subject.empty()) out += " [" + d.subject + "]";
    return out + ": " + d.message;
}

void LyapunovGraph::add_vertex(const std::string& id, VertexLabel label) {
    if (!vertex_index_.emplace(id, vertices_.size()).second)
        throw std::invalid_argument("duplicate vertex id: " + id);
    vertices_.push_back({id, std::move(label)});
}

void LyapunovGraph::add_edge(const std::string& id, const std::string& from,
                             const std::string& to, int weight) {
    if (!has_vertex(from)) throw std::invalid_argument("unknown vertex id: " + from);
    if (!has_vertex(to)) throw std::invalid_argument("unknown vertex id: " + to);
    if (weight < 0) throw std::invalid_argument("edge weight must be nonnegative: " + id);
    if (!edge_index_.emplace(id, edges_.size()).second)
        throw std::invalid_argument("duplicate edge id: " + id);
    edges_.push_back({id, from, to, weight});
}

void LyapunovGraph::remove_edge(const std::string& id) {
    const std::size_t pos = edge_pos(id);
    edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(pos));
    edge_index_.erase(id);
    for (auto& [eid, p] : edge_index_)
        if (p > pos) --p;
}

void LyapunovGraph::remove_vertex(const std::string& id) {
    const std::size_t pos = vertex_pos(id);
    for (const Edge& e : edges_)
        if (e.from == id || e.to == id)
            throw std::invalid_argument("vertex still has incident edges: " + id);
    vertices_.erase(vertices_.begin() + static_cast<std::ptrdiff_t>(pos));
    vertex_index_.erase(id);
    for (auto& [vid, p] : vertex_index_)
        if (p > pos) --p;
}

void LyapunovGraph::redirect_edge(const std::string& id, const std::string& new_to) {
    if (!has_vertex(new_to)) throw std::invalid_argument("unknown vertex id: " + new_to);
    edges_[edge_pos(id)].to = new_to;
}

void LyapunovGraph::set_weight(const std::string& id, int weight) {
    if (weight < 0) throw std::invalid_argument("edge weight must be nonnegative: " + id);
    edges_[edge_pos(id)].weight = weight;
}

void LyapunovGraph::set_label(const std::string& id, VertexLabel label) {
    vertices_[vertex_pos(id)].label = std::move(label);
}

const Vertex& LyapunovGraph::vertex(const std::string& id) const { return vertices_[vertex_pos(id)]; }
const Edge& LyapunovGraph::edge(const std::string& id) const { return edges_[edge_pos(id)]; }

std::size_t LyapunovGraph::vertex_pos(const std::string& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) throw std::invalid_argument("unknown vertex id: " + id);
    return it->second;
}

std::size_t LyapunovGraph::edge_pos(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) throw std::invalid_argument("unknown edge id: " + id);
    return it->second;
}

VertexStats vertex_stats(const LyapunovGraph& g, const std::string& vertex_id) {
    if (!g.has_vertex(vertex_id)) throw std::invalid_argument("unknown vertex id: " + vertex_id);
    VertexStats s;
    for (const Edge& e : g.edges()) {
        if (e.to == vertex_id) {
            s.e_plus += 1;
            s.g_plus += e.weight;
        }
        if (e.from == vertex_id) {
            s.e_minus += 1;
            s.g_minus += e.weight;
        }
    }
    return s;
}

long long vertex_residual(const LyapunovGraph& g, const std::string& vertex_id) {
    const VertexStats s = vertex_stats(g, vertex_id);
    return s.e_plus - s.e_minus - s.g_plus + s.g_minus;
}

namespace {

// Undirected connectivity, optionally skipping a set of edges; vertices left
// without any incident edge are ignored.
bool connected_after_cut(const LyapunovGraph& g, const std::set<std::string>& cut_edges) {
    std::set<std::string> active;
    std::unordered_map<std::string, std::vector<const Edge*>> adjacency;
    for (const Edge& e : g.edges()) {
        if (cut_edges.count(e.id)) continue;
        active.insert(e.from);
        active.insert(e.to);
        adjacency[e.from].push_back(&e);
        adjacency[e.to].push_back(&e);
    }
    if (active.empty()) return true;  // nothing but stranded vertices, which are dropped
    std::set<std::string> seen{*active.begin()};
    std::deque<std::string> queue{*active.begin()};
    while (!queue.empty()) {
        const std::string v = queue.front();
        queue.pop_front();
        for (const Edge* e : adjacency[v]) {
            const std::string& w = e->from == v ? e->to : e->from;
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    return seen.size() == active.size();
}

bool connected_undirected(const LyapunovGraph& g) {
    if (g.vertices().empty()) return false;
    if (g.vertices().size() == 1) return true;
    std::unordered_map<std::string, std::vector<const Edge*>> adjacency;
    for (const Edge& e : g.edges()) {
        adjacency[e.from].push_back(&e);
        adjacency[e.to].push_back(&e);
    }
    std::set<std::string> seen{g.vertices().front().id};
    std::deque<std::string> queue{g.vertices().front().id};
    while (!queue.empty()) {
        const std::string v = queue.front();
        queue.pop_front();
        for (const Edge* e : adjacency[v]) {
            const std::string& w = e->from == v ? e->to : e->from;
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    return seen.size() == g.vertices().size();
}

// Kahn's algorithm; returns ids of vertices that sit on an oriented cycle.
std::vector<std::string> vertices_on_cycles(const LyapunovGraph& g) {
    std::unordered_map<std::string, int> in_degree;
    for (const Vertex& v : g.vertices()) in_degree[v.id] = 0;
    for (const Edge& e : g.edges()) in_degree[e.to] += 1;
    std::deque<std::string> queue;
    for (const Vertex& v : g.vertices())
        if (in_degree[v.id] == 0) queue.push_back(v.id);
    while (!queue.empty()) {
        const std::string v = queue.front();
        queue.pop_front();
        for (const Edge& e : g.edges())
            if (e.from == v && --in_degree[e.to] == 0) queue.push_back(e.to);
    }
    std::vector<std::string> cyclic;
    for (const Vertex& v : g.vertices())
        if (in_degree[v.id] > 0) cyclic.push_back(v.id);
    return cyclic;
}

}  // namespace

std::vector<Diagnostic> validate_abstract(const LyapunovGraph& g) {
    std::vector<Diagnostic> diags;
    auto add = [&](std::string code, std::string subject, std::string message) {
        diags.push_back(Diagnostic{std::move(code), std::move(subject), std::move(message)});
    };

    if (g.vertices().empty()) {
        add("graph.empty", "", "graph has no vertices");
        return diags;
    }
    if (!connected_undirected(g)) add("graph.disconnected", "", "underlying graph is not connected");

    for (const Edge& e : g.edges())
        if (e.from == e.to) add("edge.self-loop", e.id, "self-loop is an oriented cycle");

    const std::vector<std::string> cyclic = vertices_on_cycles(g);
    if (!cyclic.empty()) {
        std::string members = cyclic.front();
        for (std::size_t i = 1; i < cyclic.size(); ++i) members += ", " + cyclic[i];
        add("graph.oriented-cycle", cyclic.front(),
            "oriented cycle through vertices {" + members + "}");
    }

    for (const Vertex& v : g.vertices()) {
        switch (v.label.kind) {
            case LabelKind::saddle:
                if (!v.label.matrix)
                    add("vertex.label", v.id, "saddle vertex without a matrix");
                else if (!is_irreducible(*v.label.matrix))
                    add("vertex.reducible-matrix", v.id, "saddle matrix is not irreducible");
                break;
            case LabelKind::singularity:
                if (!v.label.index || *v.label.index < 0 || *v.label.index > 3)
                    add("vertex.label", v.id, "singularity index must be in 0..3");
                break;
            default:
                if (v.label.matrix || v.label.index)
                    add("vertex.label", v.id, "label carries data for a different kind");
                break;
        }
    }
    return diags;
}

int cycle_rank(const LyapunovGraph& g) {
    if (g.vertices().empty() || !connected_undirected(g))
        throw std::invalid_argument("cycle_rank requires a nonempty connected graph");
    return static_cast<int>(g.edges().size()) - static_cast<int>(g.vertices().size()) + 1;
}

namespace {

long long required_residual(const VertexLabel& label) {
    if (label.kind == LabelKind::singularity) return *label.index % 2 == 0 ? 1 : -1;
    return 0;
}

}  // namespace

std::vector<BalanceViolation> nsf_balance_check(const LyapunovGraph& g) {
    std::vector<BalanceViolation> out;
    for (const Vertex& v : g.vertices()) {
        if (v.label.kind == LabelKind::boundary) continue;
        const long long actual = vertex_residual(g, v.id);
        const long long required = required_residual(v.label);
        if (actual != required) out.push_back({v.id, actual, required});
    }
    return out;
}

S3Report check_s3(const LyapunovGraph& g) {
    S3Report report;
    report.preamble = validate_abstract(g);

    for (const Vertex& v : g.vertices()) {
        const VertexStats s = vertex_stats(g, v.id);
        if (s.e_minus == 0 && v.label.kind != LabelKind::attractor &&
            !(v.label.kind == LabelKind::singularity && v.label.index == 0))
            report.preamble.push_back(
                {"s3.sink-label", v.id,
                 "sink must be an attracting orbit or an index-0 singularity"});
        if (s.e_plus == 0 && v.label.kind != LabelKind::repeller &&
            !(v.label.kind == LabelKind::singularity && v.label.index == 3))
            report.preamble.push_back(
                {"s3.source-label", v.id,
                 "source must be a repelling orbit or an index-3 singularity"});
    }

    // (1) tree, and sinks/sources have exactly one incident edge.
    if (g.vertices().empty() || !connected_undirected(g) ||
        g.edges().size() + 1 != g.vertices().size()) {
        report.condition1.pass = false;
        report.condition1.details.push_back(
            {"s3.not-a-tree", "", "underlying graph is not a tree"});
    }
    for (const Vertex& v : g.vertices()) {
        const VertexStats s = vertex_stats(g, v.id);
        if ((s.e_plus == 0 || s.e_minus == 0) && s.e_plus + s.e_minus != 1) {
            report.condition1.pass = false;
            report.condition1.details.push_back(
                {"s3.terminal-degree", v.id,
                 "sink/source vertex must have exactly one incident edge"});
        }
    }

    // (2) k-invariant inequalities at saddle vertices.
    for (const Vertex& v : g.vertices()) {
        if (v.label.kind != LabelKind::saddle || !v.label.matrix) continue;
        const VertexStats s = vertex_stats(g, v.id);
        const long long k = static_cast<long long>(ssft_k(*v.label.matrix));
        auto fail = [&](const std::string& message) {
            report.condition2.pass = false;
            report.condition2.details.push_back({"s3.saddle-bounds", v.id, message});
        };
        if (s.e_plus <= 0) fail("saddle vertex needs an incoming edge");
        if (s.e_minus <= 0) fail("saddle vertex needs an outgoing edge");
        if (!(k + 1 - s.g_minus <= s.e_plus && s.e_plus <= k + 1))
            fail("e+ = " + std::to_string(s.e_plus) + " outside [k+1-G-, k+1] = [" +
                 std::to_string(k + 1 - s.g_minus) + ", " + std::to_string(k + 1) + "]");
        if (!(k + 1 - s.g_plus <= s.e_minus && s.e_minus <= k + 1))
            fail("e- = " + std::to_string(s.e_minus) + " outside [k+1-G+, k+1] = [" +
                 std::to_string(k + 1 - s.g_plus) + ", " + std::to_string(k + 1) + "]");
    }

    // (3) Poincare-Hopf balance.
    for (const BalanceViolation& v : nsf_balance_check(g)) {
        report.condition3.pass = false;
        report.condition3.details.push_back(
            {"s3.balance", v.vertex,
             "residual " + std::to_string(v.actual) + ", required " +
                 std::to_string(v.required)});
    }
    return report;
}

std::vector<std::string> reachable_by_nonzero(const LyapunovGraph& g, const std::string& start,
                                              WalkDirection direction) {
    if (!g.has_vertex(start)) throw std::invalid_argument("unknown vertex id: " + start);
    std::set<std::string> seen{start};
    std::deque<std::string> queue{start};
    while (!queue.empty()) {
        const std::string v = queue.front();
        queue.pop_front();
        for (const Edge& e : g.edges()) {
            if (e.weight == 0) continue;
            const std::string& tail = direction == WalkDirection::forward ? e.from : e.to;
            const std::string& head = direction == WalkDirection::forward ? e.to : e.from;
            if (tail == v && seen.insert(head).second) queue.push_back(head);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::string> vanishing_zero_edges(const LyapunovGraph& g,
                                              const std::string& edge_id) {
    const Edge& e = g.edge(edge_id);
    const std::vector<std::string> region =
        reachable_by_nonzero(g, e.to, WalkDirection::forward);
    const std::set<std::string> in_region(region.begin(), region.end());
    std::vector<std::string> out;
    for (const Edge& candidate : g.edges())
        if (candidate.weight == 0 && in_region.count(candidate.to)) out.push_back(candidate.id);
    std::sort(out.begin(), out.end());
    return out;
}

SummandReport summand_lower_bound(const LyapunovGraph& g) {
    if (!validate_abstract(g).empty())
        throw std::invalid_argument("summand_lower_bound requires a valid Lyapunov graph");
    if (!nsf_balance_check(g).empty())
        throw std::invalid_argument("summand_lower_bound requires a balanced graph");

    SummandReport report;
    report.cycle_rank = cycle_rank(g);
    int max_weight = 0;
    for (const Edge& e : g.edges()) max_weight = std::max(max_weight, e.weight);
    report.n = std::max(0, max_weight - 1);
    report.rank_at_least_n = report.cycle_rank >= report.n;
    if (report.n == 0) {
        report.ok = true;
        return report;
    }

    std::vector<std::string> heaviest;
    for (const Edge& e : g.edges())
        if (e.weight == max_weight) heaviest.push_back(e.id);
    std::sort(heaviest.begin(), heaviest.end());

    for (const std::string& candidate : heaviest) {
        const std::vector<std::string> vanishing = vanishing_zero_edges(g, candidate);
        if (static_cast<int>(vanishing.size()) < report.n) {
            report.diagnostics.push_back(
                {"summand.too-few-zero-edges", candidate,
                 "need " + std::to_string(report.n) + " vanishing weight-0 edges, found " +
                     std::to_string(vanishing.size())});
            continue;
        }
        if (!connected_after_cut(g, {vanishing.begin(), vanishing.end()})) {
            report.diagnostics.push_back(
                {"summand.cut-disconnects", candidate,
                 "cutting the vanishing weight-0 edges disconnects the graph"});
            continue;
        }
        report.certificate.assign(vanishing.begin(), vanishing.begin() + report.n);
        report.ok = true;
        report.diagnostics.clear();
        return report;
    }
    return report;
}

TemplateVertexReport check_template_vertex(const LyapunovGraph& g, const std::string& vertex_id,
                                           const BoundaryReport& report) {
    const Vertex& v = g.vertex(vertex_id);
    if (v.label.kind != LabelKind::saddle)
        throw std::invalid_argument("check_template_vertex requires a saddle vertex");

    TemplateVertexReport out;
    out.g_T = template_genus(report);

    std::vector<const Edge*> heavy;
    for (const Edge& e : g.edges())
        if (e.to == vertex_id && e.weight > 1) heavy.push_back(&e);
    out.s = static_cast<int>(heavy.size());
    for (const Edge* e : heavy) out.genus_sum += e->weight;
    out.s_ok = out.s <= report.s0;
    out.genus_ok = out.genus_sum - out.s >= out.g_T;

    if (out.g_T == 0) {
        out.summand_ok = true;
        return out;
    }

    // Vanishing weight-0 edges of the mirrored lemma: those leaving the
    // region that can reach an initial vertex of a heavy edge along
    // nonzero-weight oriented paths.
    std::set<std::string> region;
    for (const Edge* e : heavy)
        for (const std::string& x : reachable_by_nonzero(g, e->from, WalkDirection::backward))
            region.insert(x);
    std::vector<std::string> vanishing;
    for (const Edge& e : g.edges())
        if (e.weight == 0 && region.count(e.from)) vanishing.push_back(e.id);
    std::sort(vanishing.begin(), vanishing.end());

    if (static_cast<int>(vanishing.size()) >= out.g_T &&
        connected_after_cut(g, {vanishing.begin(), vanishing.end()})) {
        out.certificate.assign(vanishing.begin(), vanishing.begin() + out.g_T);
        out.summand_ok = true;
    }
    return out;
}

}  // namespace nsflow
