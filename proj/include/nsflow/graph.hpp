#pragma once

#include "nsflow/gf2.hpp"
#include "nsflow/template.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace nsflow {

enum class LabelKind { attractor, repeller, saddle, singularity, boundary };

/// Chain-recurrent piece attached to a vertex: an attracting or repelling
/// closed orbit, a suspended subshift with its transition matrix, a
/// singularity of index 0..3, or an open boundary end (used by graphs of
/// flows on manifolds with boundary).
struct VertexLabel {
    LabelKind kind = LabelKind::attractor;
    std::optional<IntMatrix> matrix;  // saddle only
    std::optional<int> index;         // singularity only

    static VertexLabel attractor() { return {LabelKind::attractor, {}, {}}; }
    static VertexLabel repeller() { return {LabelKind::repeller, {}, {}}; }
    static VertexLabel saddle(IntMatrix m) { return {LabelKind::saddle, std::move(m), {}}; }
    static VertexLabel singularity(int r);  // throws unless 0 <= r <= 3
    static VertexLabel boundary() { return {LabelKind::boundary, {}, {}}; }

    bool operator==(const VertexLabel&) const = default;
};

struct Vertex {
    std::string id;
    VertexLabel label;
    bool operator==(const Vertex&) const = default;
};

struct Edge {
    std::string id;
    std::string from;
    std::string to;
    int weight = 0;  // genus of the regular level set; 0 means a sphere
    bool operator==(const Edge&) const = default;
};

struct Diagnostic {
    std::string code;
    std::string subject;  // vertex or edge id, possibly empty
    std::string message;
};

std::string render(const Diagnostic& d);

/// Finite directed multigraph with weighted edges and labeled vertices.
/// Ids are unique and edge endpoints must exist; everything else (cycles,
/// disconnection, bad labels) is left to validate_abstract so that defective
/// graphs can be represented and diagnosed.
class LyapunovGraph {
public:
    void add_vertex(const std::string& id, VertexLabel label);
    void add_edge(const std::string& id, const std::string& from, const std::string& to,
                  int weight);
    void remove_edge(const std::string& id);
    void remove_vertex(const std::string& id);  // throws if edges still touch it
    void redirect_edge(const std::string& id, const std::string& new_to);
    void set_weight(const std::string& id, int weight);
    void set_label(const std::string& id, VertexLabel label);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_vertex(const std::string& id) const { return vertex_index_.count(id) > 0; }
    bool has_edge(const std::string& id) const { return edge_index_.count(id) > 0; }
    const Vertex& vertex(const std::string& id) const;
    const Edge& edge(const std::string& id) const;

    bool operator==(const LyapunovGraph& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }

private:
    std::size_t vertex_pos(const std::string& id) const;
    std::size_t edge_pos(const std::string& id) const;

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, std::size_t> vertex_index_;
    std::unordered_map<std::string, std::size_t> edge_index_;
};

/// Per-vertex edge and weight tallies: e+ incoming edges of total weight G+,
/// e- outgoing of total weight G-.
struct VertexStats {
    int e_plus = 0;
    int e_minus = 0;
    long long g_plus = 0;
    long long g_minus = 0;
};

VertexStats vertex_stats(const LyapunovGraph& g, const std::string& vertex_id);

/// e+ - e- - G+ + G-, the Poincare-Hopf balance quantity of a vertex.
long long vertex_residual(const LyapunovGraph& g, const std::string& vertex_id);

/// Empty iff the graph is nonempty, connected, free of oriented cycles and
/// self-loops, and every saddle matrix is irreducible.
std::vector<Diagnostic> validate_abstract(const LyapunovGraph& g);

/// First Betti number |E| - |V| + 1; throws std::invalid_argument if the
/// graph is empty or disconnected.
int cycle_rank(const LyapunovGraph& g);

struct BalanceViolation {
    std::string vertex;
    long long actual = 0;
    long long required = 0;
};

/// Poincare-Hopf balance at every vertex: residual must equal (-1)^r at a
/// singularity of index r and 0 at orbit/saddle vertices. Boundary vertices
/// are exempt. Returns the offending vertices.
std::vector<BalanceViolation> nsf_balance_check(const LyapunovGraph& g);

struct S3Condition {
    bool pass = true;
    std::vector<Diagnostic> details;
};

/// Result of the S^3 realizability test. `preamble` holds labeling
/// violations (sinks must be attractors or index-0 singularities, sources
/// repellers or index-3 singularities); condition1 is the tree shape test,
/// condition2 the per-saddle k-invariant inequalities, condition3 the
/// balance test.
struct S3Report {
    std::vector<Diagnostic> preamble;
    S3Condition condition1;
    S3Condition condition2;
    S3Condition condition3;
    bool pass() const {
        return preamble.empty() && condition1.pass && condition2.pass && condition3.pass;
    }
};

S3Report check_s3(const LyapunovGraph& g);

enum class WalkDirection { forward, backward };

/// All vertices reachable from `start` along oriented paths whose every edge
/// has weight >= 1 (or against the orientation, for backward). Includes
/// `start`. Sorted by id.
std::vector<std::string> reachable_by_nonzero(const LyapunovGraph& g, const std::string& start,
                                              WalkDirection direction);

/// The weight-0 edges whose terminal vertex lies in the region reachable
/// from t(edge) along nonzero-weight oriented paths. Sorted by id.
std::vector<std::string> vanishing_zero_edges(const LyapunovGraph& g,
                                              const std::string& edge_id);

struct SummandReport {
    int n = 0;                            // max edge weight minus one, floored at 0
    std::vector<std::string> certificate; // weight-0 edges whose cut keeps the graph connected
    bool ok = false;
    int cycle_rank = 0;
    bool rank_at_least_n = false;
    std::vector<Diagnostic> diagnostics;
};

/// Lower bound on the number of S^1 x S^2 connected summands certified by a
/// maximum-weight edge: its vanishing weight-0 edges must contain n edges
/// that can all be cut without disconnecting the graph (vertices stranded
/// with no remaining edges are dropped). Requires a validated, balanced
/// graph.
SummandReport summand_lower_bound(const LyapunovGraph& g);

struct TemplateVertexReport {
    int s = 0;                 // incoming edges of weight > 1
    long long genus_sum = 0;   // their total weight
    int g_T = 0;
    bool s_ok = false;         // s <= s0 of the boundary report
    bool genus_ok = false;     // genus_sum - s >= g(T)
    bool summand_ok = false;   // g(T) cuttable weight-0 edges exist
    std::vector<std::string> certificate;
};

/// Compatibility of a saddle vertex with a template's boundary data: the
/// heavy incoming edges must be no more numerous than the genus->1 entrance
/// components, carry enough total genus, and admit g(T) cuttable weight-0
/// edges fed from the region backward-reachable along nonzero weights.
/// Throws std::invalid_argument if the vertex is not a saddle.
TemplateVertexReport check_template_vertex(const LyapunovGraph& g, const std::string& vertex_id,
                                           const BoundaryReport& report);

}  // namespace nsflow
