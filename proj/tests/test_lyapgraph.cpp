#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsflow/builders.hpp"
#include "nsflow/graph.hpp"
#include "oracles.hpp"

#include <random>
#include <set>

using namespace nsflow;

namespace {

bool has_code(const std::vector<Diagnostic>& diags, const std::string& code) {
    for (const Diagnostic& d : diags)
        if (d.code == code) return true;
    return false;
}

LyapunovGraph two_cycle() {
    LyapunovGraph g;
    g.add_vertex("u", VertexLabel::repeller());
    g.add_vertex("v", VertexLabel::attractor());
    g.add_edge("a", "u", "v", 1);
    g.add_edge("b", "v", "u", 1);
    return g;
}

// Random multigraph over n vertices; cycles and disconnection allowed.
LyapunovGraph random_graph(std::mt19937& rng, int n, int extra_edges) {
    LyapunovGraph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex("v" + std::to_string(i), VertexLabel::attractor());
    std::uniform_int_distribution<int> pick(0, n - 1), weight(0, 3);
    for (int e = 0; e < extra_edges; ++e) {
        int a = pick(rng), b = pick(rng);
        if (a == b) b = (b + 1) % n;
        g.add_edge("e" + std::to_string(e), "v" + std::to_string(a), "v" + std::to_string(b),
                   weight(rng));
    }
    return g;
}

// Random connected acyclic multigraph: forward edges over a shuffled order.
LyapunovGraph random_connected_dag(std::mt19937& rng, int n, int extra_edges) {
    LyapunovGraph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex("v" + std::to_string(i), VertexLabel::attractor());
    std::uniform_int_distribution<int> weight(0, 3);
    int next_edge = 0;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> parent(0, i - 1);
        g.add_edge("e" + std::to_string(next_edge++), "v" + std::to_string(parent(rng)),
                   "v" + std::to_string(i), weight(rng));
    }
    for (int e = 0; e < extra_edges; ++e) {
        std::uniform_int_distribution<int> pick(0, n - 1);
        int a = pick(rng), b = pick(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        g.add_edge("e" + std::to_string(next_edge++), "v" + std::to_string(a),
                   "v" + std::to_string(b), weight(rng));
    }
    return g;
}

}  // namespace

TEST_CASE("validate_abstract on pinned graphs") {
    LyapunovGraph single;
    single.add_vertex("a", VertexLabel::attractor());
    CHECK(validate_abstract(single).empty());

    CHECK(has_code(validate_abstract(two_cycle()), "graph.oriented-cycle"));
    CHECK(validate_abstract(build_lemma34(2)).empty());

    LyapunovGraph disconnected;
    disconnected.add_vertex("a", VertexLabel::attractor());
    disconnected.add_vertex("b", VertexLabel::attractor());
    CHECK(has_code(validate_abstract(disconnected), "graph.disconnected"));

    LyapunovGraph reducible;
    reducible.add_vertex("s", VertexLabel::saddle(IntMatrix::from_rows({{1, 0}, {1, 1}})));
    CHECK(has_code(validate_abstract(reducible), "vertex.reducible-matrix"));

    LyapunovGraph empty;
    CHECK(has_code(validate_abstract(empty), "graph.empty"));
}

TEST_CASE("graph construction rejects id clashes and dangling endpoints") {
    LyapunovGraph g;
    g.add_vertex("a", VertexLabel::attractor());
    CHECK_THROWS_AS(g.add_vertex("a", VertexLabel::repeller()), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge("e", "a", "missing", 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge("e", "a", "a", -1), std::invalid_argument);
}

TEST_CASE("acyclicity agrees with brute-force path enumeration on small graphs") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const LyapunovGraph g = random_graph(rng, 2 + trial % 5, trial % 9);
        const bool cyclic_by_validate = has_code(validate_abstract(g), "graph.oriented-cycle") ||
                                        has_code(validate_abstract(g), "edge.self-loop");
        CHECK(cyclic_by_validate == oracle::has_oriented_cycle_by_paths(g));
    }
}

TEST_CASE("cycle_rank is edges minus vertices plus one") {
    CHECK(cycle_rank(build_lemma34(3)) == 0);
    CHECK(cycle_rank(build_section5().L) == 1);
    for (int n = 1; n <= 4; ++n) CHECK(cycle_rank(build_prop35(n)) == n);

    LyapunovGraph disconnected;
    disconnected.add_vertex("a", VertexLabel::attractor());
    disconnected.add_vertex("b", VertexLabel::attractor());
    CHECK_THROWS_AS(cycle_rank(disconnected), std::invalid_argument);
}

TEST_CASE("cycle_rank equals the spanning-tree count of independent cycles") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const LyapunovGraph g = random_connected_dag(rng, 2 + trial % 7, trial % 5);
        CHECK(cycle_rank(g) == oracle::cycle_count_by_spanning_tree(g));
    }
}

TEST_CASE("vertex_residual on pinned cases") {
    LyapunovGraph isolated;
    isolated.add_vertex("a", VertexLabel::attractor());
    CHECK(vertex_residual(isolated, "a") == 0);
    CHECK_THROWS_AS(vertex_residual(isolated, "nope"), std::invalid_argument);

    LyapunovGraph pair;
    pair.add_vertex("r", VertexLabel::repeller());
    pair.add_vertex("a", VertexLabel::attractor());
    pair.add_edge("e", "r", "a", 1);
    CHECK(vertex_residual(pair, "a") == 0);  // 1 - 0 - 1 + 0

    LyapunovGraph saddle;
    saddle.add_vertex("x", VertexLabel::repeller());
    saddle.add_vertex("y", VertexLabel::repeller());
    saddle.add_vertex("s", VertexLabel::saddle(IntMatrix::from_rows({{1}})));
    saddle.add_vertex("a", VertexLabel::attractor());
    saddle.add_edge("e1", "x", "s", 1);
    saddle.add_edge("e2", "y", "s", 1);
    saddle.add_edge("e3", "s", "a", 1);
    CHECK(vertex_residual(saddle, "s") == 0);  // 2 - 1 - 2 + 1
}

TEST_CASE("residuals sum to zero over any graph") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        const LyapunovGraph g = random_graph(rng, 2 + trial % 6, trial % 10);
        long long total = 0;
        for (const Vertex& v : g.vertices()) total += vertex_residual(g, v.id);
        CHECK(total == 0);
    }
}

TEST_CASE("nsf_balance_check flags exactly the endpoints of a perturbed edge") {
    CHECK(nsf_balance_check(build_lemma34(1)).empty());

    LyapunovGraph g = build_lemma34(1);
    g.set_weight("e_mid", g.edge("e_mid").weight + 1);
    const auto violations = nsf_balance_check(g);
    std::set<std::string> flagged;
    for (const auto& v : violations) flagged.insert(v.vertex);
    CHECK(flagged == std::set<std::string>{"u1", "w1"});
}

TEST_CASE("an index-0 sink fed by a weight-0 edge balances") {
    LyapunovGraph g;
    g.add_vertex("src", VertexLabel::singularity(3));
    g.add_vertex("sink", VertexLabel::singularity(0));
    g.add_edge("z", "src", "sink", 0);
    CHECK(nsf_balance_check(g).empty());  // residual 1 = (-1)^0 and -1 = (-1)^3
}

TEST_CASE("check_s3 accepts the singular trees and rejects perturbations") {
    for (int n = 1; n <= 5; ++n) CHECK(check_s3(build_lemma34(n)).pass());

    CHECK_FALSE(check_s3(build_prop35(1)).condition1.pass);  // splice adds a cycle
    CHECK(check_s3(build_prop35(1)).condition2.pass);
    CHECK(check_s3(build_prop35(1)).condition3.pass);

    LyapunovGraph g = build_lemma34(2);
    g.set_label("u2", VertexLabel::saddle(IntMatrix::from_rows({{2}})));  // k drops to 0
    const S3Report report = check_s3(g);
    CHECK_FALSE(report.condition2.pass);
    REQUIRE(!report.condition2.details.empty());
    CHECK(report.condition2.details.front().subject == "u2");
    CHECK(report.condition3.pass);
}

TEST_CASE("check_s3 preamble catches bad sink and source labels") {
    LyapunovGraph g;
    g.add_vertex("r", VertexLabel::repeller());
    g.add_vertex("a", VertexLabel::repeller());  // sink labeled as a repeller
    g.add_edge("e", "r", "a", 1);
    const S3Report report = check_s3(g);
    CHECK_FALSE(report.pass());
    CHECK(has_code(report.preamble, "s3.sink-label"));
}

TEST_CASE("reachable_by_nonzero walks only positive-weight edges") {
    LyapunovGraph zero;
    zero.add_vertex("u", VertexLabel::repeller());
    zero.add_vertex("v", VertexLabel::attractor());
    zero.add_edge("e", "u", "v", 0);
    CHECK(reachable_by_nonzero(zero, "u", WalkDirection::forward) ==
          std::vector<std::string>{"u"});

    LyapunovGraph two;
    two.add_vertex("u", VertexLabel::repeller());
    two.add_vertex("v", VertexLabel::attractor());
    two.add_edge("e", "u", "v", 2);
    CHECK(reachable_by_nonzero(two, "u", WalkDirection::forward) ==
          std::vector<std::string>{"u", "v"});

    const LyapunovGraph l = build_section5().L;
    CHECK(reachable_by_nonzero(l, l.edge("mid").to, WalkDirection::forward) ==
          std::vector<std::string>{"attractor", "vplus"});
    CHECK(reachable_by_nonzero(l, "vplus", WalkDirection::backward) ==
          std::vector<std::string>{"repeller", "vminus", "vplus"});
}

TEST_CASE("vanishing_zero_edges picks the sink-side weight-0 edges") {
    LyapunovGraph tree;
    tree.add_vertex("r", VertexLabel::repeller());
    tree.add_vertex("a", VertexLabel::attractor());
    tree.add_edge("e", "r", "a", 1);
    CHECK(vanishing_zero_edges(tree, "e").empty());

    for (int n = 1; n <= 3; ++n) {
        std::vector<std::string> expected;
        for (int j = 1; j <= n; ++j) expected.push_back("z_dn_" + std::to_string(j));
        CHECK(vanishing_zero_edges(build_lemma34(n), "e_mid") == expected);

        expected.clear();
        for (int j = 1; j <= n; ++j) expected.push_back("splice_" + std::to_string(j));
        CHECK(vanishing_zero_edges(build_prop35(n), "e_mid") == expected);
    }
}

TEST_CASE("summand_lower_bound certifies the constructions") {
    LyapunovGraph light;
    light.add_vertex("r", VertexLabel::repeller());
    light.add_vertex("a", VertexLabel::attractor());
    light.add_edge("e", "r", "a", 1);
    const SummandReport trivial = summand_lower_bound(light);
    CHECK(trivial.n == 0);
    CHECK(trivial.ok);
    CHECK(trivial.certificate.empty());

    const SummandReport spliced = summand_lower_bound(build_prop35(3));
    CHECK(spliced.n == 3);
    CHECK(spliced.ok);
    CHECK(spliced.certificate.size() == 3);
    CHECK(spliced.rank_at_least_n);

    const SummandReport singular = summand_lower_bound(build_lemma34(2));
    CHECK(singular.n == 2);
    CHECK(singular.ok);
    CHECK(singular.certificate == std::vector<std::string>{"z_dn_1", "z_dn_2"});

    CHECK_THROWS_AS(summand_lower_bound(two_cycle()), std::invalid_argument);
}

TEST_CASE("summand certificates survive an independent connectivity check") {
    for (int n = 1; n <= 4; ++n) {
        const LyapunovGraph g = build_prop35(n);
        const SummandReport report = summand_lower_bound(g);
        REQUIRE(report.ok);
        CHECK(oracle::connected_after_cut_by_labels(
            g, {report.certificate.begin(), report.certificate.end()}));
    }
    const LyapunovGraph g = build_lemma34(3);
    const SummandReport report = summand_lower_bound(g);
    REQUIRE(report.ok);
    CHECK(oracle::connected_after_cut_by_labels(
        g, {report.certificate.begin(), report.certificate.end()}));
}

TEST_CASE("check_template_vertex evaluates the three compatibility gates") {
    // Boundary data with no demands at all.
    BoundaryReport trivial;
    {
        SurfaceComponent x;
        x.entrance = true;
        x.capped_genus = 0;
        trivial.entrance.push_back(x);
        trivial.s1 = 1;
        SurfaceComponent y = x;
        y.entrance = false;
        trivial.exit.push_back(y);
        trivial.t1 = 1;
    }
    const LyapunovGraph spliced = build_prop35(1);
    const TemplateVertexReport easy = check_template_vertex(spliced, "u1", trivial);
    CHECK(easy.g_T == 0);
    CHECK(easy.s_ok);
    CHECK(easy.genus_ok);
    CHECK(easy.summand_ok);

    CHECK_THROWS_AS(check_template_vertex(spliced, "repeller", trivial), std::invalid_argument);

    // One genus-2 entrance piece on each side: s0 = 1, g(T) = 1.
    BoundaryReport heavy;
    {
        SurfaceComponent x;
        x.entrance = true;
        x.capped_genus = 2;
        heavy.entrance.push_back(x);
        heavy.s0 = 1;
        SurfaceComponent y = x;
        y.entrance = false;
        heavy.exit.push_back(y);
        heavy.t0 = 1;
    }
    // w1 of the spliced graph has incoming weights {2, 0}: s = 1, sum = 2.
    const TemplateVertexReport mid = check_template_vertex(spliced, "w1", heavy);
    CHECK(mid.g_T == 1);
    CHECK(mid.s == 1);
    CHECK(mid.s_ok);      // 1 <= 1
    CHECK(mid.genus_ok);  // 2 - 1 >= 1
    CHECK(mid.summand_ok);
    CHECK(mid.certificate == std::vector<std::string>{"splice_1"});

    // Two heavy incoming edges against s0 = 1.
    LyapunovGraph wide;
    wide.add_vertex("x", VertexLabel::repeller());
    wide.add_vertex("y", VertexLabel::repeller());
    wide.add_vertex("s", VertexLabel::saddle(IntMatrix::from_rows({{1}})));
    wide.add_vertex("a", VertexLabel::attractor());
    wide.add_edge("e1", "x", "s", 2);
    wide.add_edge("e2", "y", "s", 2);
    wide.add_edge("e3", "s", "a", 1);
    const TemplateVertexReport crowded = check_template_vertex(wide, "s", heavy);
    CHECK(crowded.s == 2);
    CHECK_FALSE(crowded.s_ok);
}

TEST_CASE("diagnostics render as code, subject and message") {
    const Diagnostic d{"some.code", "v7", "something happened"};
    CHECK(render(d) == "some.code [v7]: something happened");
    const Diagnostic bare{"other.code", "", "message"};
    CHECK(render(bare) == "other.code: message");
}
