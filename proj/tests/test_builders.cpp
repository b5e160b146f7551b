#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsflow/builders.hpp"
#include "nsflow/graph.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace nsflow;

namespace {

std::multiset<int> weight_multiset(const LyapunovGraph& g) {
    std::multiset<int> weights;
    for (const Edge& e : g.edges()) weights.insert(e.weight);
    return weights;
}

std::multiset<long long> nonzero_residuals(const LyapunovGraph& g) {
    std::multiset<long long> out;
    for (const Vertex& v : g.vertices()) {
        const long long r = vertex_residual(g, v.id);
        if (r != 0) out.insert(r);
    }
    return out;
}

int count_kind(const LyapunovGraph& g, LabelKind kind, int index = -1) {
    int n = 0;
    for (const Vertex& v : g.vertices())
        if (v.label.kind == kind && (index < 0 || v.label.index == index)) ++n;
    return n;
}

}  // namespace

TEST_CASE("build_lemma34 produces the singular trees") {
    CHECK_THROWS_AS(build_lemma34(0), std::invalid_argument);

    const LyapunovGraph one = build_lemma34(1);
    CHECK(one.vertices().size() == 6);
    CHECK(weight_multiset(one) == std::multiset<int>{0, 0, 1, 1, 2});

    const LyapunovGraph two = build_lemma34(2);
    int weight3 = 0;
    for (const Edge& e : two.edges())
        if (e.weight == 3) ++weight3;
    CHECK(weight3 == 1);
    CHECK(count_kind(two, LabelKind::singularity, 0) == 2);
    CHECK(count_kind(two, LabelKind::singularity, 3) == 2);

    for (int n = 1; n <= 5; ++n) {
        const LyapunovGraph g = build_lemma34(n);
        CHECK(validate_abstract(g).empty());
        CHECK(check_s3(g).pass());
        CHECK(cycle_rank(g) == 0);
        CHECK(count_kind(g, LabelKind::singularity, 0) == n);
        CHECK(count_kind(g, LabelKind::singularity, 3) == n);
    }
}

TEST_CASE("any single-edge mutation of a singular tree trips a check") {
    for (int n = 1; n <= 4; ++n) {
        const LyapunovGraph base = build_lemma34(n);
        for (const Edge& e : base.edges()) {
            for (int delta : {+1, -1}) {
                if (e.weight + delta < 0) continue;
                LyapunovGraph mutant = base;
                mutant.set_weight(e.id, e.weight + delta);
                CHECK((!nsf_balance_check(mutant).empty() || !check_s3(mutant).pass()));
            }
            LyapunovGraph pruned = base;
            pruned.remove_edge(e.id);
            CHECK_FALSE(check_s3(pruned).pass());  // disconnection or imbalance
        }
    }
}

TEST_CASE("build_prop35 splices away every singularity") {
    CHECK_THROWS_AS(build_prop35(0), std::invalid_argument);

    // The splice of the n=1 tree: two singular leaves and their pendant
    // edges go away, one weight-0 edge comes back.
    const LyapunovGraph one = build_prop35(1);
    CHECK(one.vertices().size() == 4);
    CHECK(one.edges().size() == 4);
    CHECK(cycle_rank(one) == 1);

    for (int n = 1; n <= 5; ++n) {
        const LyapunovGraph g = build_prop35(n);
        CHECK(validate_abstract(g).empty());
        CHECK(nsf_balance_check(g).empty());
        CHECK(cycle_rank(g) == n);
        CHECK(count_kind(g, LabelKind::singularity) == 0);
        CHECK(g.edge("e_mid").weight == n + 1);

        const SummandReport report = summand_lower_bound(g);
        CHECK(report.n == n);
        CHECK(report.ok);
    }
}

TEST_CASE("surgery_connect glues through the saddle gadget") {
    LyapunovGraph tiny;
    tiny.add_vertex("r", VertexLabel::repeller());
    tiny.add_vertex("a", VertexLabel::attractor());
    tiny.add_edge("e", "r", "a", 1);

    const LyapunovGraph joined = surgery_connect(tiny, "e", tiny, "e");
    CHECK(joined.vertices().size() == 4);
    CHECK(validate_abstract(joined).empty());
    CHECK(nsf_balance_check(joined).empty());
    CHECK(vertex_residual(joined, "surgery_saddle") == 0);  // 2 - 1 - 2 + 1
    CHECK(cycle_rank(joined) == 0);

    const LyapunovGraph big =
        surgery_connect(build_prop35(2), "e_dn_1", build_prop35(3), "e_dn_1");
    CHECK(cycle_rank(big) == 5);
    CHECK(nsf_balance_check(big).empty());
}

TEST_CASE("surgery_connect rejects ineligible edges") {
    LyapunovGraph tiny;
    tiny.add_vertex("r", VertexLabel::repeller());
    tiny.add_vertex("a", VertexLabel::attractor());
    tiny.add_edge("e", "r", "a", 1);

    LyapunovGraph heavy;
    heavy.add_vertex("r", VertexLabel::repeller());
    heavy.add_vertex("a", VertexLabel::attractor());
    heavy.add_edge("e", "r", "a", 2);
    CHECK_THROWS_AS(surgery_connect(heavy, "e", tiny, "e"), std::invalid_argument);
    CHECK_THROWS_AS(surgery_connect(tiny, "e", heavy, "e"), std::invalid_argument);

    LyapunovGraph wrong_label;
    wrong_label.add_vertex("r", VertexLabel::repeller());
    wrong_label.add_vertex("s", VertexLabel::saddle(IntMatrix::from_rows({{1}})));
    wrong_label.add_edge("e", "r", "s", 1);
    CHECK_THROWS_AS(surgery_connect(wrong_label, "e", tiny, "e"), std::invalid_argument);

    // Attractor of degree 2 is not a valid surgery site.
    LyapunovGraph busy;
    busy.add_vertex("r", VertexLabel::repeller());
    busy.add_vertex("a", VertexLabel::attractor());
    busy.add_edge("e1", "r", "a", 1);
    busy.add_edge("e2", "r", "a", 1);
    CHECK_THROWS_AS(surgery_connect(busy, "e1", tiny, "e"), std::invalid_argument);

    CHECK_THROWS_AS(surgery_connect(tiny, "missing", tiny, "e"), std::invalid_argument);
}

TEST_CASE("surgery_connect preserves the multiset of nonzero residuals") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        LyapunovGraph left = build_prop35(1 + trial % 3);
        LyapunovGraph right = build_lemma34(1 + (trial / 3) % 3);
        // Unbalance some interior weights away from the surgery sites.
        if (trial % 2 == 0) left.set_weight("e_mid", left.edge("e_mid").weight + 1);
        if (trial % 5 == 0) right.set_weight("z_up_1", 1);

        const auto expected = [&] {
            std::multiset<long long> m = nonzero_residuals(left);
            for (long long r : nonzero_residuals(right)) m.insert(r);
            return m;
        }();
        const LyapunovGraph joined = surgery_connect(left, "e_dn_1", right, "e_dn_1");
        CHECK(nonzero_residuals(joined) == expected);
        CHECK(cycle_rank(joined) == cycle_rank(left) + cycle_rank(right));
    }
}

TEST_CASE("build_section5 produces the fixture pair") {
    const SectionFiveGraphs pair = build_section5();

    CHECK(pair.G.vertices().size() == 4);
    CHECK(pair.G.edges().size() == 3);
    CHECK(count_kind(pair.G, LabelKind::boundary) == 3);
    CHECK(vertex_residual(pair.G, "saddle") == 0);  // 2 - 1 - 2 + 1
    CHECK(pair.G.edge("x1").weight == 2);
    CHECK(pair.G.edge("x2").weight == 0);
    CHECK(pair.G.edge("y").weight == 1);
    CHECK(nsf_balance_check(pair.G).empty());  // boundary ends are exempt

    const LyapunovGraph& l = pair.L;
    CHECK(validate_abstract(l).empty());
    CHECK(nsf_balance_check(l).empty());
    CHECK(vertex_residual(l, "vminus") == 0);  // 1 - 2 - 1 + 2
    CHECK(vertex_residual(l, "vplus") == 0);   // 2 - 1 - 2 + 1
    CHECK(cycle_rank(l) == 1);

    int max_weight = 0;
    for (const Edge& e : l.edges()) max_weight = std::max(max_weight, e.weight);
    CHECK(max_weight == 2);

    const SummandReport report = summand_lower_bound(l);
    CHECK(report.n == 1);
    CHECK(report.ok);
    CHECK(report.certificate == std::vector<std::string>{"zero"});
}

TEST_CASE("the section 5 closed graph is its own mirror") {
    const LyapunovGraph l = build_section5().L;
    const std::map<std::string, std::string> mirror{{"repeller", "attractor"},
                                                    {"attractor", "repeller"},
                                                    {"vminus", "vplus"},
                                                    {"vplus", "vminus"}};
    // Reversing the orientation and swapping attractor/repeller labels must
    // give the same edge multiset under the mirror vertex map.
    std::multiset<std::tuple<std::string, std::string, int>> original, reversed;
    for (const Edge& e : l.edges()) {
        original.insert({e.from, e.to, e.weight});
        reversed.insert({mirror.at(e.to), mirror.at(e.from), e.weight});
    }
    CHECK(original == reversed);
    CHECK(l.vertex("repeller").label.kind == LabelKind::repeller);
    CHECK(l.vertex("attractor").label.kind == LabelKind::attractor);
    CHECK(l.vertex("vminus").label == l.vertex("vplus").label);
}
