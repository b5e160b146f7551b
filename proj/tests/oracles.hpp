#pragma once

// Test-only reference implementations, kept deliberately naive and separate
// from the library code they check.

#include "nsflow/gf2.hpp"
#include "nsflow/graph.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// Kernel dimension of (I - B) over the two-element field by enumerating all
// 2^m vectors and counting solutions. Requires m <= 20.
inline std::size_t kernel_dim_by_enumeration(const nsflow::Gf2Matrix& b) {
    const std::size_t m = b.dim();
    std::vector<std::uint32_t> rows(m, 0);  // rows of I - B as bitmasks
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const bool entry = (i == j) ? !b.at(i, j) : b.at(i, j);
            if (entry) rows[i] |= std::uint32_t{1} << j;
        }
    std::size_t solutions = 0;
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << m); ++x) {
        bool in_kernel = true;
        for (std::size_t i = 0; i < m && in_kernel; ++i)
            in_kernel = __builtin_parity(rows[i] & x) == 0;
        if (in_kernel) ++solutions;
    }
    std::size_t k = 0;
    while ((std::size_t{1} << k) < solutions) ++k;
    return k;
}

// Strong connectivity of the support digraph via boolean transitive closure.
inline bool irreducible_by_closure(const nsflow::IntMatrix& a) {
    const std::size_t m = a.dim();
    std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) reach[i][i] = true;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (a.at(i, j) > 0) reach[i][j] = true;
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (!reach[i][j]) return false;
    return true;
}

// Number of independent cycles: non-tree edges of a spanning forest grown
// over the undirected multigraph.
inline int cycle_count_by_spanning_tree(const nsflow::LyapunovGraph& g) {
    std::map<std::string, std::string> parent;
    for (const nsflow::Vertex& v : g.vertices()) parent[v.id] = v.id;
    auto find = [&](std::string x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int non_tree = 0;
    for (const nsflow::Edge& e : g.edges()) {
        const std::string a = find(e.from), b = find(e.to);
        if (a == b)
            ++non_tree;
        else
            parent[a] = b;
    }
    return non_tree;
}

// Oriented-cycle detection by brute-force path extension: grow the
// reachability relation edge by edge for |V| rounds and look for a vertex
// that reaches itself.
inline bool has_oriented_cycle_by_paths(const nsflow::LyapunovGraph& g) {
    std::set<std::pair<std::string, std::string>> reach;
    for (const nsflow::Edge& e : g.edges()) reach.insert({e.from, e.to});
    for (std::size_t round = 0; round < g.vertices().size(); ++round) {
        std::set<std::pair<std::string, std::string>> next = reach;
        for (const auto& [a, b] : reach)
            for (const nsflow::Edge& e : g.edges())
                if (e.from == b) next.insert({a, e.to});
        reach.swap(next);
    }
    for (const nsflow::Vertex& v : g.vertices())
        if (reach.count({v.id, v.id})) return true;
    return false;
}

// Connectivity after removing a set of edges, ignoring vertices that end up
// with no incident edges; written independently of the library's traversal.
inline bool connected_after_cut_by_labels(const nsflow::LyapunovGraph& g,
                                          const std::set<std::string>& cut) {
    std::map<std::string, int> component;
    int next_label = 0;
    for (const nsflow::Vertex& v : g.vertices()) component[v.id] = next_label++;
    bool merged = true;
    while (merged) {
        merged = false;
        for (const nsflow::Edge& e : g.edges()) {
            if (cut.count(e.id)) continue;
            const int a = component[e.from], b = component[e.to];
            if (a != b) {
                for (auto& [id, label] : component)
                    if (label == std::max(a, b)) label = std::min(a, b);
                merged = true;
            }
        }
    }
    std::set<int> active;
    for (const nsflow::Edge& e : g.edges())
        if (!cut.count(e.id)) {
            active.insert(component[e.from]);
            active.insert(component[e.to]);
        }
    return active.size() <= 1;
}

}  // namespace oracle
