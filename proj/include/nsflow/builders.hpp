#pragma once

#include "nsflow/graph.hpp"

namespace nsflow {

/// Tree on S^3 with n singular attractors and n singular repellers and a
/// central edge of weight n+1: a repelling orbit feeds a saddle chain with
/// weights 1, 2, ..., n+1 and the mirror chain descends into an attracting
/// orbit; the saddle at chain position j carries the deterministic matrix
/// with k-invariant j and sheds (receives) a weight-0 edge to an index-0
/// sink (from an index-3 source). Passes check_s3.
///
/// Ids: vertices repeller, u1..un, w1..wn, attractor, s0_1..s0_n,
/// s3_1..s3_n; edges e_up_j, e_mid, e_dn_j, z_up_j, z_dn_j.
LyapunovGraph build_lemma34(int n);

/// The splice of build_lemma34(n) onto n copies of S^1 x S^2: the singular
/// vertices are removed and the j-th source-side weight-0 edge is spliced to
/// the j-th sink-side one, leaving a weight-0 edge u_j -> w_j (id splice_j).
/// Connected, cycle rank n, orbit/saddle labels only, balanced.
LyapunovGraph build_prop35(int n);

/// Graph-level connected sum: e1 and e2 must be weight-1 edges terminating
/// at degree-1 attracting-orbit vertices. Those two attractors are deleted
/// and the edges rerouted into a fresh saddle closed orbit (matrix [[1]])
/// that drains through a weight-1 edge into a fresh attracting orbit.
/// Vertex and edge ids are prefixed "l:" and "r:"; the gadget cells are
/// surgery_saddle, surgery_attractor and surgery_out.
LyapunovGraph surgery_connect(const LyapunovGraph& left, const std::string& e1,
                              const LyapunovGraph& right, const std::string& e2);

struct SectionFiveGraphs {
    LyapunovGraph G;  // graph with open boundary ends, entrance weights 2 and 0
    LyapunovGraph L;  // closed graph on S^1 x S^2 with a 2T^2 regular level set
};

/// The two example graphs: G is a single saddle with dangling boundary edges
/// of weights 2 and 0 in and 1 out; L is its double, a repelling orbit ->
/// saddle -> saddle -> attracting orbit chain with weights 1, 2, 1 plus a
/// parallel weight-0 edge between the saddles.
SectionFiveGraphs build_section5();

}  // namespace nsflow
