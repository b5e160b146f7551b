#pragma once

#include "nsflow/graph.hpp"
#include "nsflow/template.hpp"

#include <stdexcept>
#include <string>

namespace nsflow {

/// Malformed document: not JSON, or JSON that violates the schema. The
/// message names the offending path.
struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph documents:
//   {"vertices": [{"id": "...", "label": {"kind": "attractor" | "repeller" |
//                  "saddle" | "singularity" | "boundary",
//                  "matrix": [[..]] (saddle only),
//                  "index": 0..3 (singularity only)}}, ...],
//    "edges": [{"id": "...", "from": "...", "to": "...", "weight": n}, ...]}
LyapunovGraph parse_graph_document(const std::string& text);
std::string serialize_graph_document(const LyapunovGraph& g);

// Template documents:
//   {"charts": [{"id": "...", "kind": "joining" | "splitting"}, ...],
//    "strips": [{"from": ["chart", "port"], "to": ["chart", "port"],
//                "twist": 0 | 1}, ...]}
Template parse_template_document(const std::string& text);
std::string serialize_template_document(const Template& t);

/// Deterministic DOT text: vertex shapes encode the label kinds, edge labels
/// carry the weights. Byte-identical output for identical input.
std::string export_dot(const LyapunovGraph& g);

}  // namespace nsflow
