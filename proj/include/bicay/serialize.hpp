#pragma once

#include <string>

#include "bicay/graph.hpp"

namespace bicay {

// Graphviz `graph` block with one declaration line per vertex and one
// `--` line per edge, both in index order. Vertex ids are "side:element"
// for bi-partitioned graphs and the bare element otherwise. Output is
// deterministic byte-for-byte for a given graph.
std::string export_dot(const LabeledGraph& g, const std::string& name);

// JSON document:
//   { "version": 1, "groupDescriptor": "...", "meta": "...",
//     "vertices": [{"side": s, "element": e}, ...],
//     "edges": [[u, v], ...] }
// Keys and array entries are emitted in a fixed order so equal graphs
// serialize to equal bytes.
std::string export_json(const LabeledGraph& g);

// Inverse of export_json. Malformed JSON or schema violations (wrong
// version, out-of-range endpoints, self-loops, bad side values) raise
// ParseError carrying a byte offset where available.
LabeledGraph import_json(const std::string& text);

// One `#` summary line followed by one "u v" line per edge, using the same
// vertex ids as the DOT form. An edgeless graph yields just the header.
std::string export_edgelist(const LabeledGraph& g);

}  // namespace bicay
