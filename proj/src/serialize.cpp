#include "bicay/serialize.hpp"

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "bicay/errors.hpp"

namespace bicay {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string vertex_id(const LabeledGraph& g, int v) {
  const VertexLabel& label = g.label(v);
  if (label.side < 0) return std::to_string(label.element);
  return std::to_string(label.side) + ":" + std::to_string(label.element);
}

}  // namespace

std::string export_dot(const LabeledGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "  \"" << vertex_id(g, v) << "\";\n";
  for (auto [u, v] : g.edges())
    out << "  \"" << vertex_id(g, u) << "\" -- \"" << vertex_id(g, v)
        << "\";\n";
  out << "}\n";
  return out.str();
}

std::string export_json(const LabeledGraph& g) {
  ordered_json doc;
  doc["version"] = 1;
  doc["groupDescriptor"] = g.group_descriptor();
  doc["meta"] = g.meta();
  ordered_json vertices = ordered_json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    ordered_json entry;
    entry["side"] = static_cast<int>(g.label(v).side);
    entry["element"] = g.label(v).element;
    vertices.push_back(std::move(entry));
  }
  doc["vertices"] = std::move(vertices);
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back(ordered_json::array({u, v}));
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

LabeledGraph import_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  auto fail = [](const std::string& msg) -> ParseError {
    return ParseError("graph document: " + msg, 0);
  };
  if (!doc.is_object()) throw fail("top level must be an object");
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != 1)
    throw fail("unsupported or missing version (expected 1)");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw fail("missing vertices array");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw fail("missing edges array");

  const auto& vertices = doc["vertices"];
  const int n = static_cast<int>(vertices.size());
  if (n > kMaxGraphVertices) throw fail("too many vertices");
  GraphBuilder builder(n);
  for (int v = 0; v < n; ++v) {
    const auto& entry = vertices[static_cast<size_t>(v)];
    if (!entry.is_object() || !entry.contains("side") ||
        !entry.contains("element") || !entry["side"].is_number_integer() ||
        !entry["element"].is_number_integer())
      throw fail("vertex " + std::to_string(v) +
                 " must be {side, element} with integer fields");
    const int side = entry["side"].get<int>();
    if (side < -1 || side > 1)
      throw fail("vertex " + std::to_string(v) + " has invalid side " +
                 std::to_string(side));
    builder.set_label(v, VertexLabel{static_cast<std::int8_t>(side),
                                     entry["element"].get<int>()});
  }
  for (const auto& edge : doc["edges"]) {
    if (!edge.is_array() || edge.size() != 2 ||
        !edge[0].is_number_integer() || !edge[1].is_number_integer())
      throw fail("each edge must be a [u, v] integer pair");
    const int u = edge[0].get<int>();
    const int v = edge[1].get<int>();
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw fail("edge endpoint out of range: [" + std::to_string(u) + ", " +
                 std::to_string(v) + "]");
    if (u == v) throw fail("self-loop at vertex " + std::to_string(u));
    builder.add_edge(u, v);
  }
  std::string meta =
      doc.contains("meta") && doc["meta"].is_string()
          ? doc["meta"].get<std::string>()
          : "";
  std::string descriptor =
      doc.contains("groupDescriptor") && doc["groupDescriptor"].is_string()
          ? doc["groupDescriptor"].get<std::string>()
          : "";
  return builder.build(std::move(meta), std::move(descriptor));
}

std::string export_edgelist(const LabeledGraph& g) {
  std::ostringstream out;
  out << "# vertices=" << g.vertex_count() << " edges=" << g.edge_count()
      << "\n";
  for (auto [u, v] : g.edges())
    out << vertex_id(g, u) << " " << vertex_id(g, v) << "\n";
  return out.str();
}

}  // namespace bicay
