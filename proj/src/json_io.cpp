#include "bergman/json_io.hpp"

#include <sstream>

#include "bergman/errors.hpp"
#include "bergman/rational.hpp"

namespace bergman {

using nlohmann::json;

namespace {

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw invalid_input(std::string("expected integer field \"") + key + "\"");
  }
  return j[key].get<int>();
}

const json& array_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw invalid_input(std::string("expected array field \"") + key + "\"");
  }
  return j[key];
}

int int_value(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw invalid_input(std::string("expected an integer ") + what);
  }
  return j.get<int>();
}

Subset subset_from_json(const json& j) {
  if (!j.is_array()) throw invalid_input("expected a subset as an array");
  std::vector<int> elements;
  elements.reserve(j.size());
  for (const auto& entry : j) elements.push_back(int_value(entry, "element"));
  return Subset(std::move(elements));
}

json subset_to_json(const Subset& s) {
  json j = json::array();
  for (int e : s.elements()) j.push_back(e);
  return j;
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw invalid_input("expected a rational as a \"p/q\" string");
}

Matroid matroid_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw invalid_input("matroid description needs a \"type\" field");
  }
  const std::string type = j["type"].get<std::string>();
  if (type == "graphic") {
    const int vertices = int_field(j, "vertices");
    std::vector<std::pair<int, int>> edges;
    for (const auto& entry : array_field(j, "edges")) {
      if (!entry.is_array() || entry.size() != 2) {
        throw invalid_input("each edge must be a pair [u,v]");
      }
      edges.push_back(
          {int_value(entry[0], "endpoint"), int_value(entry[1], "endpoint")});
    }
    return Matroid::graphic(vertices, edges);
  }
  if (type == "uniform") {
    return Matroid::uniform(int_field(j, "r"), int_field(j, "n"));
  }
  if (type == "linear") {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : array_field(j, "matrix")) {
      if (!row.is_array()) throw invalid_input("matrix rows must be arrays");
      std::vector<Rational> values;
      values.reserve(row.size());
      for (const auto& entry : row) values.push_back(rational_from_json(entry));
      rows.push_back(std::move(values));
    }
    return Matroid::linear(rows);
  }
  if (type == "bases") {
    const int n = int_field(j, "n");
    std::vector<Subset> bases;
    for (const auto& entry : array_field(j, "bases")) {
      bases.push_back(subset_from_json(entry));
    }
    return Matroid::from_bases(n, bases);
  }
  throw invalid_input("unknown matroid type \"" + type + "\"");
}

WeightVector weights_from_json(const json& j) {
  if (!j.is_array()) throw invalid_input("weights must be an array");
  WeightVector w;
  w.reserve(j.size());
  for (const auto& entry : j) w.push_back(rational_from_json(entry));
  return w;
}

json weights_to_json(const WeightVector& w) {
  json j = json::array();
  for (const Rational& v : w) j.push_back(rational_to_string(v));
  return j;
}

json flag_to_json(const Flag& f) {
  json j = json::array();
  for (const Subset& s : f.proper_sets()) j.push_back(subset_to_json(s));
  return j;
}

json lattice_to_json(const FlatLattice& lattice) {
  json flats = json::array();
  for (int i = 0; i < lattice.num_flats(); ++i) {
    flats.push_back({{"flat", subset_to_json(lattice.flat(i))},
                     {"rank", lattice.rank_of_flat(i)}});
  }
  return {{"rank", lattice.matroid_rank()},
          {"num_flats", lattice.num_flats()},
          {"flats", std::move(flats)}};
}

json complex_to_json(const SimplicialComplex& sc) {
  json vertices = json::array();
  for (int i = 0; i < sc.num_vertices(); ++i) {
    vertices.push_back(
        {{"id", i},
         {"flat", subset_to_json(sc.vertex_flats[static_cast<std::size_t>(i)])}});
  }
  json faces = json::array();
  for (const auto& face : sc.maximal_faces) {
    json ids = json::array();
    for (int v : face) ids.push_back(v);
    faces.push_back(std::move(ids));
  }
  return {{"vertices", std::move(vertices)},
          {"maximal_faces", std::move(faces)}};
}

json coarse_to_json(const SimplicialComplex& fine,
                    const std::vector<CoarseCell>& cells) {
  json out = complex_to_json(fine);
  json cell_list = json::array();
  for (const CoarseCell& cell : cells) {
    json flags = json::array();
    for (const Flag& f : cell.member_flags) flags.push_back(flag_to_json(f));
    cell_list.push_back({{"flags", std::move(flags)},
                         {"n_bases", cell.signature.size()}});
  }
  out["cells"] = std::move(cell_list);
  return out;
}

DissimilarityMap dist_from_json(const json& j) {
  if (!j.is_object()) throw invalid_input("expected a distance object");
  const int n = int_field(j, "n");
  const json& rows = array_field(j, "d");
  std::vector<std::vector<Rational>> d;
  for (const auto& row : rows) {
    if (!row.is_array()) throw invalid_input("distance rows must be arrays");
    std::vector<Rational> values;
    values.reserve(row.size());
    for (const auto& entry : row) values.push_back(rational_from_json(entry));
    d.push_back(std::move(values));
  }
  return DissimilarityMap(n, d);
}

json dist_to_json(const DissimilarityMap& d) {
  json rows = json::array();
  for (int i = 1; i <= d.n(); ++i) {
    json row = json::array();
    for (int j = 1; j <= d.n(); ++j) {
      row.push_back(i == j ? "0" : rational_to_string(d(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return {{"n", d.n()}, {"d", std::move(rows)}};
}

namespace {

EquidistantTree::Node tree_node_from_json(const json& j) {
  if (!j.is_object()) throw invalid_input("tree nodes must be objects");
  EquidistantTree::Node node;
  if (j.contains("leaf")) {
    node.leaf = int_value(j["leaf"], "leaf label");
    return node;
  }
  if (!j.contains("height") || !j.contains("children")) {
    throw invalid_input(
        "internal tree nodes need \"height\" and \"children\"");
  }
  node.height = rational_from_json(j["height"]);
  const json& children = j["children"];
  if (!children.is_array()) throw invalid_input("\"children\" must be an array");
  for (const auto& child : children) {
    node.children.push_back(tree_node_from_json(child));
  }
  return node;
}

int count_leaves(const EquidistantTree::Node& node) {
  if (node.is_leaf()) return 1;
  int total = 0;
  for (const auto& c : node.children) total += count_leaves(c);
  return total;
}

json tree_node_to_json(const EquidistantTree::Node& node) {
  if (node.is_leaf()) return {{"leaf", node.leaf}};
  json children = json::array();
  for (const auto& c : node.children) children.push_back(tree_node_to_json(c));
  return {{"height", rational_to_string(node.height)},
          {"children", std::move(children)}};
}

}  // namespace

EquidistantTree tree_from_json(const json& j) {
  EquidistantTree::Node root = tree_node_from_json(j);
  const int n = count_leaves(root);
  return EquidistantTree(std::move(root), n);
}

json tree_to_json(const EquidistantTree& t) {
  return tree_node_to_json(t.root());
}

std::string complex_to_dot(const SimplicialComplex& sc,
                           const std::string& name) {
  const SimpleGraph g = one_skeleton(sc);
  std::vector<std::string> labels;
  labels.reserve(sc.vertex_flats.size());
  for (const Subset& flat : sc.vertex_flats) {
    std::ostringstream label;
    label << flat;
    labels.push_back(label.str());
  }
  return graph_to_dot(g, name, labels);
}

std::string graph_to_dot(const SimpleGraph& g, const std::string& name,
                         const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.num_vertices; ++v) {
    out << "  v" << v;
    if (v < static_cast<int>(labels.size())) {
      out << " [label=\"" << labels[static_cast<std::size_t>(v)] << "\"]";
    }
    out << ";\n";
  }
  for (const auto& [a, b] : g.edges) {
    out << "  v" << a << " -- v" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bergman
