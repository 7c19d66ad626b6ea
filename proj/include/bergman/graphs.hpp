#pragma once

#include <set>
#include <utility>
#include <vector>

namespace bergman {

class UnionFind {
 public:
  explicit UnionFind(int n);
  int find(int x);
  bool unite(int x, int y);  // false if already joined
  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
};

// Small simple undirected graph on vertices 0..num_vertices-1. Used for the
// one-dimensional subdivision complexes and their invariant checks.
struct SimpleGraph {
  int num_vertices = 0;
  std::set<std::pair<int, int>> edges;  // stored with first < second

  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;
  int num_edges() const { return static_cast<int>(edges.size()); }
  std::vector<int> degrees() const;
  std::vector<std::vector<int>> adjacency() const;
  bool is_connected() const;

  // Length of a shortest cycle; 0 for a forest.
  int girth() const;
};

// Repeatedly replace a degree-2 vertex by an edge between its neighbors.
// Vertices whose smoothing would create a loop or a parallel edge are kept.
SimpleGraph smooth_degree_two(const SimpleGraph& g);

bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// The Kneser graph on 2-subsets of a 5-set: 10 vertices, 15 edges, 3-regular,
// girth 5.
SimpleGraph petersen_graph();

}  // namespace bergman
