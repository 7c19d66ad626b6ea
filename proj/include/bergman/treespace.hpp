#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bergman/matroid.hpp"
#include "bergman/rational.hpp"
#include "bergman/subset.hpp"
#include "bergman/weights.hpp"

namespace bergman {

// Symmetric rational matrix with zero diagonal, 1-indexed; entries may be
// negative.
class DissimilarityMap {
 public:
  explicit DissimilarityMap(int n);
  DissimilarityMap(int n, const std::vector<std::vector<Rational>>& rows);

  int n() const { return n_; }
  const Rational& operator()(int i, int j) const;
  void set(int i, int j, const Rational& value);

  bool operator==(const DissimilarityMap&) const = default;

 private:
  void check_indices(int i, int j) const;

  int n_ = 0;
  std::vector<Rational> entries_;  // full row-major matrix
};

// First triple (i, j, k), in lexicographic order, whose maximum entry is
// attained only once; nullopt when the map is an ultrametric.
std::optional<std::array<int, 3>> ultrametric_violation(
    const DissimilarityMap& d);
bool is_ultrametric(const DissimilarityMap& d);

// Weights on the edges of a complete graph, indexed lexicographically by
// vertex pairs (1,2), (1,3), ..., (n-1,n).
struct EdgeWeighting {
  int n = 0;
  WeightVector w;

  EdgeWeighting(int n, WeightVector w);
  const Rational& at(int i, int j) const;
};

int pair_index(int n, int i, int j);            // 1-based edge coordinate
std::pair<int, int> index_pair(int n, int idx);

EdgeWeighting delta_to_weights(const DissimilarityMap& d);
DissimilarityMap weights_to_delta(const EdgeWeighting& w);

// In every triangle the largest weight appears at least twice.
bool membership_triangle(const EdgeWeighting& w);
// In every cycle the largest weight appears at least twice.
bool membership_cycle(const EdgeWeighting& w);
// Every edge lies in some minimum-weight spanning tree.
bool membership_mst(const EdgeWeighting& w,
                    std::size_t budget = kDefaultEnumerationBudget);

// All spanning trees of the complete graph as sets of edge coordinates;
// computed once per n and cached.
const std::vector<Subset>& spanning_trees_of_complete_graph(
    int n, std::size_t budget = kDefaultEnumerationBudget);

std::set<Subset> min_spanning_trees_bruteforce(
    const EdgeWeighting& w, std::size_t budget = kDefaultEnumerationBudget);
// Branching cycle-breaking: find a cycle, delete each maximum-weight edge on
// it in turn, recurse until no cycle remains.
std::set<Subset> min_spanning_trees_reverse_delete(
    const EdgeWeighting& w, std::size_t budget = kDefaultEnumerationBudget);
// Runs both enumerations for n <= 8 and insists they agree; beyond that,
// cycle-breaking alone.
std::set<Subset> all_min_spanning_trees(
    const EdgeWeighting& w, std::size_t budget = kDefaultEnumerationBudget);

// Rooted tree with leaves 1..n at height zero and rational heights on
// internal vertices. Edges to internal children must point strictly down;
// heights of vertices with only leaf children may be zero or negative.
class EquidistantTree {
 public:
  struct Node {
    int leaf = 0;  // positive for leaf nodes
    Rational height = 0;
    std::vector<Node> children;

    bool is_leaf() const { return children.empty(); }
    bool operator==(const Node&) const = default;
  };

  EquidistantTree(Node root, int num_leaves);

  int num_leaves() const { return num_leaves_; }
  const Node& root() const { return root_; }

  bool operator==(const EquidistantTree&) const = default;

 private:
  Node root_;
  int num_leaves_ = 0;
};

DissimilarityMap tree_to_ultrametric(const EquidistantTree& t);

// Single-linkage agglomeration at heights d/2, merging every block pair
// tied at the current minimum in one step.
EquidistantTree ultrametric_to_tree(const DissimilarityMap& d);

// Canonical codes; equal codes mean equal topologies.
struct UnrankedTopology {
  std::string code;
  auto operator<=>(const UnrankedTopology&) const = default;
};
struct RankedTopology {
  std::string code;
  auto operator<=>(const RankedTopology&) const = default;
};

UnrankedTopology unranked_topology(const EquidistantTree& t);
// Adds the weak order, ties included, of all internal heights.
RankedTopology ranked_topology(const EquidistantTree& t);

// Rebuilds the tree shape from a minimum-basis family on the complete graph
// alone, deciding each triangle's maximal edges by basis swaps.
UnrankedTopology topology_from_min_bases(int n, const BasisFamily& family);

// Decimal branch lengths; exactness is lost here by design.
std::string tree_to_newick(const EquidistantTree& t);

}  // namespace bergman
