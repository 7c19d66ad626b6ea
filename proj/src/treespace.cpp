#include "bergman/treespace.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "bergman/errors.hpp"
#include "bergman/graphs.hpp"

namespace bergman {

DissimilarityMap::DissimilarityMap(int n) : n_(n) {
  if (n < 1) throw invalid_input("a dissimilarity map needs at least one leaf");
  entries_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

DissimilarityMap::DissimilarityMap(int n,
                                   const std::vector<std::vector<Rational>>& rows)
    : DissimilarityMap(n) {
  if (static_cast<int>(rows.size()) != n) {
    throw invalid_input("dissimilarity matrix must have n rows");
  }
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw invalid_input("dissimilarity matrix must be square");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0) {
      throw invalid_input("dissimilarity diagonal must be zero");
    }
    for (int j = i + 1; j < n; ++j) {
      const Rational& v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v != rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
        throw invalid_input("dissimilarity matrix must be symmetric");
      }
      set(i + 1, j + 1, v);
    }
  }
}

void DissimilarityMap::check_indices(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) {
    throw invalid_input("leaf index out of range");
  }
}

const Rational& DissimilarityMap::operator()(int i, int j) const {
  check_indices(i, j);
  return entries_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j - 1)];
}

void DissimilarityMap::set(int i, int j, const Rational& value) {
  check_indices(i, j);
  if (i == j) throw invalid_input("diagonal entries are fixed at zero");
  entries_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j - 1)] = value;
  entries_[static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(i - 1)] = value;
}

std::optional<std::array<int, 3>> ultrametric_violation(
    const DissimilarityMap& d) {
  for (int i = 1; i <= d.n(); ++i) {
    for (int j = i + 1; j <= d.n(); ++j) {
      for (int k = j + 1; k <= d.n(); ++k) {
        const Rational& a = d(i, j);
        const Rational& b = d(i, k);
        const Rational& c = d(j, k);
        const Rational top = std::max({a, b, c});
        const int hits = (a == top) + (b == top) + (c == top);
        if (hits < 2) return std::array<int, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

bool is_ultrametric(const DissimilarityMap& d) {
  return !ultrametric_violation(d).has_value();
}

EdgeWeighting::EdgeWeighting(int n, WeightVector w) : n(n), w(std::move(w)) {
  if (n < 2) throw invalid_input("edge weights need at least two vertices");
  if (static_cast<int>(this->w.size()) != n * (n - 1) / 2) {
    throw invalid_input("edge weight vector has the wrong length");
  }
}

const Rational& EdgeWeighting::at(int i, int j) const {
  return w[static_cast<std::size_t>(pair_index(n, i, j) - 1)];
}

int pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n || i == j) throw invalid_input("invalid vertex pair");
  return (i - 1) * n - i * (i - 1) / 2 + (j - i);
}

std::pair<int, int> index_pair(int n, int idx) {
  if (idx < 1 || idx > n * (n - 1) / 2) {
    throw invalid_input("edge coordinate out of range");
  }
  for (int i = 1; i < n; ++i) {
    const int row_end = (i - 1) * n - i * (i - 1) / 2 + (n - i);
    if (idx <= row_end) {
      return {i, idx - ((i - 1) * n - i * (i - 1) / 2) + i};
    }
  }
  throw invalid_input("edge coordinate out of range");
}

EdgeWeighting delta_to_weights(const DissimilarityMap& d) {
  const int n = d.n();
  if (n < 2) throw invalid_input("edge weights need at least two vertices");
  WeightVector w(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      w[static_cast<std::size_t>(pair_index(n, i, j) - 1)] = d(i, j);
    }
  }
  return EdgeWeighting(n, std::move(w));
}

DissimilarityMap weights_to_delta(const EdgeWeighting& w) {
  DissimilarityMap d(w.n);
  for (int i = 1; i <= w.n; ++i) {
    for (int j = i + 1; j <= w.n; ++j) d.set(i, j, w.at(i, j));
  }
  return d;
}

bool membership_triangle(const EdgeWeighting& w) {
  for (int i = 1; i <= w.n; ++i) {
    for (int j = i + 1; j <= w.n; ++j) {
      for (int k = j + 1; k <= w.n; ++k) {
        const Rational& a = w.at(i, j);
        const Rational& b = w.at(i, k);
        const Rational& c = w.at(j, k);
        const Rational top = std::max({a, b, c});
        if ((a == top) + (b == top) + (c == top) < 2) return false;
      }
    }
  }
  return true;
}

bool membership_cycle(const EdgeWeighting& w) {
  const int n = w.n;
  if (n > 8) {
    throw budget_exceeded("cycle enumeration is limited to 8 vertices");
  }
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    std::vector<int> support;
    for (int v = 1; v <= n; ++v) {
      if (bits & (1u << (v - 1))) support.push_back(v);
    }
    if (support.size() < 3) continue;
    // one representative per cyclic order: first vertex fixed, reflection
    // killed by orienting toward the smaller neighbor
    std::vector<int> rest(support.begin() + 1, support.end());
    std::sort(rest.begin(), rest.end());
    do {
      if (rest.front() > rest.back()) continue;
      Rational top = w.at(support[0], rest.front());
      int hits = 0;
      auto feed = [&](const Rational& value) {
        if (value > top) {
          top = value;
          hits = 1;
        } else if (value == top) {
          ++hits;
        }
      };
      hits = 1;
      for (std::size_t i = 0; i + 1 < rest.size(); ++i) {
        feed(w.at(rest[i], rest[i + 1]));
      }
      feed(w.at(rest.back(), support[0]));
      if (hits < 2) return false;
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return true;
}

bool membership_mst(const EdgeWeighting& w, std::size_t budget) {
  std::set<int> covered;
  for (const Subset& tree : all_min_spanning_trees(w, budget)) {
    for (int e : tree.elements()) covered.insert(e);
  }
  return static_cast<int>(covered.size()) == w.n * (w.n - 1) / 2;
}

namespace {

bool is_spanning_tree(int n, const Subset& edges) {
  if (edges.size() != n - 1) return false;
  UnionFind uf(n);
  for (int e : edges.elements()) {
    const auto [i, j] = index_pair(n, e);
    if (!uf.unite(i - 1, j - 1)) return false;
  }
  return uf.components() == 1;
}

// n^(n-2), saturating at cap
std::size_t cayley_capped(int n, std::size_t cap) {
  std::size_t count = 1;
  for (int i = 0; i < n - 2; ++i) {
    if (count > cap / static_cast<std::size_t>(n)) return cap + 1;
    count *= static_cast<std::size_t>(n);
  }
  return count;
}

}  // namespace

const std::vector<Subset>& spanning_trees_of_complete_graph(
    int n, std::size_t budget) {
  if (n < 1) throw invalid_input("a graph needs at least one vertex");
  static std::map<int, std::vector<Subset>> cache;
  if (const auto it = cache.find(n); it != cache.end()) return it->second;
  if (cayley_capped(n, budget) > budget) {
    throw budget_exceeded("spanning tree enumeration exceeds the budget at " +
                          std::to_string(n) + " vertices");
  }
  std::vector<Subset> trees;
  const int m = n * (n - 1) / 2;
  const int k = n - 1;
  if (k == 0) {
    trees.push_back(Subset{});
    return cache.emplace(n, std::move(trees)).first->second;
  }
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    Subset candidate{std::vector<int>(pick)};
    if (is_spanning_tree(n, candidate)) trees.push_back(std::move(candidate));
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      pick[static_cast<std::size_t>(j)] =
          pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return cache.emplace(n, std::move(trees)).first->second;
}

std::set<Subset> min_spanning_trees_bruteforce(const EdgeWeighting& w,
                                               std::size_t budget) {
  std::set<Subset> best_trees;
  Rational best = 0;
  for (const Subset& tree : spanning_trees_of_complete_graph(w.n, budget)) {
    const Rational cost = total_weight(w.w, tree);
    if (best_trees.empty() || cost < best) {
      best = cost;
      best_trees.clear();
    }
    if (cost == best) best_trees.insert(tree);
  }
  return best_trees;
}

namespace {

// first cycle met by depth-first search; empty for a forest
std::vector<int> find_cycle_edges(std::uint64_t mask, int n) {
  std::vector<std::vector<std::pair<int, int>>> adj(
      static_cast<std::size_t>(n));  // (neighbor, edge coordinate)
  const int m = n * (n - 1) / 2;
  for (int e = 1; e <= m; ++e) {
    if (!(mask & (1ull << (e - 1)))) continue;
    const auto [i, j] = index_pair(n, e);
    adj[static_cast<std::size_t>(i - 1)].push_back({j - 1, e});
    adj[static_cast<std::size_t>(j - 1)].push_back({i - 1, e});
  }
  std::vector<int> parent_vertex(static_cast<std::size_t>(n), -1);
  std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
  std::vector<int> state(static_cast<std::size_t>(n), 0);
  std::vector<int> cycle;
  auto dfs = [&](auto&& self, int u) -> bool {
    state[static_cast<std::size_t>(u)] = 1;
    for (const auto& [v, e] : adj[static_cast<std::size_t>(u)]) {
      if (e == parent_edge[static_cast<std::size_t>(u)]) continue;
      if (state[static_cast<std::size_t>(v)] == 1) {
        // back edge: walk up from u to the ancestor v
        cycle.push_back(e);
        for (int x = u; x != v; x = parent_vertex[static_cast<std::size_t>(x)]) {
          cycle.push_back(parent_edge[static_cast<std::size_t>(x)]);
        }
        return true;
      }
      if (state[static_cast<std::size_t>(v)] == 0) {
        parent_vertex[static_cast<std::size_t>(v)] = u;
        parent_edge[static_cast<std::size_t>(v)] = e;
        if (self(self, v)) return true;
      }
    }
    state[static_cast<std::size_t>(u)] = 2;
    return false;
  };
  for (int s = 0; s < n; ++s) {
    if (state[static_cast<std::size_t>(s)] == 0 && dfs(dfs, s)) return cycle;
  }
  return {};
}

}  // namespace

std::set<Subset> min_spanning_trees_reverse_delete(const EdgeWeighting& w,
                                                   std::size_t budget) {
  const int n = w.n;
  const int m = n * (n - 1) / 2;
  if (m > 64) {
    throw budget_exceeded("cycle-breaking needs at most 64 edge coordinates");
  }
  std::set<Subset> result;
  std::unordered_set<std::uint64_t> visited;
  auto recurse = [&](auto&& self, std::uint64_t mask) -> void {
    if (!visited.insert(mask).second) return;
    if (visited.size() > budget) {
      throw budget_exceeded("cycle-breaking state count exceeds the budget");
    }
    const std::vector<int> cycle = find_cycle_edges(mask, n);
    if (cycle.empty()) {
      std::vector<int> edges;
      for (int e = 1; e <= m; ++e) {
        if (mask & (1ull << (e - 1))) edges.push_back(e);
      }
      result.insert(Subset(std::move(edges)));
      return;
    }
    Rational top = w.w[static_cast<std::size_t>(cycle.front() - 1)];
    for (int e : cycle) {
      top = std::max(top, w.w[static_cast<std::size_t>(e - 1)]);
    }
    for (int e : cycle) {
      if (w.w[static_cast<std::size_t>(e - 1)] == top) {
        self(self, mask & ~(1ull << (e - 1)));
      }
    }
  };
  const std::uint64_t full =
      m == 64 ? ~0ull : (1ull << m) - 1;
  recurse(recurse, full);
  return result;
}

std::set<Subset> all_min_spanning_trees(const EdgeWeighting& w,
                                        std::size_t budget) {
  std::set<Subset> by_deletion = min_spanning_trees_reverse_delete(w, budget);
  if (w.n <= 8) {
    if (by_deletion != min_spanning_trees_bruteforce(w, budget)) {
      throw std::logic_error(
          "minimum spanning tree enumerations disagree; this is a bug");
    }
  }
  return by_deletion;
}

namespace {

using Node = EquidistantTree::Node;

int min_leaf_label(const Node& node) {
  if (node.is_leaf()) return node.leaf;
  int best = 0;
  for (const Node& c : node.children) {
    const int m = min_leaf_label(c);
    if (best == 0 || m < best) best = m;
  }
  return best;
}

void canonicalize(Node& node) {
  for (Node& c : node.children) canonicalize(c);
  std::sort(node.children.begin(), node.children.end(),
            [](const Node& a, const Node& b) {
              return min_leaf_label(a) < min_leaf_label(b);
            });
}

void validate_node(const Node& node, std::vector<bool>& seen) {
  if (node.is_leaf()) {
    if (node.leaf < 1 || node.leaf > static_cast<int>(seen.size()) - 1) {
      throw invalid_input("leaf label out of range");
    }
    if (seen[static_cast<std::size_t>(node.leaf)]) {
      throw invalid_input("leaf label repeated");
    }
    seen[static_cast<std::size_t>(node.leaf)] = true;
    if (node.height != 0) throw invalid_input("leaves sit at height zero");
    return;
  }
  if (node.leaf != 0) {
    throw invalid_input("a node is a leaf or has children, not both");
  }
  if (node.children.size() < 2) {
    throw invalid_input("internal vertices need at least two children");
  }
  for (const Node& c : node.children) {
    if (!c.is_leaf() && c.height >= node.height) {
      throw invalid_input("internal edges must have positive length");
    }
    validate_node(c, seen);
  }
}

void collect_leaves(const Node& node, std::vector<int>& out) {
  if (node.is_leaf()) {
    out.push_back(node.leaf);
    return;
  }
  for (const Node& c : node.children) collect_leaves(c, out);
}

}  // namespace

EquidistantTree::EquidistantTree(Node root, int num_leaves)
    : root_(std::move(root)), num_leaves_(num_leaves) {
  if (num_leaves_ < 1) throw invalid_input("a tree needs at least one leaf");
  canonicalize(root_);
  std::vector<bool> seen(static_cast<std::size_t>(num_leaves_) + 1, false);
  validate_node(root_, seen);
  for (int i = 1; i <= num_leaves_; ++i) {
    if (!seen[static_cast<std::size_t>(i)]) {
      throw invalid_input("every leaf label 1..n must appear");
    }
  }
}

namespace {

void fill_distances(const Node& node, DissimilarityMap& d) {
  if (node.is_leaf()) return;
  std::vector<std::vector<int>> groups;
  groups.reserve(node.children.size());
  for (const Node& c : node.children) {
    groups.emplace_back();
    collect_leaves(c, groups.back());
    fill_distances(c, d);
  }
  const Rational twice = Rational(2) * node.height;
  for (std::size_t a = 0; a < groups.size(); ++a) {
    for (std::size_t b = a + 1; b < groups.size(); ++b) {
      for (int i : groups[a]) {
        for (int j : groups[b]) d.set(i, j, twice);
      }
    }
  }
}

}  // namespace

DissimilarityMap tree_to_ultrametric(const EquidistantTree& t) {
  DissimilarityMap d(t.num_leaves());
  fill_distances(t.root(), d);
  return d;
}

EquidistantTree ultrametric_to_tree(const DissimilarityMap& d) {
  if (const auto witness = ultrametric_violation(d)) {
    throw not_ultrametric((*witness)[0], (*witness)[1], (*witness)[2]);
  }
  const int n = d.n();
  if (n == 1) {
    Node leaf;
    leaf.leaf = 1;
    return EquidistantTree(std::move(leaf), 1);
  }
  std::vector<Node> blocks;
  std::vector<int> reps;
  blocks.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Node leaf;
    leaf.leaf = i;
    blocks.push_back(std::move(leaf));
    reps.push_back(i);
  }
  while (blocks.size() > 1) {
    Rational lowest = d(reps[0], reps[1]);
    for (std::size_t a = 0; a < blocks.size(); ++a) {
      for (std::size_t b = a + 1; b < blocks.size(); ++b) {
        lowest = std::min(lowest, d(reps[a], reps[b]));
      }
    }
    UnionFind uf(static_cast<int>(blocks.size()));
    for (std::size_t a = 0; a < blocks.size(); ++a) {
      for (std::size_t b = a + 1; b < blocks.size(); ++b) {
        if (d(reps[a], reps[b]) == lowest) {
          uf.unite(static_cast<int>(a), static_cast<int>(b));
        }
      }
    }
    std::map<int, std::vector<std::size_t>> components;
    for (std::size_t a = 0; a < blocks.size(); ++a) {
      components[uf.find(static_cast<int>(a))].push_back(a);
    }
    std::vector<Node> merged;
    std::vector<int> merged_reps;
    for (std::size_t a = 0; a < blocks.size(); ++a) {
      const auto& group = components[uf.find(static_cast<int>(a))];
      if (group.front() != a) continue;  // handled with its first member
      if (group.size() == 1) {
        merged.push_back(std::move(blocks[a]));
        merged_reps.push_back(reps[a]);
        continue;
      }
      Node parent;
      parent.height = lowest / 2;
      for (std::size_t member : group) {
        parent.children.push_back(std::move(blocks[member]));
      }
      merged.push_back(std::move(parent));
      merged_reps.push_back(reps[a]);
    }
    blocks = std::move(merged);
    reps = std::move(merged_reps);
  }
  return EquidistantTree(std::move(blocks.front()), n);
}

namespace {

struct CodePart {
  std::string code;
  int min_leaf = 0;
};

CodePart topology_code(const Node& node, const std::map<Rational, int>* ranks) {
  if (node.is_leaf()) return {std::to_string(node.leaf), node.leaf};
  std::vector<CodePart> parts;
  parts.reserve(node.children.size());
  for (const Node& c : node.children) parts.push_back(topology_code(c, ranks));
  std::sort(parts.begin(), parts.end(),
            [](const CodePart& a, const CodePart& b) {
              return a.min_leaf < b.min_leaf;
            });
  std::string code = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) code += ",";
    code += parts[i].code;
  }
  code += ")";
  if (ranks != nullptr) {
    code += ":" + std::to_string(ranks->at(node.height));
  }
  return {std::move(code), parts.front().min_leaf};
}

void collect_heights(const Node& node, std::map<Rational, int>& heights) {
  if (node.is_leaf()) return;
  heights[node.height] = 0;
  for (const Node& c : node.children) collect_heights(c, heights);
}

}  // namespace

UnrankedTopology unranked_topology(const EquidistantTree& t) {
  return {topology_code(t.root(), nullptr).code};
}

RankedTopology ranked_topology(const EquidistantTree& t) {
  std::map<Rational, int> heights;
  collect_heights(t.root(), heights);
  int next = 0;
  for (auto& [height, rank] : heights) rank = next++;
  return {topology_code(t.root(), &heights).code};
}

namespace {

// whether the candidate tree obtained from `tree` by trading edge `out` for
// edge `in` spans the graph again
bool swap_is_spanning(int n, const Subset& tree, int out_e, int in_e) {
  UnionFind uf(n);
  int joined = 0;
  auto add = [&](int e) {
    const auto [i, j] = index_pair(n, e);
    if (uf.unite(i - 1, j - 1)) ++joined;
  };
  for (int e : tree.elements()) {
    if (e != out_e) add(e);
  }
  add(in_e);
  return joined == n - 1;
}

}  // namespace

UnrankedTopology topology_from_min_bases(int n, const BasisFamily& family) {
  if (n < 2) throw invalid_input("topology needs at least two leaves");
  const int m = n * (n - 1) / 2;
  if (family.bases.empty()) {
    throw invalid_input("the family contains no trees");
  }
  if (family.rank != n - 1) {
    throw invalid_input("the family rank must be the vertex count minus one");
  }
  for (const Subset& tree : family.bases) {
    if (tree.max_element() > m || !is_spanning_tree(n, tree)) {
      throw invalid_input("every family member must be a spanning tree");
    }
  }
  // For each triangle, decide which edges carry the maximum weight: an edge
  // is maximal exactly when trading it for the triangle edge that crosses
  // its cut lands back in the family.
  std::map<std::array<int, 3>, std::pair<int, int>> close_pair;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        const std::array<std::array<int, 2>, 3> tri_edges = {
            {{i, j}, {i, k}, {j, k}}};
        int non_maximal = -1;
        int non_maximal_count = 0;
        for (int t = 0; t < 3; ++t) {
          const auto [u, v] = tri_edges[static_cast<std::size_t>(t)];
          const int third = i + j + k - u - v;
          const int e = pair_index(n, u, v);
          const Subset* host = nullptr;
          for (const Subset& tree : family.bases) {
            if (tree.contains(e)) {
              host = &tree;
              break;
            }
          }
          if (host == nullptr) {
            throw invalid_input(
                "an edge lies in no tree of the family; not a minimum-basis "
                "family");
          }
          // exactly one of the two other triangle edges reconnects the cut
          const int f = pair_index(n, u, third);
          const int g = pair_index(n, v, third);
          const int crossing = swap_is_spanning(n, *host, e, f) ? f : g;
          const bool maximal =
              family.bases.count(host->without(e).with(crossing)) > 0;
          if (!maximal) {
            non_maximal = t;
            ++non_maximal_count;
          }
        }
        if (non_maximal_count > 1) {
          throw invalid_input(
              "triangle has two light edges; not a minimum-basis family");
        }
        if (non_maximal_count == 1) {
          const auto [u, v] = tri_edges[static_cast<std::size_t>(non_maximal)];
          close_pair[{i, j, k}] = {u, v};
        }
      }
    }
  }
  auto assemble = [&](auto&& self, const std::vector<int>& leaves) -> CodePart {
    if (leaves.size() == 1) {
      return {std::to_string(leaves.front()), leaves.front()};
    }
    // leaves branching strictly below the join with some third leaf fall in
    // one child subtree
    UnionFind uf(static_cast<int>(leaves.size()));
    for (std::size_t a = 0; a < leaves.size(); ++a) {
      for (std::size_t b = a + 1; b < leaves.size(); ++b) {
        for (std::size_t c = 0; c < leaves.size(); ++c) {
          if (c == a || c == b) continue;
          std::array<int, 3> key = {leaves[a], leaves[b], leaves[c]};
          std::sort(key.begin(), key.end());
          const auto it = close_pair.find(key);
          if (it != close_pair.end() &&
              it->second == std::make_pair(std::min(leaves[a], leaves[b]),
                                           std::max(leaves[a], leaves[b]))) {
            uf.unite(static_cast<int>(a), static_cast<int>(b));
            break;
          }
        }
      }
    }
    std::map<int, std::vector<int>> components;
    for (std::size_t a = 0; a < leaves.size(); ++a) {
      components[uf.find(static_cast<int>(a))].push_back(leaves[a]);
    }
    if (components.size() < 2) {
      throw invalid_input(
          "leaf triples do not split; not a minimum-basis family");
    }
    std::vector<CodePart> parts;
    for (const auto& [root, group] : components) {
      parts.push_back(self(self, group));
    }
    std::sort(parts.begin(), parts.end(),
              [](const CodePart& a, const CodePart& b) {
                return a.min_leaf < b.min_leaf;
              });
    std::string code = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) code += ",";
      code += parts[i].code;
    }
    code += ")";
    return {std::move(code), parts.front().min_leaf};
  };
  std::vector<int> all;
  for (int i = 1; i <= n; ++i) all.push_back(i);
  return {assemble(assemble, all).code};
}

namespace {

void write_newick(std::ostringstream& out, const Node& node,
                  const Rational& parent_height, bool at_root) {
  if (node.is_leaf()) {
    out << node.leaf;
  } else {
    out << "(";
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (i > 0) out << ",";
      write_newick(out, node.children[i], node.height, false);
    }
    out << ")";
  }
  if (!at_root) {
    out << ":" << rational_to_double(parent_height - node.height);
  }
}

}  // namespace

std::string tree_to_newick(const EquidistantTree& t) {
  std::ostringstream out;
  write_newick(out, t.root(), 0, true);
  out << ";";
  return out.str();
}

}  // namespace bergman
