#include "bergman/graphs.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "bergman/errors.hpp"

namespace bergman {

UnionFind::UnionFind(int n)
    : parent_(static_cast<std::size_t>(n)),
      size_(static_cast<std::size_t>(n), 1),
      components_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
  while (parent_[static_cast<std::size_t>(x)] != x) {
    parent_[static_cast<std::size_t>(x)] =
        parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
    x = parent_[static_cast<std::size_t>(x)];
  }
  return x;
}

bool UnionFind::unite(int x, int y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[static_cast<std::size_t>(x)] < size_[static_cast<std::size_t>(y)])
    std::swap(x, y);
  parent_[static_cast<std::size_t>(y)] = x;
  size_[static_cast<std::size_t>(x)] += size_[static_cast<std::size_t>(y)];
  --components_;
  return true;
}

void SimpleGraph::add_edge(int a, int b) {
  if (a == b) throw invalid_input("self-loop in simple graph");
  if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices) {
    throw invalid_input("edge endpoint out of range");
  }
  edges.insert({std::min(a, b), std::max(a, b)});
}

bool SimpleGraph::has_edge(int a, int b) const {
  return edges.count({std::min(a, b), std::max(a, b)}) > 0;
}

std::vector<int> SimpleGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(num_vertices), 0);
  for (const auto& [a, b] : edges) {
    ++deg[static_cast<std::size_t>(a)];
    ++deg[static_cast<std::size_t>(b)];
  }
  return deg;
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(num_vertices));
  for (const auto& [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

bool SimpleGraph::is_connected() const {
  if (num_vertices <= 1) return true;
  UnionFind uf(num_vertices);
  for (const auto& [a, b] : edges) uf.unite(a, b);
  return uf.components() == 1;
}

int SimpleGraph::girth() const {
  const auto adj = adjacency();
  int best = std::numeric_limits<int>::max();
  for (int root = 0; root < num_vertices; ++root) {
    std::vector<int> dist(static_cast<std::size_t>(num_vertices), -1);
    std::vector<int> parent(static_cast<std::size_t>(num_vertices), -1);
    std::deque<int> queue{root};
    dist[static_cast<std::size_t>(root)] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (v == parent[static_cast<std::size_t>(u)]) continue;
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        } else {
          best = std::min(best, dist[static_cast<std::size_t>(u)] +
                                    dist[static_cast<std::size_t>(v)] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

SimpleGraph smooth_degree_two(const SimpleGraph& g) {
  SimpleGraph current = g;
  bool changed = true;
  while (changed) {
    changed = false;
    const auto deg = current.degrees();
    for (int v = 0; v < current.num_vertices; ++v) {
      if (deg[static_cast<std::size_t>(v)] != 2) continue;
      std::vector<int> nbrs;
      for (const auto& [a, b] : current.edges) {
        if (a == v) nbrs.push_back(b);
        if (b == v) nbrs.push_back(a);
      }
      if (nbrs.size() != 2 || nbrs[0] == nbrs[1]) continue;
      if (current.has_edge(nbrs[0], nbrs[1])) continue;
      SimpleGraph next;
      next.num_vertices = current.num_vertices - 1;
      auto relabel = [v](int u) { return u > v ? u - 1 : u; };
      for (const auto& [a, b] : current.edges) {
        if (a == v || b == v) continue;
        next.add_edge(relabel(a), relabel(b));
      }
      next.add_edge(relabel(nbrs[0]), relabel(nbrs[1]));
      current = std::move(next);
      changed = true;
      break;
    }
  }
  return current;
}

namespace {

bool extend_mapping(const std::vector<std::vector<int>>& adj_a,
                    const std::vector<std::vector<int>>& adj_b,
                    const SimpleGraph& a, const SimpleGraph& b,
                    std::vector<int>& map_ab, std::vector<bool>& used_b,
                    int next) {
  const int n = a.num_vertices;
  if (next == n) return true;
  const auto deg_a = a.degrees();
  const auto deg_b = b.degrees();
  for (int candidate = 0; candidate < n; ++candidate) {
    if (used_b[static_cast<std::size_t>(candidate)]) continue;
    if (deg_a[static_cast<std::size_t>(next)] !=
        deg_b[static_cast<std::size_t>(candidate)])
      continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      const bool edge_a = a.has_edge(prev, next);
      const bool edge_b =
          b.has_edge(map_ab[static_cast<std::size_t>(prev)], candidate);
      ok = edge_a == edge_b;
    }
    if (!ok) continue;
    map_ab[static_cast<std::size_t>(next)] = candidate;
    used_b[static_cast<std::size_t>(candidate)] = true;
    if (extend_mapping(adj_a, adj_b, a, b, map_ab, used_b, next + 1)) {
      return true;
    }
    used_b[static_cast<std::size_t>(candidate)] = false;
  }
  return false;
}

}  // namespace

bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.num_vertices != b.num_vertices) return false;
  if (a.edges.size() != b.edges.size()) return false;
  auto deg_a = a.degrees();
  auto deg_b = b.degrees();
  std::sort(deg_a.begin(), deg_a.end());
  std::sort(deg_b.begin(), deg_b.end());
  if (deg_a != deg_b) return false;
  std::vector<int> map_ab(static_cast<std::size_t>(a.num_vertices), -1);
  std::vector<bool> used_b(static_cast<std::size_t>(a.num_vertices), false);
  return extend_mapping(a.adjacency(), b.adjacency(), a, b, map_ab, used_b, 0);
}

SimpleGraph petersen_graph() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) pairs.push_back({i, j});
  SimpleGraph g;
  g.num_vertices = static_cast<int>(pairs.size());
  for (std::size_t u = 0; u < pairs.size(); ++u) {
    for (std::size_t v = u + 1; v < pairs.size(); ++v) {
      const auto& [a1, a2] = pairs[u];
      const auto& [b1, b2] = pairs[v];
      const bool disjoint = a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2;
      if (disjoint) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
  }
  return g;
}

}  // namespace bergman
