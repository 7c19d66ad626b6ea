#include "bergman/matroid.hpp"

#include <algorithm>
#include <unordered_set>

#include "bergman/errors.hpp"
#include "bergman/graphs.hpp"

namespace bergman {

namespace {

// C(n, k), saturating at cap.
std::size_t binomial_capped(int n, int k, std::size_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const std::size_t factor = static_cast<std::size_t>(n - k + i);
    if (result > cap / factor) return cap + 1;
    result = result * factor / static_cast<std::size_t>(i);
  }
  return result;
}

int rational_column_rank(const std::vector<std::vector<Rational>>& columns,
                         int num_rows, const std::vector<int>& picked) {
  // Gaussian elimination on the selected columns, exact arithmetic.
  std::vector<std::vector<Rational>> m;
  m.reserve(picked.size());
  for (int c : picked) m.push_back(columns[static_cast<std::size_t>(c)]);
  int rank = 0;
  for (int row = 0; row < num_rows && rank < static_cast<int>(m.size());
       ++row) {
    int pivot = -1;
    for (int c = rank; c < static_cast<int>(m.size()); ++c) {
      if (m[static_cast<std::size_t>(c)][static_cast<std::size_t>(row)] != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(rank)],
              m[static_cast<std::size_t>(pivot)]);
    const Rational lead =
        m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(row)];
    for (int c = rank + 1; c < static_cast<int>(m.size()); ++c) {
      auto& col = m[static_cast<std::size_t>(c)];
      const Rational factor = col[static_cast<std::size_t>(row)] / lead;
      if (factor == 0) continue;
      for (int r = row; r < num_rows; ++r) {
        col[static_cast<std::size_t>(r)] -=
            factor *
            m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(r)];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool verify_basis_exchange(const std::set<Subset>& family) {
  if (family.empty()) return true;
  const int r = family.begin()->size();
  int max_elem = 0;
  for (const Subset& b : family) {
    if (b.size() != r) {
      throw invalid_input("basis exchange check requires equal cardinalities");
    }
    max_elem = std::max(max_elem, b.max_element());
  }
  if (max_elem <= 64) {
    // Mask fast path; candidate lookups are O(1).
    std::unordered_set<std::uint64_t> masks;
    std::vector<std::uint64_t> list;
    masks.reserve(family.size() * 2);
    list.reserve(family.size());
    for (const Subset& b : family) {
      const auto m = b.mask();
      masks.insert(m);
      list.push_back(m);
    }
    for (const auto b1 : list) {
      for (const auto b2 : list) {
        std::uint64_t only1 = b1 & ~b2;
        while (only1 != 0) {
          const std::uint64_t bit_e = only1 & (~only1 + 1);
          only1 ^= bit_e;
          bool found = false;
          std::uint64_t only2 = b2 & ~b1;
          while (only2 != 0) {
            const std::uint64_t bit_f = only2 & (~only2 + 1);
            only2 ^= bit_f;
            if (masks.count((b1 ^ bit_e) | bit_f) > 0) {
              found = true;
              break;
            }
          }
          if (!found) return false;
        }
      }
    }
    return true;
  }
  for (const Subset& b1 : family) {
    for (const Subset& b2 : family) {
      const Subset leave = b1.subtract(b2);
      const Subset enter = b2.subtract(b1);
      for (int e : leave.elements()) {
        bool found = false;
        for (int f : enter.elements()) {
          if (family.count(b1.without(e).with(f)) > 0) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool verify_basis_exchange(const std::vector<Subset>& family) {
  return verify_basis_exchange(std::set<Subset>(family.begin(), family.end()));
}

Matroid::Matroid(int ground_size, Backing backing)
    : ground_size_(ground_size), backing_(std::move(backing)) {
  rank_full_ = rank_unchecked(Subset::full(ground_size_));
}

Matroid Matroid::graphic(int num_vertices,
                         const std::vector<std::pair<int, int>>& edges) {
  if (edges.empty()) throw invalid_input("graphic matroid needs an edge list");
  if (num_vertices < 1) throw invalid_input("graph needs at least one vertex");
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > num_vertices || v < 1 || v > num_vertices) {
      throw invalid_input("edge endpoint out of range");
    }
  }
  return Matroid(static_cast<int>(edges.size()),
                 GraphicBacking{num_vertices, edges});
}

Matroid Matroid::complete_graph(int num_vertices) {
  if (num_vertices < 2) {
    throw invalid_input("complete graph needs at least two vertices");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= num_vertices; ++i)
    for (int j = i + 1; j <= num_vertices; ++j) edges.push_back({i, j});
  return graphic(num_vertices, edges);
}

Matroid Matroid::uniform(int rank, int ground_size) {
  if (ground_size < 1) throw invalid_input("ground set must be nonempty");
  if (rank < 0 || rank > ground_size) {
    throw invalid_input("uniform matroid needs 0 <= r <= n");
  }
  Matroid m(ground_size, UniformBacking{});
  m.rank_full_ = rank;
  return m;
}

Matroid Matroid::linear(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw invalid_input("linear matroid needs a nonempty matrix");
  }
  const std::size_t n = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != n) throw invalid_input("ragged matrix");
  }
  LinearBacking backing;
  backing.num_rows = static_cast<int>(rows.size());
  backing.columns.assign(n, std::vector<Rational>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) backing.columns[c][r] = rows[r][c];
  }
  return Matroid(static_cast<int>(n), std::move(backing));
}

Matroid Matroid::from_bases(int ground_size,
                            const std::vector<Subset>& bases) {
  if (bases.empty()) throw invalid_input("a matroid has at least one basis");
  std::set<Subset> family(bases.begin(), bases.end());
  for (const Subset& b : family) {
    if (b.max_element() > ground_size) {
      throw invalid_input("basis element outside the ground set");
    }
  }
  if (!verify_basis_exchange(family)) {
    throw invalid_input("family violates the basis exchange axiom");
  }
  return from_bases_unchecked(ground_size, std::move(family));
}

Matroid Matroid::from_bases_unchecked(int ground_size,
                                      std::set<Subset> bases) {
  if (ground_size < 1) throw invalid_input("ground set must be nonempty");
  if (bases.empty()) throw invalid_input("a matroid has at least one basis");
  return Matroid(ground_size, ExplicitBacking{std::move(bases)});
}

void Matroid::check_subset(const Subset& s) const {
  if (s.max_element() > ground_size_) {
    throw invalid_input("subset element outside the ground set");
  }
}

int Matroid::rank_of(const Subset& s) const {
  check_subset(s);
  return rank_unchecked(s);
}

int Matroid::rank_unchecked(const Subset& s) const {
  if (const auto* g = std::get_if<GraphicBacking>(&backing_)) {
    // |V| - #components of the spanning subgraph with edge set s.
    UnionFind uf(g->num_vertices);
    int rank = 0;
    for (int e : s.elements()) {
      const auto& [u, v] = g->edges[static_cast<std::size_t>(e - 1)];
      if (uf.unite(u - 1, v - 1)) ++rank;
    }
    return rank;
  }
  if (std::holds_alternative<UniformBacking>(backing_)) {
    return std::min(s.size(), rank_full_);
  }
  if (const auto* l = std::get_if<LinearBacking>(&backing_)) {
    std::vector<int> picked;
    picked.reserve(static_cast<std::size_t>(s.size()));
    for (int e : s.elements()) picked.push_back(e - 1);
    return rational_column_rank(l->columns, l->num_rows, picked);
  }
  if (const auto* x = std::get_if<ExplicitBacking>(&backing_)) {
    int best = 0;
    for (const Subset& b : x->bases) {
      best = std::max(best, b.intersection_size(s));
    }
    return best;
  }
  if (const auto* m = std::get_if<MinorBacking>(&backing_)) {
    Subset lifted = m->contracted;
    for (int e : s.elements()) {
      lifted = lifted.with(m->embedding[static_cast<std::size_t>(e - 1)]);
    }
    return m->parent->rank_of(lifted) - m->parent->rank_of(m->contracted);
  }
  const auto& sum = std::get<SumBacking>(backing_);
  const int n_left = sum.left->ground_size();
  std::vector<int> left_part, right_part;
  for (int e : s.elements()) {
    if (e <= n_left) {
      left_part.push_back(e);
    } else {
      right_part.push_back(e - n_left);
    }
  }
  return sum.left->rank_of(Subset(std::move(left_part))) +
         sum.right->rank_of(Subset(std::move(right_part)));
}

Subset Matroid::closure_of(const Subset& s) const {
  check_subset(s);
  const int base_rank = rank_unchecked(s);
  std::vector<int> closed;
  for (int e = 1; e <= ground_size_; ++e) {
    if (s.contains(e) || rank_unchecked(s.with(e)) == base_rank) {
      closed.push_back(e);
    }
  }
  return Subset(std::move(closed));
}

Subset Matroid::loops() const { return closure_of(Subset{}); }

bool Matroid::is_flat(const Subset& s) const { return closure_of(s) == s; }

Matroid Matroid::restrict_to(const Subset& keep) const {
  check_subset(keep);
  MinorBacking backing;
  backing.parent = std::make_shared<Matroid>(*this);
  backing.embedding = keep.elements();
  return Matroid(keep.size(), std::move(backing));
}

Matroid Matroid::contract(const Subset& away) const {
  check_subset(away);
  MinorBacking backing;
  backing.parent = std::make_shared<Matroid>(*this);
  backing.embedding = ground().subtract(away).elements();
  backing.contracted = away;
  const int remaining = static_cast<int>(backing.embedding.size());
  return Matroid(remaining, std::move(backing));
}

Matroid Matroid::direct_sum(const Matroid& left, const Matroid& right) {
  SumBacking backing;
  backing.left = std::make_shared<Matroid>(left);
  backing.right = std::make_shared<Matroid>(right);
  return Matroid(left.ground_size() + right.ground_size(), std::move(backing));
}

BasisFamily Matroid::enumerate_bases(std::size_t budget) const {
  BasisFamily family;
  family.rank = rank_full_;
  if (const auto* x = std::get_if<ExplicitBacking>(&backing_)) {
    family.bases = x->bases;
    return family;
  }
  if (binomial_capped(ground_size_, rank_full_, budget) > budget) {
    throw budget_exceeded("basis enumeration over C(" +
                          std::to_string(ground_size_) + "," +
                          std::to_string(rank_full_) +
                          ") exceeds the configured budget");
  }
  const int r = rank_full_;
  if (r == 0) {
    family.bases.insert(Subset{});
    return family;
  }
  std::vector<int> pick(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    Subset candidate{std::vector<int>(pick)};
    if (rank_unchecked(candidate) == r) family.bases.insert(candidate);
    // next r-combination of {1..n} in lexicographic order
    int i = r - 1;
    while (i >= 0 &&
           pick[static_cast<std::size_t>(i)] == ground_size_ - (r - 1 - i)) {
      --i;
    }
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return family;
}

}  // namespace bergman
