#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "bergman/rational.hpp"
#include "bergman/subset.hpp"

namespace bergman {

inline constexpr std::size_t kDefaultEnumerationBudget = 1'000'000;

struct BasisFamily {
  int rank = 0;
  std::set<Subset> bases;

  bool operator==(const BasisFamily&) const = default;
  std::size_t size() const { return bases.size(); }
};

// True iff the family satisfies the basis exchange axiom: for all B1, B2 and
// e in B1\B2 there is f in B2\B1 with B1\{e} u {f} in the family.
// Throws invalid_input when the members have mixed cardinalities.
bool verify_basis_exchange(const std::set<Subset>& family);
bool verify_basis_exchange(const std::vector<Subset>& family);

// An immutable matroid on the ground set {1..n}, presented through one of
// four backings plus minor/sum composition. Every query goes through the
// rank oracle; matroids are freely shareable across threads once built.
class Matroid {
 public:
  static Matroid graphic(int num_vertices,
                         const std::vector<std::pair<int, int>>& edges);
  // M(K_k): edges ordered lexicographically by endpoint pair, so edge
  // {i,j} with i<j is ground element C(i,j) in pair order (1,2),(1,3),...
  static Matroid complete_graph(int num_vertices);
  static Matroid uniform(int rank, int ground_size);
  // Columns are the ground elements; rank is exact rational column rank.
  static Matroid linear(const std::vector<std::vector<Rational>>& rows);
  // Validates the exchange axiom eagerly; meant for explicit fixtures.
  static Matroid from_bases(int ground_size, const std::vector<Subset>& bases);
  // Same, but trusts the caller that the family is exchange-valid.
  static Matroid from_bases_unchecked(int ground_size, std::set<Subset> bases);

  int ground_size() const { return ground_size_; }
  int rank() const { return rank_full_; }
  Subset ground() const { return Subset::full(ground_size_); }

  int rank_of(const Subset& s) const;
  Subset closure_of(const Subset& s) const;
  Subset loops() const;
  bool is_flat(const Subset& s) const;

  // Minors relabel their ground set to 1..k following the ascending order of
  // the retained original elements.
  Matroid restrict_to(const Subset& keep) const;
  Matroid contract(const Subset& away) const;
  // Right-hand elements are shifted up by left.ground_size().
  static Matroid direct_sum(const Matroid& left, const Matroid& right);

  // All r-subsets of full rank. Throws budget_exceeded when C(n, r) exceeds
  // the budget.
  BasisFamily enumerate_bases(
      std::size_t budget = kDefaultEnumerationBudget) const;

 private:
  struct GraphicBacking {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;
  };
  struct UniformBacking {};
  struct LinearBacking {
    int num_rows = 0;
    std::vector<std::vector<Rational>> columns;
  };
  struct ExplicitBacking {
    std::set<Subset> bases;
  };
  struct MinorBacking {
    std::shared_ptr<const Matroid> parent;
    std::vector<int> embedding;  // minor element i -> parent element
    Subset contracted;           // in parent labels
  };
  struct SumBacking {
    std::shared_ptr<const Matroid> left;
    std::shared_ptr<const Matroid> right;
  };
  using Backing = std::variant<GraphicBacking, UniformBacking, LinearBacking,
                               ExplicitBacking, MinorBacking, SumBacking>;

  Matroid(int ground_size, Backing backing);

  void check_subset(const Subset& s) const;
  int rank_unchecked(const Subset& s) const;

  int ground_size_ = 0;
  int rank_full_ = 0;
  Backing backing_;
};

}  // namespace bergman
