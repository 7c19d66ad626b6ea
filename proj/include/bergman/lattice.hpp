#pragma once

#include <vector>

#include "bergman/matroid.hpp"
#include "bergman/subset.hpp"

namespace bergman {

// All closed sets of a matroid, ordered by inclusion. Flats are stored
// sorted by (rank, elements) so indices are deterministic.
class FlatLattice {
 public:
  static FlatLattice of(const Matroid& m,
                        std::size_t budget = kDefaultEnumerationBudget);

  int num_flats() const { return static_cast<int>(flats_.size()); }
  const std::vector<Subset>& flats() const { return flats_; }
  const Subset& flat(int idx) const;
  int rank_of_flat(int idx) const;
  int matroid_rank() const { return matroid_rank_; }

  // index lookup; throws if the subset is not a flat
  int index_of(const Subset& s) const;
  bool leq(int a, int b) const;  // containment order
  int bottom() const { return 0; }
  int top() const { return num_flats() - 1; }

  std::vector<int> flats_of_rank(int k) const;
  // upper covers of each flat
  const std::vector<std::vector<int>>& covers() const { return covers_; }
  // all indices x with a <= x <= b
  std::vector<int> interval(int a, int b) const;

  // recursive Mobius sum over [bottom, top]
  long long mobius_bottom_top() const;
  // (-1)^rank * mobius_bottom_top
  long long mobius_hat() const;

 private:
  std::vector<Subset> flats_;
  std::vector<int> ranks_;
  std::vector<std::vector<int>> covers_;
  int matroid_rank_ = 0;
};

}  // namespace bergman
