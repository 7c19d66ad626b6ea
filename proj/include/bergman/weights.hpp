#pragma once

#include <vector>

#include "bergman/matroid.hpp"
#include "bergman/rational.hpp"
#include "bergman/subset.hpp"

namespace bergman {

// Weight of element i is w[i-1].
using WeightVector = std::vector<Rational>;

// Strictly nested chain empty = F_0 < F_1 < ... < F_{k+1} = [n].
// The proper sets F_1..F_k may be arbitrary subsets, not only flats.
class Flag {
 public:
  Flag(int ground_size, std::vector<Subset> chain);

  static Flag trivial(int ground_size);
  static Flag from_proper(int ground_size, const std::vector<Subset>& proper);

  int ground_size() const { return ground_size_; }
  const std::vector<Subset>& chain() const { return chain_; }
  // number of proper sets k
  int num_proper() const { return static_cast<int>(chain_.size()) - 2; }
  std::vector<Subset> proper_sets() const;
  // layer i = F_i \ F_{i-1}, for i in 1..k+1
  Subset layer(int i) const;
  int num_layers() const { return static_cast<int>(chain_.size()) - 1; }
  // flag with the proper set F_i removed, 1 <= i <= k
  Flag dropping(int i) const;

  auto operator<=>(const Flag&) const = default;

 private:
  int ground_size_;
  std::vector<Subset> chain_;
};

std::ostream& operator<<(std::ostream& os, const Flag& f);

// Level sets of w in strictly increasing weight order.
Flag flag_of(const WeightVector& w);

// Integer weights 0,1,2,... assigned layer by layer; flag_of of the result
// gives back the flag.
WeightVector representative_weights(const Flag& f);

Rational total_weight(const WeightVector& w, const Subset& s);

// The bases B with |B intersect F_i| = rank(F_i) for every set of flag_of(w).
BasisFamily min_bases_greedy(
    const Matroid& m, const WeightVector& w,
    std::size_t budget = kDefaultEnumerationBudget);

// Argmin of the total weight over all bases; independent of the greedy route.
BasisFamily min_bases_bruteforce(
    const Matroid& m, const WeightVector& w,
    std::size_t budget = kDefaultEnumerationBudget);

// Explicit matroid whose bases meet every F_i in rank(F_i) elements.
Matroid matroid_of_flag(const Matroid& m, const Flag& f,
                        std::size_t budget = kDefaultEnumerationBudget);

// The minors (M|F_i)/F_{i-1}, one per layer, each on a freshly labeled
// ground set 1..|layer|.
std::vector<Matroid> decompose_minors(const Matroid& m, const Flag& f);

// True when matroid_of_flag(m, f) has no loops.
bool is_valid_flag(const Matroid& m, const Flag& f,
                   std::size_t budget = kDefaultEnumerationBudget);

bool in_bergman_fan(const Matroid& m, const WeightVector& w,
                    std::size_t budget = kDefaultEnumerationBudget);

}  // namespace bergman
