#include "bergman/lattice.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "bergman/errors.hpp"

namespace bergman {

FlatLattice FlatLattice::of(const Matroid& m, std::size_t budget) {
  FlatLattice lattice;
  lattice.matroid_rank_ = m.rank();
  // breadth-first by rank: closures closure(F + e) of the current layer
  // are exactly the flats one rank up
  std::set<Subset> current{m.loops()};
  std::size_t total = 0;
  for (int rank = 0; !current.empty(); ++rank) {
    total += current.size();
    if (total > budget) {
      throw budget_exceeded("flat enumeration exceeds the configured budget (" +
                            std::to_string(budget) + ")");
    }
    for (const Subset& f : current) {
      lattice.flats_.push_back(f);
      lattice.ranks_.push_back(rank);
    }
    std::set<Subset> next;
    for (const Subset& f : current) {
      if (f.size() == m.ground_size()) continue;
      for (int e = 1; e <= m.ground_size(); ++e) {
        if (!f.contains(e)) next.insert(m.closure_of(f.with(e)));
      }
    }
    current = std::move(next);
  }
  lattice.covers_.assign(lattice.flats_.size(), {});
  for (int a = 0; a < lattice.num_flats(); ++a) {
    for (int b = a + 1; b < lattice.num_flats(); ++b) {
      if (lattice.ranks_[static_cast<std::size_t>(b)] ==
              lattice.ranks_[static_cast<std::size_t>(a)] + 1 &&
          lattice.leq(a, b)) {
        lattice.covers_[static_cast<std::size_t>(a)].push_back(b);
      }
    }
  }
  return lattice;
}

const Subset& FlatLattice::flat(int idx) const {
  if (idx < 0 || idx >= num_flats()) {
    throw invalid_input("flat index out of range");
  }
  return flats_[static_cast<std::size_t>(idx)];
}

int FlatLattice::rank_of_flat(int idx) const {
  if (idx < 0 || idx >= num_flats()) {
    throw invalid_input("flat index out of range");
  }
  return ranks_[static_cast<std::size_t>(idx)];
}

int FlatLattice::index_of(const Subset& s) const {
  for (int i = 0; i < num_flats(); ++i) {
    if (flats_[static_cast<std::size_t>(i)] == s) return i;
  }
  throw invalid_input("subset is not a flat of this matroid");
}

bool FlatLattice::leq(int a, int b) const {
  return flats_[static_cast<std::size_t>(b)].contains_all(
      flats_[static_cast<std::size_t>(a)]);
}

std::vector<int> FlatLattice::flats_of_rank(int k) const {
  std::vector<int> result;
  for (int i = 0; i < num_flats(); ++i) {
    if (ranks_[static_cast<std::size_t>(i)] == k) result.push_back(i);
  }
  return result;
}

std::vector<int> FlatLattice::interval(int a, int b) const {
  std::vector<int> result;
  for (int i = 0; i < num_flats(); ++i) {
    if (leq(a, i) && leq(i, b)) result.push_back(i);
  }
  return result;
}

long long FlatLattice::mobius_bottom_top() const {
  // mu(bottom, x) = -sum over bottom <= y < x of mu(bottom, y),
  // evaluated in index order since flats are sorted by rank
  std::vector<long long> mu(flats_.size(), 0);
  mu[0] = 1;
  for (int x = 1; x < num_flats(); ++x) {
    long long sum = 0;
    for (int y = 0; y < x; ++y) {
      if (leq(y, x)) sum += mu[static_cast<std::size_t>(y)];
    }
    mu[static_cast<std::size_t>(x)] = -sum;
  }
  return mu[static_cast<std::size_t>(top())];
}

long long FlatLattice::mobius_hat() const {
  const long long mu = mobius_bottom_top();
  return matroid_rank_ % 2 == 0 ? mu : -mu;
}

}  // namespace bergman
