#include "bergman/weights.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "bergman/errors.hpp"

namespace bergman {

Flag::Flag(int ground_size, std::vector<Subset> chain)
    : ground_size_(ground_size), chain_(std::move(chain)) {
  if (ground_size_ < 1) throw invalid_input("ground set must be nonempty");
  if (chain_.size() < 2) {
    throw invalid_input("a flag runs from the empty set to the ground set");
  }
  if (!chain_.front().empty()) {
    throw invalid_input("a flag starts at the empty set");
  }
  if (chain_.back() != Subset::full(ground_size_)) {
    throw invalid_input("a flag ends at the full ground set");
  }
  for (std::size_t i = 1; i < chain_.size(); ++i) {
    if (chain_[i].size() <= chain_[i - 1].size() ||
        !chain_[i].contains_all(chain_[i - 1])) {
      throw invalid_input("flag sets must be strictly nested");
    }
  }
}

Flag Flag::trivial(int ground_size) {
  return Flag(ground_size, {Subset{}, Subset::full(ground_size)});
}

Flag Flag::from_proper(int ground_size, const std::vector<Subset>& proper) {
  std::vector<Subset> chain;
  chain.reserve(proper.size() + 2);
  chain.push_back(Subset{});
  chain.insert(chain.end(), proper.begin(), proper.end());
  chain.push_back(Subset::full(ground_size));
  return Flag(ground_size, std::move(chain));
}

std::vector<Subset> Flag::proper_sets() const {
  return std::vector<Subset>(chain_.begin() + 1, chain_.end() - 1);
}

Subset Flag::layer(int i) const {
  if (i < 1 || i > num_layers()) throw invalid_input("layer index out of range");
  return chain_[static_cast<std::size_t>(i)].subtract(
      chain_[static_cast<std::size_t>(i - 1)]);
}

Flag Flag::dropping(int i) const {
  if (i < 1 || i > num_proper()) {
    throw invalid_input("only a proper set of a flag can be dropped");
  }
  std::vector<Subset> chain = chain_;
  chain.erase(chain.begin() + i);
  return Flag(ground_size_, std::move(chain));
}

std::ostream& operator<<(std::ostream& os, const Flag& f) {
  for (std::size_t i = 0; i < f.chain().size(); ++i) {
    if (i > 0) os << " < ";
    os << f.chain()[i];
  }
  return os;
}

Flag flag_of(const WeightVector& w) {
  if (w.empty()) throw invalid_input("weight vector must be nonempty");
  std::map<Rational, std::vector<int>> levels;
  for (std::size_t i = 0; i < w.size(); ++i) {
    levels[w[i]].push_back(static_cast<int>(i) + 1);
  }
  std::vector<Subset> chain;
  chain.reserve(levels.size() + 1);
  chain.push_back(Subset{});
  std::vector<int> accumulated;
  for (const auto& [value, elements] : levels) {
    accumulated.insert(accumulated.end(), elements.begin(), elements.end());
    chain.push_back(Subset{std::vector<int>(accumulated)});
  }
  return Flag(static_cast<int>(w.size()), std::move(chain));
}

WeightVector representative_weights(const Flag& f) {
  WeightVector w(static_cast<std::size_t>(f.ground_size()));
  for (int i = 1; i <= f.num_layers(); ++i) {
    const Subset layer = f.layer(i);
    for (int e : layer.elements()) {
      w[static_cast<std::size_t>(e - 1)] = i - 1;
    }
  }
  return w;
}

Rational total_weight(const WeightVector& w, const Subset& s) {
  Rational sum = 0;
  for (int e : s.elements()) {
    if (e > static_cast<int>(w.size())) {
      throw invalid_input("subset element outside the weight vector");
    }
    sum += w[static_cast<std::size_t>(e - 1)];
  }
  return sum;
}

namespace {

void check_weight_length(const Matroid& m, const WeightVector& w) {
  if (static_cast<int>(w.size()) != m.ground_size()) {
    throw invalid_input("weight vector length must match the ground set");
  }
}

std::set<Subset> bases_meeting_flag(const Matroid& m, const Flag& f,
                                    std::size_t budget) {
  if (f.ground_size() != m.ground_size()) {
    throw invalid_input("flag and matroid ground sets differ");
  }
  std::vector<int> targets;
  targets.reserve(f.chain().size());
  for (const Subset& set : f.chain()) targets.push_back(m.rank_of(set));
  std::set<Subset> picked;
  for (const Subset& b : m.enumerate_bases(budget).bases) {
    bool keep = true;
    for (std::size_t i = 0; i < f.chain().size(); ++i) {
      if (b.intersection_size(f.chain()[i]) != targets[i]) {
        keep = false;
        break;
      }
    }
    if (keep) picked.insert(b);
  }
  return picked;
}

}  // namespace

BasisFamily min_bases_greedy(const Matroid& m, const WeightVector& w,
                             std::size_t budget) {
  check_weight_length(m, w);
  BasisFamily family;
  family.rank = m.rank();
  family.bases = bases_meeting_flag(m, flag_of(w), budget);
  return family;
}

BasisFamily min_bases_bruteforce(const Matroid& m, const WeightVector& w,
                                 std::size_t budget) {
  check_weight_length(m, w);
  BasisFamily family;
  family.rank = m.rank();
  bool have_best = false;
  Rational best = 0;
  for (const Subset& b : m.enumerate_bases(budget).bases) {
    const Rational cost = total_weight(w, b);
    if (!have_best || cost < best) {
      have_best = true;
      best = cost;
      family.bases.clear();
    }
    if (cost == best) family.bases.insert(b);
  }
  return family;
}

Matroid matroid_of_flag(const Matroid& m, const Flag& f, std::size_t budget) {
  return Matroid::from_bases_unchecked(m.ground_size(),
                                       bases_meeting_flag(m, f, budget));
}

std::vector<Matroid> decompose_minors(const Matroid& m, const Flag& f) {
  if (f.ground_size() != m.ground_size()) {
    throw invalid_input("flag and matroid ground sets differ");
  }
  std::vector<Matroid> parts;
  parts.reserve(static_cast<std::size_t>(f.num_layers()));
  for (int i = 1; i <= f.num_layers(); ++i) {
    const Subset& outer = f.chain()[static_cast<std::size_t>(i)];
    const Subset& inner = f.chain()[static_cast<std::size_t>(i - 1)];
    Matroid restricted = m.restrict_to(outer);
    // restrict_to relabels outer's elements to 1..|outer| in ascending order
    const std::vector<int>& sorted = outer.elements();
    std::vector<int> relabeled;
    relabeled.reserve(static_cast<std::size_t>(inner.size()));
    for (int e : inner.elements()) {
      const auto it = std::lower_bound(sorted.begin(), sorted.end(), e);
      relabeled.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    parts.push_back(restricted.contract(Subset(std::move(relabeled))));
  }
  return parts;
}

bool is_valid_flag(const Matroid& m, const Flag& f, std::size_t budget) {
  return matroid_of_flag(m, f, budget).loops().empty();
}

bool in_bergman_fan(const Matroid& m, const WeightVector& w,
                    std::size_t budget) {
  check_weight_length(m, w);
  return is_valid_flag(m, flag_of(w), budget);
}

}  // namespace bergman
