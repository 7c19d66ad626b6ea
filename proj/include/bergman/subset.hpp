#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace bergman {

// A finite set of positive integers, kept as a sorted ascending list.
// Ground-set elements are 1-indexed throughout; the canonical ordering makes
// subsets directly usable as keys in ordered containers.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::vector<int> elements);
  Subset(std::initializer_list<int> elements);

  static Subset full(int n);  // {1, 2, ..., n}

  const std::vector<int>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool empty() const { return elements_.empty(); }
  int max_element() const;  // 0 when empty

  bool contains(int e) const;
  bool contains_all(const Subset& other) const;

  Subset unite(const Subset& other) const;
  Subset intersect(const Subset& other) const;
  Subset subtract(const Subset& other) const;
  Subset with(int e) const;
  Subset without(int e) const;
  int intersection_size(const Subset& other) const;

  // Bitmask with bit (e-1) set per element; requires max_element() <= 64.
  std::uint64_t mask() const;

  auto operator<=>(const Subset& other) const = default;

 private:
  std::vector<int> elements_;
};

std::ostream& operator<<(std::ostream& os, const Subset& s);

}  // namespace bergman
