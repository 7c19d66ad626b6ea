#include "bergman/subset.hpp"

#include <algorithm>
#include <ostream>

#include "bergman/errors.hpp"

namespace bergman {

Subset::Subset(std::vector<int> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  if (!elements_.empty() && elements_.front() < 1) {
    throw invalid_input("subset elements must be positive");
  }
}

Subset::Subset(std::initializer_list<int> elements)
    : Subset(std::vector<int>(elements)) {}

Subset Subset::full(int n) {
  std::vector<int> all(static_cast<std::size_t>(n > 0 ? n : 0));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  Subset s;
  s.elements_ = std::move(all);
  return s;
}

int Subset::max_element() const {
  return elements_.empty() ? 0 : elements_.back();
}

bool Subset::contains(int e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

bool Subset::contains_all(const Subset& other) const {
  return std::includes(elements_.begin(), elements_.end(),
                       other.elements_.begin(), other.elements_.end());
}

Subset Subset::unite(const Subset& other) const {
  Subset out;
  out.elements_.reserve(elements_.size() + other.elements_.size());
  std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(),
                 other.elements_.end(), std::back_inserter(out.elements_));
  return out;
}

Subset Subset::intersect(const Subset& other) const {
  Subset out;
  std::set_intersection(elements_.begin(), elements_.end(),
                        other.elements_.begin(), other.elements_.end(),
                        std::back_inserter(out.elements_));
  return out;
}

Subset Subset::subtract(const Subset& other) const {
  Subset out;
  std::set_difference(elements_.begin(), elements_.end(),
                      other.elements_.begin(), other.elements_.end(),
                      std::back_inserter(out.elements_));
  return out;
}

Subset Subset::with(int e) const {
  if (contains(e)) return *this;
  Subset out = *this;
  out.elements_.insert(
      std::lower_bound(out.elements_.begin(), out.elements_.end(), e), e);
  return out;
}

Subset Subset::without(int e) const {
  Subset out = *this;
  const auto it =
      std::lower_bound(out.elements_.begin(), out.elements_.end(), e);
  if (it != out.elements_.end() && *it == e) out.elements_.erase(it);
  return out;
}

int Subset::intersection_size(const Subset& other) const {
  int count = 0;
  auto a = elements_.begin();
  auto b = other.elements_.begin();
  while (a != elements_.end() && b != other.elements_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

std::uint64_t Subset::mask() const {
  if (max_element() > 64) {
    throw invalid_input("subset too large for a 64-bit mask");
  }
  std::uint64_t m = 0;
  for (int e : elements_) m |= std::uint64_t{1} << (e - 1);
  return m;
}

std::ostream& operator<<(std::ostream& os, const Subset& s) {
  os << '{';
  bool first = true;
  for (int e : s.elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  return os << '}';
}

}  // namespace bergman
