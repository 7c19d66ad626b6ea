#pragma once

#include <stdexcept>
#include <string>

namespace bergman {

// Malformed arguments or data handed to the library.
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the configured budget.
struct budget_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A dissimilarity map failed the ultrametric condition. Carries a witness
// triple whose maximum value is attained only once.
struct not_ultrametric : std::domain_error {
  not_ultrametric(int i_, int j_, int k_);
  int i;
  int j;
  int k;
};

}  // namespace bergman
