#include "bergman/errors.hpp"

namespace bergman {

not_ultrametric::not_ultrametric(int i_, int j_, int k_)
    : std::domain_error("not an ultrametric: the maximum over the triple {" +
                        std::to_string(i_) + "," + std::to_string(j_) + "," +
                        std::to_string(k_) + "} is attained only once"),
      i(i_),
      j(j_),
      k(k_) {}

}  // namespace bergman
