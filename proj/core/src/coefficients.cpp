#include "vwave/coefficients.hpp"

#include <stdexcept>

namespace vwave {

void Material::validate() const {
  if (!(alpha > 0.0 && beta > 0.0 && std::isfinite(alpha) &&
        std::isfinite(beta))) {
    throw std::invalid_argument("Material: alpha and beta must be positive");
  }
}

}  // namespace vwave
