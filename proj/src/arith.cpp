#include "pborel/arith.hpp"

#include <string>

namespace pborel {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

void require_characteristic(std::uint64_t c) {
  if (c != 0 && !is_prime(c))
    throw std::invalid_argument("characteristic must be 0 or prime, got " + std::to_string(c));
}

}  // namespace pborel
