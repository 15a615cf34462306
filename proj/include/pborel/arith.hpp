#pragma once

#include <cstdint>
#include <stdexcept>

namespace pborel {

/// Exponents are naturals. 64 bits is plenty for everything this library is
/// meant for, but iterated constructions compound exponents quickly, so all
/// arithmetic on them is checked: overflow aborts with std::overflow_error
/// instead of wrapping.
using Exponent = std::uint64_t;

inline Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("exponent addition overflows 64 bits");
  return r;
}

inline Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("exponent multiplication overflows 64 bits");
  return r;
}

inline Exponent checked_pow(Exponent base, std::uint64_t exp) {
  Exponent r = 1;
  for (std::uint64_t k = 0; k < exp; ++k) r = checked_mul(r, base);
  return r;
}

bool is_prime(std::uint64_t n);

/// Throws std::invalid_argument unless c is 0 or prime.
void require_characteristic(std::uint64_t c);

}  // namespace pborel
