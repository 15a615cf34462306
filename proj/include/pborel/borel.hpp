#pragma once

#include <optional>

#include "pborel/ideal.hpp"

namespace pborel {

/// Digit-dominance order: a ≼_p b iff binom(b,a) != 0 mod p. For prime p
/// this is Lucas' criterion (every base-p digit of a is bounded by the
/// corresponding digit of b); for p = 0 it is plain a <= b.
bool precedes_p(std::uint64_t a, std::uint64_t b, std::uint64_t p);

/// Certificate that an ideal is not Borel-fixed: the exchange monomial
/// (x_i/x_j)^s * generator is missing from the ideal.
struct BorelWitness {
  Monomial generator;
  std::size_t i = 0;  // 1-based, i < j
  std::size_t j = 0;
  Exponent s = 0;  // 1 <= s ≼_p t
  Exponent t = 0;  // j-exponent of generator
  Monomial missing;

  bool operator==(const BorelWitness&) const = default;
};

/// Combinatorial Borel-fixedness check in characteristic p (0 or prime):
/// every minimal generator m, every i < j with t = j-exponent of m, and
/// every 1 <= s ≼_p t must have (x_i/x_j)^s m in I. Returns std::nullopt
/// when the ideal is fixed, otherwise the first failing witness in scan
/// order: generators in canonical order, then i ascending, j descending,
/// s ascending.
std::optional<BorelWitness> is_p_borel_fixed(const MonomialIdeal& I, std::uint64_t p);

}  // namespace pborel
