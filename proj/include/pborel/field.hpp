#pragma once

#include <string>

#include "pborel/arith.hpp"

namespace pborel {

/// Coefficient field for homology and Betti computations: the rationals
/// (characteristic 0) or a prime field GF(p).
struct FieldSpec {
  std::uint64_t characteristic = 0;

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec gf(std::uint64_t p);
  /// 0 or prime; throws std::invalid_argument otherwise.
  static FieldSpec of_characteristic(std::uint64_t c);

  std::string label() const;  // "QQ" or "GF(p)"

  bool operator==(const FieldSpec&) const = default;
  auto operator<=>(const FieldSpec&) const = default;
};

}  // namespace pborel
