#pragma once

#include <compare>
#include <string>
#include <vector>

#include "pborel/arith.hpp"

namespace pborel {

/// A monomial x1^a1 * ... * xn^an, stored as its exponent vector.
/// Variable indices in the public API are 1-based throughout the library;
/// the raw exponent vector is 0-based as usual.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial one(std::size_t n) { return Monomial(std::vector<Exponent>(n, 0)); }
  static Monomial var_power(std::size_t n, std::size_t var, Exponent t);

  std::size_t var_count() const { return exps_.size(); }
  Exponent exponent(std::size_t var) const;  // 1-based
  const std::vector<Exponent>& exponents() const { return exps_; }

  bool divides(const Monomial& m) const;
  Monomial lcm_with(const Monomial& m) const;
  Exponent total_degree() const;
  bool is_one() const;

  // Lexicographic comparison of exponent vectors.
  auto operator<=>(const Monomial&) const = default;

  /// "x1^2*x3"; "1" for the trivial monomial.
  std::string str() const;

 private:
  std::vector<Exponent> exps_;
};

}  // namespace pborel
