#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pborel/ideal.hpp"

namespace pborel {

/// The strictly increasing degree map d_0 < d_1 < ... used by the stretch
/// operator, together with the distinguished variable z. Stored either as
/// the arithmetic progression l -> l*step (all the construction ever needs)
/// or as an explicit prefix for general use.
class StretchSpec {
 public:
  static StretchSpec arithmetic(std::size_t z_var, Exponent step);
  static StretchSpec sequence(std::size_t z_var, std::vector<Exponent> d);

  std::size_t z_var() const { return z_var_; }
  bool is_arithmetic() const { return step_ != 0; }
  Exponent step() const { return step_; }
  const std::vector<Exponent>& prefix() const { return d_; }

  /// d_l; throws std::invalid_argument when an explicit prefix is too short.
  Exponent map(Exponent l) const;

 private:
  explicit StretchSpec(std::size_t z_var) : z_var_(z_var) {}
  std::size_t z_var_ = 0;
  Exponent step_ = 0;  // 0 means: use the explicit prefix
  std::vector<Exponent> d_;
};

/// The ideal of z-degree-<= i coefficients: generators with z-exponent at
/// most i, with that exponent zeroed out. Ascending in i, stabilizing at
/// saturate_var(I, z_var).
MonomialIdeal coefficient_ideal(const MonomialIdeal& I, std::size_t z_var, Exponent i);

/// The stretch operator: every generator's z-exponent l is remapped to d_l.
/// Because d is strictly increasing this generates the same ideal as
/// re-placing the coefficient ideals at degrees d_0 < d_1 < ...
MonomialIdeal stretch_phi(const MonomialIdeal& I, const StretchSpec& spec);

/// Characteristic-independent upper bound for the regularity of I: the
/// total degree of the lcm of the minimal generators (Taylor bound).
Exponent regularity_bound(const MonomialIdeal& I);

/// Minimal e > e_prev with p^e > r.
std::uint64_t choose_exponent(Exponent r, std::uint64_t p, std::uint64_t e_prev);

struct StageRecord {
  std::size_t stage = 0;       // i: the variable whose pure power was added
  Exponent reg_bound = 0;      // r_i
  std::uint64_t exponent = 0;  // e_i
  Exponent power = 0;          // p^{e_i}
  MonomialIdeal ideal_after;   // J_i
};

struct ConstructionTrace {
  MonomialIdeal input;
  std::uint64_t p = 0;
  std::vector<StageRecord> stages;
  MonomialIdeal output;

  std::vector<std::uint64_t> exponents() const;  // e_1 < e_2 < ...
};

struct ConstructOptions {
  /// Per-stage e_i values; must be strictly increasing and satisfy
  /// p^{e_i} > r_i, validated while the construction runs.
  std::optional<std::vector<std::uint64_t>> exponent_override;
  /// Stop as soon as an intermediate ideal is already p-Borel-fixed.
  bool early_exit = false;
};

/// Turns any nonzero monomial ideal into a p-Borel-fixed one by iterating,
/// for i = 1..n-1: bound the regularity of J_{i-1} by r_i, pick e_i with
/// p^{e_i} > r_i, add x_i^{p^{e_i}}, and stretch the next variable by
/// d_l = l * p^{e_i}.
std::pair<MonomialIdeal, ConstructionTrace> pardue_construct(const MonomialIdeal& I,
                                                             std::uint64_t p,
                                                             const ConstructOptions& opts = {});

}  // namespace pborel
