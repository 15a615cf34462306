#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pborel/field.hpp"
#include "pborel/homology.hpp"
#include "pborel/ideal.hpp"

namespace pborel {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finitely supported multigraded Betti table of a monomial ideal over a
/// fixed field. Zero entries are never stored. Values are Betti numbers of
/// the ideal itself: beta_i(I) = beta_{i+1}(S/I); of_ideal() records that
/// convention so tables of different conventions cannot be mixed silently.
class BettiTable {
 public:
  using Key = std::pair<std::uint32_t, Monomial>;

  BettiTable(FieldSpec field, std::size_t n) : field_(field), n_(n) {}

  const FieldSpec& field() const { return field_; }
  std::size_t var_count() const { return n_; }
  bool of_ideal() const { return true; }

  const std::map<Key, std::uint64_t>& entries() const { return entries_; }
  std::uint64_t at(std::uint32_t i, const Monomial& b) const;
  void set(std::uint32_t i, const Monomial& b, std::uint64_t value);

  /// N-graded aggregation: (i, total degree) -> sum of multigraded values.
  std::map<std::pair<std::uint32_t, Exponent>, std::uint64_t> graded() const;

  /// Largest i with a nonzero entry; nullopt for the empty table.
  std::optional<std::uint32_t> projective_dimension() const;
  /// max { |b| - i : some entry at (i, b) }; nullopt for the empty table.
  std::optional<Exponent> regularity() const;

  bool operator==(const BettiTable&) const = default;

 private:
  FieldSpec field_;
  std::size_t n_ = 0;
  std::map<Key, std::uint64_t> entries_;
};

/// The upper Koszul subcomplex of I at b: faces are the subsets tau of
/// supp(b) with x^(b - indicator(tau)) in I. Its reduced homology computes
/// the multigraded Betti numbers of I at b.
SimplicialComplex koszul_subcomplex(const MonomialIdeal& I, const Monomial& b);

/// beta_{i,b}(I) over F = dim of reduced homology of the Koszul subcomplex
/// in dimension i-1.
std::uint64_t betti_at(const MonomialIdeal& I, std::uint32_t i, const Monomial& b,
                       const FieldSpec& F);

/// All componentwise maxima of nonempty generator subsets, by iterated join
/// closure, in ascending lex order. Only these multidegrees can carry
/// nonzero Betti numbers. max_size > 0 bounds the lattice (CapExceeded).
std::vector<Monomial> lcm_lattice(const MonomialIdeal& I, std::size_t max_size = 0);

/// Full multigraded table: betti_at over every lattice degree. Evaluations
/// at distinct degrees are independent; threads > 1 distributes them, and
/// the assembled table is identical regardless.
BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& F, unsigned threads = 1);

/// Castelnuovo-Mumford regularity of the nonzero ideal I over F.
Exponent regularity(const MonomialIdeal& I, const FieldSpec& F);

}  // namespace pborel
