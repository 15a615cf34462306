#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pborel/monomial.hpp"

namespace pborel {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A monomial ideal, kept as its unique minimal generating set: the
/// generators form an antichain under divisibility and are stored in
/// canonical order (lexicographically largest exponent vector first), so
/// ideal equality is structural equality. The zero ideal has no generators;
/// the unit ideal is generated by the trivial monomial.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;  // zero ideal in 0 variables
  static MonomialIdeal zero(std::size_t n);
  static MonomialIdeal unit(std::size_t n);

  std::size_t var_count() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  /// Membership: some minimal generator divides m.
  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;

  friend MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens);
};

/// Canonical form: divisibility antichain of gens, sorted lex-descending.
/// Every generator must have length n.
MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens);

/// (I : x_var^t). t = 0 returns I.
MonomialIdeal colon_power(const MonomialIdeal& I, std::size_t var, Exponent t);

/// (I : x_var^inf): generators with the var-exponent zeroed out.
MonomialIdeal saturate_var(const MonomialIdeal& I, std::size_t var);

/// minimalize(I + (x_var^t)); t >= 1.
MonomialIdeal add_power(const MonomialIdeal& I, std::size_t var, Exponent t);

/// Componentwise max over the minimal generators; I must be nonzero.
Monomial lcm_multidegree(const MonomialIdeal& I);
Exponent lcm_degree(const MonomialIdeal& I);

// Ideal text format, shared by every tool in this project:
//   # comment lines start with '#'
//   n=<vars>
//   <e1> <e2> ... <en>      one generator per line
// Input generators need not be minimal; parsing minimalizes. Writers emit
// the minimal generators in canonical order.
MonomialIdeal parse_ideal(std::istream& in);
MonomialIdeal parse_ideal(const std::string& text);
MonomialIdeal load_ideal_file(const std::string& path);
void write_ideal(std::ostream& out, const MonomialIdeal& I);
std::string format_ideal(const MonomialIdeal& I);

}  // namespace pborel
