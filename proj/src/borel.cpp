#include "pborel/borel.hpp"

#include <algorithm>

namespace pborel {

bool precedes_p(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  require_characteristic(p);
  if (p == 0) return a <= b;
  while (a != 0 || b != 0) {
    if (a % p > b % p) return false;
    a /= p;
    b /= p;
  }
  return true;
}

namespace {

// All s with 1 <= s ≼_p t for prime p, in ascending order: the base-p
// "submasks" of t, enumerated by odometer counting over the digit caps. The
// count is the product of (digit+1), typically far smaller than t.
std::vector<Exponent> dominated_values(Exponent t, std::uint64_t p) {
  std::vector<Exponent> out;
  std::vector<std::uint64_t> caps, place;
  {
    Exponent v = t;
    Exponent pw = 1;
    while (v != 0) {
      caps.push_back(v % p);
      place.push_back(pw);
      v /= p;
      if (v != 0) pw = checked_mul(pw, p);
    }
  }
  std::vector<std::uint64_t> digit(caps.size(), 0);
  Exponent s = 0;
  for (;;) {
    // advance the odometer; rollover past the top digit means done
    std::size_t k = 0;
    while (k < caps.size() && digit[k] == caps[k]) {
      s -= digit[k] * place[k];
      digit[k] = 0;
      ++k;
    }
    if (k == caps.size()) break;
    ++digit[k];
    s += place[k];
    out.push_back(s);
  }
  return out;
}

}  // namespace

std::optional<BorelWitness> is_p_borel_fixed(const MonomialIdeal& I, std::uint64_t p) {
  require_characteristic(p);
  const std::size_t n = I.var_count();
  for (const Monomial& m : I.generators()) {
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = n; j > i; --j) {
        const Exponent t = m.exponent(j);
        if (t == 0) continue;
        const auto exchange_missing = [&](Exponent s) -> std::optional<Monomial> {
          std::vector<Exponent> e = m.exponents();
          e[i - 1] = checked_add(e[i - 1], s);
          e[j - 1] -= s;
          Monomial moved(std::move(e));
          if (I.contains(moved)) return std::nullopt;
          return moved;
        };
        if (p == 0) {
          for (Exponent s = 1; s <= t; ++s) {
            if (auto moved = exchange_missing(s)) {
              return BorelWitness{m, i, j, s, t, std::move(*moved)};
            }
          }
        } else {
          for (Exponent s : dominated_values(t, p)) {
            if (auto moved = exchange_missing(s)) {
              return BorelWitness{m, i, j, s, t, std::move(*moved)};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace pborel
