#include "pborel/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace pborel {

Monomial Monomial::var_power(std::size_t n, std::size_t var, Exponent t) {
  if (var < 1 || var > n) throw std::invalid_argument("variable index out of range");
  std::vector<Exponent> e(n, 0);
  e[var - 1] = t;
  return Monomial(std::move(e));
}

Exponent Monomial::exponent(std::size_t var) const {
  if (var < 1 || var > exps_.size()) throw std::invalid_argument("variable index out of range");
  return exps_[var - 1];
}

bool Monomial::divides(const Monomial& m) const {
  if (exps_.size() != m.exps_.size()) return false;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] > m.exps_[k]) return false;
  }
  return true;
}

Monomial Monomial::lcm_with(const Monomial& m) const {
  if (exps_.size() != m.exps_.size()) throw std::invalid_argument("variable count mismatch");
  std::vector<Exponent> e(exps_.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::max(exps_[k], m.exps_[k]);
  return Monomial(std::move(e));
}

Exponent Monomial::total_degree() const {
  Exponent d = 0;
  for (Exponent e : exps_) d = checked_add(d, e);
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::string Monomial::str() const {
  std::string s;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(k + 1);
    if (exps_[k] > 1) {
      s += '^';
      s += std::to_string(exps_[k]);
    }
  }
  return s.empty() ? "1" : s;
}

}  // namespace pborel
