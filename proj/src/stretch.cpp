#include "pborel/stretch.hpp"

#include <string>

#include "pborel/borel.hpp"

namespace pborel {

StretchSpec StretchSpec::arithmetic(std::size_t z_var, Exponent step) {
  if (step == 0) throw std::invalid_argument("stretch step must be positive");
  StretchSpec s(z_var);
  s.step_ = step;
  return s;
}

StretchSpec StretchSpec::sequence(std::size_t z_var, std::vector<Exponent> d) {
  if (d.empty()) throw std::invalid_argument("stretch sequence must be nonempty");
  for (std::size_t k = 1; k < d.size(); ++k) {
    if (d[k] <= d[k - 1])
      throw std::invalid_argument("stretch sequence must be strictly increasing");
  }
  StretchSpec s(z_var);
  s.d_ = std::move(d);
  return s;
}

Exponent StretchSpec::map(Exponent l) const {
  if (step_ != 0) return checked_mul(l, step_);
  if (l >= d_.size())
    throw std::invalid_argument("stretch sequence not defined at index " + std::to_string(l));
  return d_[static_cast<std::size_t>(l)];
}

MonomialIdeal coefficient_ideal(const MonomialIdeal& I, std::size_t z_var, Exponent i) {
  if (z_var < 1 || z_var > I.var_count())
    throw std::invalid_argument("variable index out of range");
  std::vector<Monomial> gens;
  for (const Monomial& g : I.generators()) {
    if (g.exponent(z_var) > i) continue;
    std::vector<Exponent> e = g.exponents();
    e[z_var - 1] = 0;
    gens.emplace_back(std::move(e));
  }
  return minimalize(I.var_count(), std::move(gens));
}

MonomialIdeal stretch_phi(const MonomialIdeal& I, const StretchSpec& spec) {
  const std::size_t z = spec.z_var();
  if (z < 1 || z > I.var_count()) throw std::invalid_argument("variable index out of range");
  std::vector<Monomial> gens;
  gens.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) {
    std::vector<Exponent> e = g.exponents();
    e[z - 1] = spec.map(e[z - 1]);
    gens.emplace_back(std::move(e));
  }
  return minimalize(I.var_count(), std::move(gens));
}

Exponent regularity_bound(const MonomialIdeal& I) { return lcm_degree(I); }

std::uint64_t choose_exponent(Exponent r, std::uint64_t p, std::uint64_t e_prev) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  std::uint64_t e = e_prev + 1;
  Exponent power = checked_pow(p, e);
  while (power <= r) {
    ++e;
    power = checked_mul(power, p);
  }
  return e;
}

std::vector<std::uint64_t> ConstructionTrace::exponents() const {
  std::vector<std::uint64_t> e;
  e.reserve(stages.size());
  for (const StageRecord& s : stages) e.push_back(s.exponent);
  return e;
}

std::pair<MonomialIdeal, ConstructionTrace> pardue_construct(const MonomialIdeal& I,
                                                             std::uint64_t p,
                                                             const ConstructOptions& opts) {
  if (!is_prime(p)) throw std::invalid_argument("construction requires a prime p");
  if (I.is_zero()) throw std::invalid_argument("construction requires a nonzero ideal");
  const std::size_t n = I.var_count();
  if (opts.exponent_override && opts.exponent_override->size() != (n == 0 ? 0 : n - 1))
    throw std::invalid_argument("exponent override must list one e_i per stage (n-1 values)");

  ConstructionTrace trace;
  trace.input = I;
  trace.p = p;

  MonomialIdeal J = I;
  std::uint64_t e_prev = 0;
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    const Exponent r = regularity_bound(J);
    std::uint64_t e;
    if (opts.exponent_override) {
      e = (*opts.exponent_override)[i - 1];
      if (e <= e_prev)
        throw std::invalid_argument("override exponents must be strictly increasing");
      if (checked_pow(p, e) <= r)
        throw std::invalid_argument("override exponent e_" + std::to_string(i) +
                                    " violates p^e > " + std::to_string(r));
    } else {
      e = choose_exponent(r, p, e_prev);
    }
    const Exponent power = checked_pow(p, e);
    J = stretch_phi(add_power(J, i, power), StretchSpec::arithmetic(i + 1, power));
    trace.stages.push_back(StageRecord{i, r, e, power, J});
    e_prev = e;
    // nullopt witness means the intermediate ideal is already fixed
    if (opts.early_exit && !is_p_borel_fixed(J, p).has_value()) break;
  }

  trace.output = J;
  return {std::move(J), std::move(trace)};
}

}  // namespace pborel
