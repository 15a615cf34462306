#include "pborel/betti.hpp"

#include <algorithm>
#include <future>
#include <set>

namespace pborel {

std::uint64_t BettiTable::at(std::uint32_t i, const Monomial& b) const {
  const auto it = entries_.find(Key{i, b});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(std::uint32_t i, const Monomial& b, std::uint64_t value) {
  if (value == 0) {
    entries_.erase(Key{i, b});
  } else {
    entries_[Key{i, b}] = value;
  }
}

std::map<std::pair<std::uint32_t, Exponent>, std::uint64_t> BettiTable::graded() const {
  std::map<std::pair<std::uint32_t, Exponent>, std::uint64_t> g;
  for (const auto& [key, value] : entries_) {
    g[{key.first, key.second.total_degree()}] += value;
  }
  return g;
}

std::optional<std::uint32_t> BettiTable::projective_dimension() const {
  std::optional<std::uint32_t> pd;
  for (const auto& [key, value] : entries_) {
    if (!pd || key.first > *pd) pd = key.first;
  }
  return pd;
}

std::optional<Exponent> BettiTable::regularity() const {
  std::optional<Exponent> reg;
  for (const auto& [key, value] : entries_) {
    const Exponent r = key.second.total_degree() - key.first;
    if (!reg || r > *reg) reg = r;
  }
  return reg;
}

SimplicialComplex koszul_subcomplex(const MonomialIdeal& I, const Monomial& b) {
  if (b.var_count() != I.var_count()) throw std::invalid_argument("variable count mismatch");
  std::vector<std::size_t> support;  // 0-based positions with b_k >= 1
  for (std::size_t k = 0; k < b.var_count(); ++k) {
    if (b.exponents()[k] >= 1) support.push_back(k);
  }
  // the face enumeration below is exponential in the support size
  if (support.size() > 24)
    throw std::invalid_argument("multidegree support too large for Koszul enumeration (max 24)");

  // Faces are subsets of the support, relabelled to vertices 1..|support|.
  // Downward closure holds automatically: dividing out fewer variables
  // leaves a multiple.
  std::vector<std::uint64_t> faces;
  const std::uint64_t subsets = 1ull << support.size();
  std::vector<Exponent> e(b.exponents());
  for (std::uint64_t tau = 0; tau < subsets; ++tau) {
    for (std::size_t v = 0; v < support.size(); ++v) {
      e[support[v]] = b.exponents()[support[v]] - ((tau >> v) & 1);
    }
    if (I.contains(Monomial(e))) faces.push_back(tau);
  }
  return SimplicialComplex::from_closed_faces(support.size(), std::move(faces));
}

std::uint64_t betti_at(const MonomialIdeal& I, std::uint32_t i, const Monomial& b,
                       const FieldSpec& F) {
  const auto h = reduced_homology_dims(koszul_subcomplex(I, b), F);
  return i < h.size() ? h[i] : 0;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& I, std::size_t max_size) {
  if (I.is_zero()) throw std::invalid_argument("lcm lattice of the zero ideal is undefined");
  std::set<Monomial> lattice(I.generators().begin(), I.generators().end());
  std::vector<Monomial> work(lattice.begin(), lattice.end());
  while (!work.empty()) {
    const Monomial m = std::move(work.back());
    work.pop_back();
    for (const Monomial& g : I.generators()) {
      Monomial j = m.lcm_with(g);
      if (lattice.insert(j).second) {
        if (max_size != 0 && lattice.size() > max_size)
          throw CapExceeded("lcm lattice exceeds cap of " + std::to_string(max_size));
        work.push_back(std::move(j));
      }
    }
  }
  return {lattice.begin(), lattice.end()};
}

namespace {

std::vector<std::pair<BettiTable::Key, std::uint64_t>> entries_for_degree(
    const MonomialIdeal& I, const Monomial& b, const FieldSpec& F) {
  std::vector<std::pair<BettiTable::Key, std::uint64_t>> out;
  const auto h = reduced_homology_dims(koszul_subcomplex(I, b), F);
  for (std::uint32_t i = 0; i < h.size(); ++i) {
    if (h[i] != 0) out.push_back({{i, b}, h[i]});
  }
  return out;
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& F, unsigned threads) {
  BettiTable table(F, I.var_count());
  if (I.is_zero()) return table;
  const std::vector<Monomial> lattice = lcm_lattice(I);

  if (threads <= 1 || lattice.size() < 2 * threads) {
    for (const Monomial& b : lattice) {
      for (auto& [key, value] : entries_for_degree(I, b, F)) table.set(key.first, key.second, value);
    }
    return table;
  }

  // Independent per-degree evaluations; results are merged in lattice order
  // so the table does not depend on scheduling.
  std::vector<std::future<std::vector<std::pair<BettiTable::Key, std::uint64_t>>>> futures;
  const std::size_t chunk = (lattice.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(lattice.size(), lo + chunk);
    if (lo >= hi) break;
    futures.push_back(std::async(std::launch::async, [&, lo, hi] {
      std::vector<std::pair<BettiTable::Key, std::uint64_t>> part;
      for (std::size_t k = lo; k < hi; ++k) {
        auto rows = entries_for_degree(I, lattice[k], F);
        part.insert(part.end(), rows.begin(), rows.end());
      }
      return part;
    }));
  }
  for (auto& f : futures) {
    for (auto& [key, value] : f.get()) table.set(key.first, key.second, value);
  }
  return table;
}

Exponent regularity(const MonomialIdeal& I, const FieldSpec& F) {
  if (I.is_zero()) throw std::invalid_argument("regularity of the zero ideal is undefined");
  const auto reg = betti_table(I, F).regularity();
  return *reg;  // a nonzero ideal always has beta_0 entries
}

}  // namespace pborel
