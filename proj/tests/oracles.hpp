#pragma once

// Independent oracles for the test suite. Each one reaches the quantity
// under test by a different route than the library:
//   - binom_mod: additive Pascal recurrence, checks the Lucas-digit order
//   - taylor_betti: Taylor complex strands, checks the Koszul Betti engine
//   - hochster_betti_squarefree: induced subcomplexes of the Stanley-Reisner
//     complex, checks the Koszul route for squarefree ideals
//   - RandomIdealGen / unimodular rank fixtures: known-answer constructions

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "pborel/betti.hpp"
#include "pborel/homology.hpp"
#include "pborel/ideal.hpp"

namespace oracles {

using pborel::BettiTable;
using pborel::Exponent;
using pborel::FieldSpec;
using pborel::IntMatrix;
using pborel::Monomial;
using pborel::MonomialIdeal;

/// Pascal's triangle mod p up to row max_b, built additively — no digit
/// tricks anywhere. tri[b][a] = binom(b, a) mod p.
inline std::vector<std::vector<std::uint64_t>> pascal_mod(std::uint64_t max_b, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> tri;
  tri.reserve(max_b + 1);
  tri.push_back({1 % p});
  for (std::uint64_t r = 1; r <= max_b; ++r) {
    std::vector<std::uint64_t> row(r + 1, 1 % p);
    for (std::uint64_t k = 1; k < r; ++k) row[k] = (tri[r - 1][k - 1] + tri[r - 1][k]) % p;
    tri.push_back(std::move(row));
  }
  return tri;
}

/// Multigraded Betti table computed from the Taylor complex of the ideal:
/// basis e_T for nonempty generator subsets T in homological index |T|-1
/// and multidegree lcm(T); after tensoring with the field only the terms
/// that keep the lcm survive. Exponential in the generator count, so only
/// for small inputs.
inline BettiTable taylor_betti(const MonomialIdeal& I, const FieldSpec& F) {
  BettiTable table(F, I.var_count());
  const auto& gens = I.generators();
  const std::size_t r = gens.size();
  if (r == 0) return table;
  if (r > 16) throw std::invalid_argument("taylor oracle limited to 16 generators");

  const std::size_t total = std::size_t{1} << r;
  std::vector<Monomial> lcm_of(total);
  for (std::size_t mask = 1; mask < total; ++mask) {
    const std::size_t low = mask & (~mask + 1);
    const std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(mask));
    lcm_of[mask] = mask == low ? gens[bit] : lcm_of[mask ^ low].lcm_with(gens[bit]);
  }

  std::map<Monomial, std::vector<std::size_t>> strands;
  for (std::size_t mask = 1; mask < total; ++mask) strands[lcm_of[mask]].push_back(mask);

  for (const auto& [b, masks] : strands) {
    std::map<std::size_t, std::vector<std::size_t>> by_size;
    for (std::size_t m : masks) by_size[static_cast<std::size_t>(__builtin_popcountll(m))].push_back(m);
    const std::size_t top = by_size.rbegin()->first;

    std::map<std::size_t, std::size_t> rank_from_size;
    for (std::size_t c = 2; c <= top; ++c) {
      const auto& cols = by_size[c];
      const auto& rows = by_size.count(c - 1) ? by_size[c - 1] : std::vector<std::size_t>{};
      std::map<std::size_t, std::size_t> row_index;
      for (std::size_t k = 0; k < rows.size(); ++k) row_index[rows[k]] = k;
      IntMatrix M(rows.size(), cols.size());
      for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        const std::size_t mask = cols[ci];
        int sign = 1;
        for (std::size_t t = 0; t < r; ++t) {
          if (!(mask >> t & 1)) continue;
          const std::size_t sub = mask ^ (std::size_t{1} << t);
          if (lcm_of[sub] == b) {
            M.at(row_index.at(sub), ci) = sign;
          }
          sign = -sign;
        }
      }
      if (M.rows && M.cols) rank_from_size[c] = pborel::field_rank(M, F);
    }

    for (std::size_t c = 1; c <= top; ++c) {
      const std::size_t faces = by_size.count(c) ? by_size[c].size() : 0;
      const std::size_t lower = rank_from_size.count(c) ? rank_from_size[c] : 0;
      const std::size_t upper = rank_from_size.count(c + 1) ? rank_from_size[c + 1] : 0;
      const std::size_t h = faces - lower - upper;
      if (h) table.set(static_cast<std::uint32_t>(c - 1), b, h);
    }
  }
  return table;
}

/// Hochster's induced-subcomplex formula for a squarefree ideal: faces of
/// the Stanley-Reisner complex are the supports W with x^W not in I, and
/// beta_{i, 1_W}(I) is the reduced homology of the restriction to W in
/// dimension |W| - i - 2.
inline BettiTable hochster_betti_squarefree(const MonomialIdeal& I, const FieldSpec& F) {
  const std::size_t n = I.var_count();
  for (const Monomial& g : I.generators()) {
    for (Exponent e : g.exponents()) {
      if (e > 1) throw std::invalid_argument("hochster oracle needs a squarefree ideal");
    }
  }
  auto support_monomial = [n](std::uint64_t w) {
    std::vector<Exponent> e(n, 0);
    for (std::size_t k = 0; k < n; ++k) e[k] = (w >> k) & 1;
    return Monomial(std::move(e));
  };

  std::vector<std::uint64_t> faces;
  for (std::uint64_t w = 0; w < (1ull << n); ++w) {
    if (!I.contains(support_monomial(w))) faces.push_back(w);
  }

  BettiTable table(F, n);
  for (std::uint64_t w = 1; w < (1ull << n); ++w) {
    std::vector<std::uint64_t> restricted;
    for (std::uint64_t f : faces) {
      if ((f & ~w) == 0) restricted.push_back(f);
    }
    const auto K = pborel::SimplicialComplex::from_closed_faces(n, std::move(restricted));
    const auto h = pborel::reduced_homology_dims(K, F);
    const std::size_t card = static_cast<std::size_t>(__builtin_popcountll(w));
    for (std::size_t i = 0; i <= card; ++i) {
      // dim H~_{card - i - 2} lives at index card - i - 1 of h
      const std::ptrdiff_t idx = static_cast<std::ptrdiff_t>(card) - static_cast<std::ptrdiff_t>(i) - 1;
      if (idx < 0 || idx >= static_cast<std::ptrdiff_t>(h.size())) continue;
      const std::size_t v = h[static_cast<std::size_t>(idx)];
      if (v) table.set(static_cast<std::uint32_t>(i), support_monomial(w), v);
    }
  }
  return table;
}

/// Deterministic stream of small random monomial ideals.
class RandomIdealGen {
 public:
  explicit RandomIdealGen(unsigned seed) : rng_(seed) {}

  MonomialIdeal next(std::size_t max_vars = 4, Exponent max_exp = 2, std::size_t max_gens = 5) {
    for (;;) {
      const std::size_t n = pick(2, max_vars);
      const std::size_t count = pick(1, max_gens);
      std::vector<Monomial> gens;
      for (std::size_t g = 0; g < count; ++g) {
        std::vector<Exponent> e(n);
        bool nonzero = false;
        for (auto& x : e) {
          x = pick(0, static_cast<std::size_t>(max_exp));
          nonzero |= x != 0;
        }
        if (nonzero) gens.emplace_back(std::move(e));
      }
      if (gens.empty()) continue;
      return pborel::minimalize(n, std::move(gens));
    }
  }

  std::size_t pick(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

 private:
  std::mt19937 rng_;
};

/// M = U * diag * V with unimodular U, V, so the rank of M over a field is
/// the number of diagonal entries that are nonzero there.
inline IntMatrix smith_form_matrix(const std::vector<std::int64_t>& diag, std::size_t rows,
                                   std::size_t cols, unsigned seed) {
  IntMatrix M(rows, cols);
  for (std::size_t k = 0; k < diag.size() && k < rows && k < cols; ++k) M.at(k, k) = diag[k];

  std::mt19937 rng(seed);
  auto coef = [&rng]() { return static_cast<std::int64_t>(rng() % 3) - 1; };
  // random elementary row/column operations keep every minor's gcd structure
  for (int pass = 0; pass < 6; ++pass) {
    for (std::size_t r = 0; r < rows; ++r) {
      const std::size_t other = rng() % rows;
      if (other == r) continue;
      const std::int64_t c = coef();
      for (std::size_t j = 0; j < cols; ++j) M.at(r, j) += c * M.at(other, j);
    }
    for (std::size_t cidx = 0; cidx < cols; ++cidx) {
      const std::size_t other = rng() % cols;
      if (other == cidx) continue;
      const std::int64_t c = coef();
      for (std::size_t i = 0; i < rows; ++i) M.at(i, cidx) += c * M.at(i, other);
    }
  }
  return M;
}

}  // namespace oracles
