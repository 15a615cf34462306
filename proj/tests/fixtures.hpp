#pragma once

#include <vector>

#include "pborel/ideal.hpp"

namespace fixtures {

using pborel::Exponent;
using pborel::Monomial;
using pborel::MonomialIdeal;

inline MonomialIdeal mk(std::size_t n, const std::vector<std::vector<Exponent>>& rows) {
  std::vector<Monomial> gens;
  gens.reserve(rows.size());
  for (const auto& r : rows) gens.emplace_back(r);
  return pborel::minimalize(n, std::move(gens));
}

inline Monomial deg(std::vector<Exponent> e) { return Monomial(std::move(e)); }

// Stanley-Reisner ideal of the 6-vertex minimal triangulation of the real
// projective plane: the ten minimal non-faces.
inline MonomialIdeal rp2_ideal() {
  return mk(6, {{1, 1, 1, 0, 0, 0},
                {1, 1, 0, 1, 0, 0},
                {1, 0, 1, 0, 1, 0},
                {0, 1, 0, 1, 1, 0},
                {0, 0, 1, 1, 1, 0},
                {0, 1, 1, 0, 0, 1},
                {1, 0, 0, 1, 0, 1},
                {0, 0, 1, 1, 0, 1},
                {1, 0, 0, 0, 1, 1},
                {0, 1, 0, 0, 1, 1}});
}

// The 2-Borel-fixed ideal the construction produces from rp2_ideal() with
// p = 2 and exponents (3,5,7,9,11); frozen as the expected output.
inline MonomialIdeal expected_rp2_construction() {
  return mk(6, {{8, 0, 0, 0, 0, 0},
                {0, 32, 0, 0, 0, 0},
                {1, 8, 32, 0, 0, 0},
                {0, 0, 128, 0, 0, 0},
                {1, 8, 0, 128, 0, 0},
                {0, 0, 0, 512, 0, 0},
                {1, 0, 32, 0, 512, 0},
                {0, 8, 0, 128, 512, 0},
                {0, 0, 32, 128, 512, 0},
                {0, 0, 0, 0, 2048, 0},
                {0, 8, 32, 0, 0, 2048},
                {1, 0, 0, 128, 0, 2048},
                {0, 0, 32, 128, 0, 2048},
                {1, 0, 0, 0, 512, 2048},
                {0, 8, 0, 0, 512, 2048}});
}

inline std::vector<std::uint64_t> expected_rp2_exponents() { return {3, 5, 7, 9, 11}; }
inline std::vector<Exponent> expected_rp2_bounds() { return {6, 20, 75, 298, 1193}; }

// The facets of the triangulation itself (the complements of the non-faces
// among the 3-subsets of {1..6}), as vertex bitmasks.
inline std::vector<std::uint64_t> rp2_triangulation_facets() {
  auto mask = [](int a, int b, int c) {
    return (1ull << (a - 1)) | (1ull << (b - 1)) | (1ull << (c - 1));
  };
  return {mask(1, 2, 5), mask(1, 2, 6), mask(1, 3, 4), mask(1, 3, 6), mask(1, 4, 5),
          mask(2, 3, 4), mask(2, 3, 5), mask(2, 4, 6), mask(3, 5, 6), mask(4, 5, 6)};
}

}  // namespace fixtures
