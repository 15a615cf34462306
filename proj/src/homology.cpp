#include "pborel/homology.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace pborel {

FieldSpec FieldSpec::gf(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("GF(p) requires a prime p");
  if (p >> 31) throw std::invalid_argument("prime characteristic must fit 31 bits");
  return FieldSpec{p};
}

FieldSpec FieldSpec::of_characteristic(std::uint64_t c) {
  return c == 0 ? rationals() : gf(c);
}

std::string FieldSpec::label() const {
  return characteristic == 0 ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
}

SimplicialComplex SimplicialComplex::build(std::size_t vertex_count,
                                           std::vector<std::uint64_t> faces, bool validate) {
  if (vertex_count > 64) throw std::invalid_argument("vertex count must be <= 64");
  SimplicialComplex K;
  K.vertices_ = vertex_count;
  if (faces.empty()) return K;

  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  const std::uint64_t all =
      vertex_count == 64 ? ~0ull : ((1ull << vertex_count) - 1);
  std::size_t top = 0;
  for (std::uint64_t f : faces) {
    if (f & ~all) throw std::invalid_argument("face uses a vertex outside {1..v}");
    top = std::max<std::size_t>(top, std::popcount(f));
  }

  K.by_card_.resize(top + 1);
  for (std::uint64_t f : faces) K.by_card_[std::popcount(f)].push_back(f);

  if (validate) {
    // downward closure, and the empty face must be present
    std::set<std::uint64_t> have(faces.begin(), faces.end());
    for (std::uint64_t f : faces) {
      std::uint64_t rest = f;
      while (rest) {
        const std::uint64_t bit = rest & (~rest + 1);
        if (!have.count(f ^ bit))
          throw std::invalid_argument("face list is not closed under subsets");
        rest ^= bit;
      }
    }
    if (K.by_card_[0].empty())
      throw std::invalid_argument("a nonempty complex must contain the empty face");
  }
  return K;
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t vertex_count,
                                                std::vector<std::uint64_t> faces) {
  return build(vertex_count, std::move(faces), true);
}

SimplicialComplex SimplicialComplex::from_closed_faces(std::size_t vertex_count,
                                                       std::vector<std::uint64_t> faces) {
  return build(vertex_count, std::move(faces), false);
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count,
                                                 const std::vector<std::uint64_t>& facets) {
  std::set<std::uint64_t> closure;
  for (std::uint64_t f : facets) {
    // enumerate all submasks of f, including 0
    std::uint64_t s = f;
    for (;;) {
      closure.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  return build(vertex_count, std::vector<std::uint64_t>(closure.begin(), closure.end()),
               !facets.empty());
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t c = 0;
  for (const auto& v : by_card_) c += v.size();
  return c;
}

const std::vector<std::uint64_t>& SimplicialComplex::faces_of_cardinality(std::size_t c) const {
  static const std::vector<std::uint64_t> none;
  return c < by_card_.size() ? by_card_[c] : none;
}

IntMatrix boundary_matrix(const SimplicialComplex& K, int i) {
  if (i < 0) return IntMatrix{};
  const auto& rows_faces = K.faces_of_cardinality(static_cast<std::size_t>(i));
  const auto& cols_faces = K.faces_of_cardinality(static_cast<std::size_t>(i) + 1);
  IntMatrix M(rows_faces.size(), cols_faces.size());
  if (M.rows == 0 || M.cols == 0) return M;

  for (std::size_t c = 0; c < cols_faces.size(); ++c) {
    const std::uint64_t face = cols_faces[c];
    std::uint64_t rest = face;
    int sign = 1;
    while (rest) {
      const std::uint64_t bit = rest & (~rest + 1);
      const std::uint64_t sub = face ^ bit;
      const auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), sub);
      M.at(static_cast<std::size_t>(it - rows_faces.begin()), c) = sign;
      sign = -sign;
      rest ^= bit;
    }
  }
  return M;
}

namespace {

using Wide = __int128;

Wide checked_wide_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("exact elimination exceeded 128-bit integers");
  return r;
}

Wide checked_wide_sub(Wide a, Wide b) {
  Wide r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("exact elimination exceeded 128-bit integers");
  return r;
}

// Fraction-free Gaussian elimination (Bareiss). Intermediate entries are
// minors of the original matrix, so the division is exact; 128-bit storage
// with overflow checks keeps the computation honest.
std::size_t rank_over_q(const IntMatrix& M) {
  const std::size_t R = M.rows, C = M.cols;
  std::vector<Wide> w(M.a.begin(), M.a.end());
  auto at = [&](std::size_t r, std::size_t c) -> Wide& { return w[r * C + c]; };

  std::size_t rank = 0;
  Wide prev = 1;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t piv = rank;
    while (piv < R && at(piv, col) == 0) ++piv;
    if (piv == R) continue;
    if (piv != rank) {
      for (std::size_t c = 0; c < C; ++c) std::swap(at(piv, c), at(rank, c));
    }
    const Wide pivot = at(rank, col);
    for (std::size_t r = rank + 1; r < R; ++r) {
      const Wide head = at(r, col);
      for (std::size_t c = col; c < C; ++c) {
        at(r, c) = checked_wide_sub(checked_wide_mul(pivot, at(r, c)),
                                    checked_wide_mul(head, at(rank, c))) /
                   prev;
      }
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const IntMatrix& M, std::uint64_t p) {
  if (p >> 31) throw std::invalid_argument("prime characteristic must fit 31 bits");
  const std::size_t R = M.rows, C = M.cols;
  std::vector<std::uint64_t> w(R * C);
  for (std::size_t k = 0; k < w.size(); ++k) {
    const std::int64_t v = M.a[k] % static_cast<std::int64_t>(p);
    w[k] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
  }
  auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return w[r * C + c]; };

  // modular inverse via Fermat; p is prime and < 2^31 so products fit
  auto inv = [p](std::uint64_t x) {
    std::uint64_t e = p - 2, acc = 1;
    while (e) {
      if (e & 1) acc = acc * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return acc;
  };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t piv = rank;
    while (piv < R && at(piv, col) == 0) ++piv;
    if (piv == R) continue;
    if (piv != rank) {
      for (std::size_t c = 0; c < C; ++c) std::swap(at(piv, c), at(rank, c));
    }
    const std::uint64_t pinv = inv(at(rank, col));
    for (std::size_t r = rank + 1; r < R; ++r) {
      if (at(r, col) == 0) continue;
      const std::uint64_t f = at(r, col) * pinv % p;
      for (std::size_t c = col; c < C; ++c) {
        at(r, c) = (at(r, c) + (p - f) * at(rank, c)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t field_rank(const IntMatrix& M, const FieldSpec& F) {
  require_characteristic(F.characteristic);
  if (M.rows == 0 || M.cols == 0) return 0;
  return F.characteristic == 0 ? rank_over_q(M) : rank_mod_p(M, F.characteristic);
}

std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& K, const FieldSpec& F) {
  if (K.is_void()) return {};
  const std::size_t top = static_cast<std::size_t>(K.dim() + 1);  // top cardinality
  std::vector<std::size_t> rank_of_card(top + 2, 0);
  for (std::size_t c = 1; c <= top; ++c) {
    rank_of_card[c] = field_rank(boundary_matrix(K, static_cast<int>(c) - 1), F);
  }
  std::vector<std::size_t> h(top + 1);
  for (std::size_t c = 0; c <= top; ++c) {
    h[c] = K.faces_of_cardinality(c).size() - rank_of_card[c] - rank_of_card[c + 1];
  }
  return h;
}

}  // namespace pborel
