#pragma once

#include <cstdint>
#include <vector>

#include "pborel/field.hpp"

namespace pborel {

/// Dense integer matrix, row-major. Boundary matrices here are small (the
/// complexes live on at most a few dozen vertices), so nothing sparse is
/// needed.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::int64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Abstract simplicial complex on vertex set {1..v}, v <= 64. Faces are
/// vertex bitmasks grouped by cardinality; every nonempty complex contains
/// the empty face (cardinality 0), which plays the role of the
/// (-1)-dimensional cell in reduced homology.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // void complex: no faces at all

  /// Builds from an explicit face list; validates downward closure.
  static SimplicialComplex from_faces(std::size_t vertex_count, std::vector<std::uint64_t> faces);
  /// Builds the downward closure of the given facets.
  static SimplicialComplex from_facets(std::size_t vertex_count,
                                       const std::vector<std::uint64_t>& facets);
  /// Trusted constructor for callers that guarantee closure themselves.
  static SimplicialComplex from_closed_faces(std::size_t vertex_count,
                                             std::vector<std::uint64_t> faces);

  std::size_t vertex_count() const { return vertices_; }
  bool is_void() const { return by_card_.empty(); }
  /// -1 for the empty-face-only complex; invalid for the void complex.
  int dim() const { return static_cast<int>(by_card_.size()) - 2; }
  std::size_t face_count() const;
  const std::vector<std::uint64_t>& faces_of_cardinality(std::size_t c) const;

 private:
  std::size_t vertices_ = 0;
  std::vector<std::vector<std::uint64_t>> by_card_;  // [c]: sorted masks, popcount c

  static SimplicialComplex build(std::size_t vertex_count, std::vector<std::uint64_t> faces,
                                 bool validate);
};

/// Matrix of the simplicial boundary map from i-dimensional chains to
/// (i-1)-dimensional chains, with signs from the sorted-vertex orientation.
/// boundary_matrix(K, 0) maps vertices to the empty face.
IntMatrix boundary_matrix(const SimplicialComplex& K, int i);

/// Exact rank of M over F: fraction-free (Bareiss) elimination over the
/// integers in characteristic 0, Gaussian elimination mod p otherwise.
/// No floating point is involved anywhere.
std::size_t field_rank(const IntMatrix& M, const FieldSpec& F);

/// h[k] = dim of the reduced homology in dimension k-1, k = 0..dim+1;
/// empty for the void complex. In particular h[0] is 1 exactly when the
/// complex consists of the empty face alone.
std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& K, const FieldSpec& F);

}  // namespace pborel
