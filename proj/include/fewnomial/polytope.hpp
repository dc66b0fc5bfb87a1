#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "fewnomial/exact.hpp"
#include "fewnomial/linalg.hpp"

namespace fewnomial {

/**
 * A facet of a point configuration relative to its affine hull.
 *
 * `normal` is an inner normal in ambient coordinates: normal . x >= offset
 * for every point, with equality exactly on the facet. `points` indexes the
 * configuration the facet was computed from.
 */
struct HullFacet {
  QPoint normal;
  BigRational offset;
  std::vector<std::size_t> points;
};

/**
 * Convex hull of finitely many rational points, stored by its vertices in
 * lexicographic order. Construct through convex_hull().
 */
class Polytope {
 public:
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t affine_dim() const { return affine_dim_; }
  bool is_full_dimensional() const { return affine_dim_ == ambient_dim_; }
  const std::vector<QPoint>& vertices() const { return vertices_; }

  /// Facets relative to the affine hull; indices refer to vertices().
  const std::vector<HullFacet>& facets() const { return *facets_; }

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

 private:
  friend Polytope convex_hull(std::vector<QPoint> points);
  Polytope(std::vector<QPoint> vertices, std::size_t ambient, std::size_t affine,
           std::shared_ptr<const std::vector<HullFacet>> facets)
      : vertices_(std::move(vertices)), ambient_dim_(ambient), affine_dim_(affine), facets_(std::move(facets)) {}

  std::vector<QPoint> vertices_;
  std::size_t ambient_dim_ = 0;
  std::size_t affine_dim_ = 0;
  std::shared_ptr<const std::vector<HullFacet>> facets_;
};

/// Face of a polytope with inner normal w: the vertices minimizing w . x.
struct Face {
  QPoint normal;
  std::vector<QPoint> vertices;
};

/**
 * One linearity domain of the lower hull of a Minkowski sum of lifted
 * polytopes in R^{n+1}. The face of the sum with inner normal (v, 1) is
 * n-dimensional; faces[i] is the vertex set of the i-th summand's face.
 */
struct LowerCell {
  QPoint gradient;  // v
  std::vector<std::vector<QPoint>> faces;
};

/// Throws std::invalid_argument on empty input or mixed dimensions.
Polytope convex_hull(std::vector<QPoint> points);

/// Throws std::invalid_argument on a dimension mismatch. w = 0 gives P.
Face face(const Polytope& p, const QPoint& w);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope translate(const Polytope& p, const QPoint& t);

/// Drops the last coordinate of every vertex.
Polytope project_last(const Polytope& p);
QPoint project_last(const QPoint& x);

/// Exact volume in the ambient dimension; 0 for lower-dimensional polytopes.
BigRational euclidean_volume(const Polytope& p);

/**
 * Mixed volume of n polytopes in R^n, normalized so that n copies of the
 * standard simplex give 1, by inclusion-exclusion over Minkowski sums.
 */
BigRational mixed_volume(std::span<const Polytope> polytopes);

/**
 * Linearity domains of the lower hull of P_1 + ... + P_n for n polytopes in
 * R^{n+1}, sorted by gradient. Empty when the projected sum is not
 * n-dimensional. Cells whose faces have mixed volume 0 are included.
 */
std::vector<LowerCell> lower_cells(std::span<const Polytope> lifted);

/// Index sets (into `points`) of the k-dimensional faces of conv(points).
/// `points` must be free of duplicates.
std::vector<std::vector<std::size_t>> faces_of_dimension(const std::vector<QPoint>& points, std::size_t k);

/// Edges of a lifted polytope in R^{n+1} that are lower faces (inner normal
/// with positive last coordinate).
std::vector<std::pair<QPoint, QPoint>> lower_edges(const Polytope& lifted);

/**
 * Brute-force search for mixed cells: every tuple of one lower edge per
 * lifted polytope fixes at most one candidate normal (v, 1); it is a true
 * normal when each edge lies in the corresponding face at (v, 1).
 */
struct EdgeTupleSearch {
  std::size_t candidates = 0;
  std::vector<QPoint> normals;  // distinct v, sorted
};
EdgeTupleSearch edge_tuple_search(std::span<const Polytope> lifted);

}  // namespace fewnomial
