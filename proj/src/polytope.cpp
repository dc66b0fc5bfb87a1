#include "fewnomial/polytope.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "fewnomial/parallel.hpp"

namespace fewnomial {

namespace {

std::vector<QPoint> subset(const std::vector<QPoint>& pts, const std::vector<std::size_t>& idx) {
  std::vector<QPoint> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(pts[i]);
  return out;
}

/// Rescales w by a positive factor to a primitive integer vector.
void normalize_direction(QPoint& w) {
  BigInt den = 1;
  for (const auto& x : w) {
    if (!x.is_zero()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
  }
  BigInt g = 0;
  std::vector<BigInt> ints;
  ints.reserve(w.size());
  for (const auto& x : w) {
    BigInt v = x.numerator() * (den / x.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (g == 0) return;
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = BigRational(BigInt(ints[i] / g));
}

struct Minimizers {
  BigRational value;
  std::vector<std::size_t> points;
};

Minimizers minimizers(const std::vector<QPoint>& pts, const QPoint& w) {
  Minimizers out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    BigRational v = dot(w, pts[i]);
    if (out.points.empty() || v < out.value) {
      out.value = std::move(v);
      out.points.assign(1, i);
    } else if (v == out.value) {
      out.points.push_back(i);
    }
  }
  return out;
}

/**
 * Smallest lambda > 0 at which a point outside `face` reaches zero slack
 * under the rotated functional w + lambda t, given w . x >= c on pts with
 * equality on `face` and t . (x - base) = 0 on the part of the face to keep.
 */
std::optional<BigRational> rotation_step(const std::vector<QPoint>& pts, const std::vector<bool>& in_face,
                                         const QPoint& w, const BigRational& c, const QPoint& t,
                                         const QPoint& base) {
  const BigRational tb = dot(t, base);
  std::optional<BigRational> best;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (in_face[i]) continue;
    const BigRational g = dot(t, pts[i]) - tb;
    if (g.sign() >= 0) continue;
    BigRational lambda = (dot(w, pts[i]) - c) / (-g);
    if (!best || lambda < *best) best = std::move(lambda);
  }
  return best;
}

std::vector<HullFacet> relative_facets(const std::vector<QPoint>& pts);

/// Facets of a duplicate-free point set spanning its ambient space, found by
/// gift-wrapping across ridges.
std::vector<HullFacet> full_dim_facets(const std::vector<QPoint>& pts) {
  const std::size_t d = pts.front().size();
  if (d == 1) {
    const auto lo = minimizers(pts, QPoint{BigRational(1)});
    const auto hi = minimizers(pts, QPoint{BigRational(-1)});
    return {HullFacet{QPoint{BigRational(1)}, lo.value, lo.points},
            HullFacet{QPoint{BigRational(-1)}, hi.value, hi.points}};
  }

  // Start from the face minimizing x_1 and rotate until it is a facet.
  QPoint w(d, BigRational(0));
  w[0] = 1;
  Minimizers face = minimizers(pts, w);
  while (affine_frame(subset(pts, face.points)).dim + 1 < d) {
    QMatrix rows;
    const QPoint& base = pts[face.points.front()];
    for (std::size_t k = 1; k < face.points.size(); ++k) rows.push_back(pts[face.points[k]] - base);
    rows.push_back(w);
    QPoint t = nullspace(rows, d).front();
    std::vector<bool> in_face(pts.size(), false);
    for (std::size_t i : face.points) in_face[i] = true;
    auto step = rotation_step(pts, in_face, w, face.value, t, base);
    if (!step) {
      t = scaled(t, BigRational(-1));
      step = rotation_step(pts, in_face, w, face.value, t, base);
    }
    if (!step) throw ConsistencyError("full_dim_facets: point set is not full-dimensional");
    w = w + scaled(t, *step);
    normalize_direction(w);
    face = minimizers(pts, w);
  }

  std::vector<HullFacet> out;
  std::set<std::vector<std::size_t>> seen;
  const auto add = [&](QPoint normal) {
    normalize_direction(normal);
    Minimizers m = minimizers(pts, normal);
    if (seen.insert(m.points).second) out.push_back(HullFacet{std::move(normal), m.value, m.points});
  };
  add(w);
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    const HullFacet facet = out[idx];
    std::vector<bool> in_face(pts.size(), false);
    for (std::size_t i : facet.points) in_face[i] = true;
    const std::vector<QPoint> local = subset(pts, facet.points);
    std::vector<BigRational> slack(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!in_face[i]) slack[i] = dot(facet.normal, pts[i]) - facet.offset;
    }
    // The neighbour across a ridge with relative normal u is u + mu w, with
    // mu the least value keeping every point off the facet on the inner side.
    for (const HullFacet& ridge : relative_facets(local)) {
      std::optional<BigRational> mu;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (in_face[i]) continue;
        BigRational need = (ridge.offset - dot(ridge.normal, pts[i])) / slack[i];
        if (!mu || need > *mu) mu = std::move(need);
      }
      if (!mu) throw ConsistencyError("full_dim_facets: ridge without a neighbouring facet");
      add(ridge.normal + scaled(facet.normal, *mu));
    }
  }
  std::sort(out.begin(), out.end(), [](const HullFacet& a, const HullFacet& b) { return a.points < b.points; });
  return out;
}

/// Facets relative to the affine hull, with normals lifted to ambient
/// coordinates (zero outside the chosen chart). Empty for a single point.
std::vector<HullFacet> relative_facets(const std::vector<QPoint>& pts) {
  const AffineFrame frame = affine_frame(pts);
  if (frame.dim == 0) return {};
  const std::size_t ambient = pts.front().size();
  if (frame.dim == ambient) return full_dim_facets(pts);
  std::vector<QPoint> chart;
  chart.reserve(pts.size());
  for (const auto& p : pts) chart.push_back(select(p, frame.coordinates));
  std::vector<HullFacet> facets = full_dim_facets(chart);
  for (auto& f : facets) {
    QPoint lifted(ambient, BigRational(0));
    for (std::size_t k = 0; k < frame.coordinates.size(); ++k) lifted[frame.coordinates[k]] = f.normal[k];
    f.normal = std::move(lifted);
  }
  return facets;
}

void sort_unique(std::vector<QPoint>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

/// Pyramid decomposition from the first point: simplices as index tuples.
std::vector<std::vector<std::size_t>> simplices(const std::vector<QPoint>& pts, const std::vector<HullFacet>* known) {
  std::vector<HullFacet> computed;
  if (!known) {
    computed = relative_facets(pts);
    known = &computed;
  }
  if (known->empty()) return {{0}};
  std::vector<std::vector<std::size_t>> out;
  for (const HullFacet& f : *known) {
    if (std::find(f.points.begin(), f.points.end(), std::size_t{0}) != f.points.end()) continue;
    for (auto s : simplices(subset(pts, f.points), nullptr)) {
      for (auto& i : s) i = f.points[i];
      s.push_back(0);
      out.push_back(std::move(s));
    }
  }
  return out;
}

BigInt factorial(std::size_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace

Polytope convex_hull(std::vector<QPoint> points) {
  if (points.empty()) throw std::invalid_argument("convex_hull of an empty point set");
  const std::size_t ambient = points.front().size();
  for (const auto& p : points) {
    if (p.size() != ambient) throw std::invalid_argument("convex_hull: points of mixed dimension");
  }
  sort_unique(points);
  const AffineFrame frame = affine_frame(points);
  if (frame.dim == 0) {
    return Polytope({points.front()}, ambient, 0, std::make_shared<const std::vector<HullFacet>>());
  }

  std::vector<QPoint> chart;
  if (frame.dim == ambient) {
    chart = points;
  } else {
    chart.reserve(points.size());
    for (const auto& p : points) chart.push_back(select(p, frame.coordinates));
  }
  std::vector<HullFacet> facets = full_dim_facets(chart);

  // A boundary point is a vertex iff the normals of its facets span R^k.
  std::vector<QMatrix> incident(points.size());
  for (const auto& f : facets) {
    for (std::size_t i : f.points) incident[i].push_back(f.normal);
  }
  std::vector<std::size_t> reindex(points.size(), SIZE_MAX);
  std::vector<QPoint> vertices;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (incident[i].size() >= frame.dim && rank(incident[i], frame.dim) == frame.dim) {
      reindex[i] = vertices.size();
      vertices.push_back(points[i]);
    }
  }
  for (auto& f : facets) {
    std::vector<std::size_t> kept;
    for (std::size_t i : f.points) {
      if (reindex[i] != SIZE_MAX) kept.push_back(reindex[i]);
    }
    f.points = std::move(kept);
    if (frame.dim != ambient) {
      QPoint lifted(ambient, BigRational(0));
      for (std::size_t k = 0; k < frame.coordinates.size(); ++k) lifted[frame.coordinates[k]] = f.normal[k];
      f.normal = std::move(lifted);
    }
  }
  return Polytope(std::move(vertices), ambient, frame.dim,
                  std::make_shared<const std::vector<HullFacet>>(std::move(facets)));
}

Face face(const Polytope& p, const QPoint& w) {
  if (w.size() != p.ambient_dim()) throw std::invalid_argument("face: normal has wrong dimension");
  if (is_zero_vector(w)) return Face{w, p.vertices()};
  const Minimizers m = minimizers(p.vertices(), w);
  return Face{w, subset(p.vertices(), m.points)};
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
  std::vector<QPoint> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  }
  return convex_hull(std::move(sums));
}

Polytope translate(const Polytope& p, const QPoint& t) {
  std::vector<QPoint> moved;
  for (const auto& v : p.vertices()) moved.push_back(v + t);
  return convex_hull(std::move(moved));
}

QPoint project_last(const QPoint& x) { return QPoint(x.begin(), x.end() - 1); }

Polytope project_last(const Polytope& p) {
  if (p.ambient_dim() < 2) throw std::invalid_argument("project_last needs ambient dimension >= 2");
  std::vector<QPoint> pts;
  for (const auto& v : p.vertices()) pts.push_back(project_last(v));
  return convex_hull(std::move(pts));
}

BigRational euclidean_volume(const Polytope& p) {
  if (!p.is_full_dimensional()) return BigRational(0);
  const auto& verts = p.vertices();
  const std::size_t d = p.ambient_dim();
  mpq_class total;
  for (const auto& s : simplices(verts, &p.facets())) {
    QMatrix m;
    m.reserve(d);
    for (std::size_t k = 0; k + 1 < s.size(); ++k) m.push_back(verts[s[k]] - verts[s.back()]);
    total += determinant(std::move(m)).abs().raw();
  }
  return BigRational(mpq_class(total / mpq_class(factorial(d))));
}

BigRational mixed_volume(std::span<const Polytope> polytopes) {
  const std::size_t n = polytopes.size();
  if (n == 0) throw std::invalid_argument("mixed_volume of zero polytopes");
  if (n > 20) throw std::invalid_argument("mixed_volume: too many polytopes for inclusion-exclusion");
  for (const auto& p : polytopes) {
    if (p.ambient_dim() != n) throw std::invalid_argument("mixed_volume: n polytopes must live in R^n");
  }
  // Translation invariance: a point summand contributes nothing.
  for (const auto& p : polytopes) {
    if (p.affine_dim() == 0) return BigRational(0);
  }

  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::optional<Polytope>> sums(subsets);
  std::vector<BigRational> volumes(subsets);
  // Level by level, each sum extends one on the previous level by its top summand.
  for (std::size_t level = 1; level <= n; ++level) {
    std::vector<std::size_t> masks;
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) == level) masks.push_back(mask);
    }
    parallel_for(masks.size(), [&](std::size_t j) {
      const std::size_t mask = masks[j];
      const std::size_t top = 63 - static_cast<std::size_t>(__builtin_clzll(mask));
      const std::size_t rest = mask & ~(std::size_t{1} << top);
      sums[mask] = rest == 0 ? polytopes[top] : minkowski_sum(*sums[rest], polytopes[top]);
      volumes[mask] = euclidean_volume(*sums[mask]);
    });
    if (level >= 2) {
      // Sums below the current level are no longer needed.
      for (std::size_t mask = 1; mask < subsets; ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) == level - 1) sums[mask].reset();
      }
    }
  }
  mpq_class total;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if ((n - size) % 2 == 0) {
      total += volumes[mask].raw();
    } else {
      total -= volumes[mask].raw();
    }
  }
  return BigRational(std::move(total));
}

// ---------------------------------------------------------------------------
// Lower hull of a Minkowski sum, walked in the space of gradients v.

namespace {

class LowerWalk {
 public:
  using FaceTuple = std::vector<std::vector<std::size_t>>;

  struct Cell {
    QPoint gradient;
    FaceTuple faces;
  };

  explicit LowerWalk(const std::vector<std::vector<QPoint>>& configs) {
    n_ = configs.front().front().size() - 1;
    for (const auto& config : configs) {
      std::vector<QPoint> proj;
      std::vector<BigRational> heights;
      for (const auto& a : config) {
        proj.push_back(project_last(a));
        heights.push_back(a.back());
      }
      proj_.push_back(std::move(proj));
      height_.push_back(std::move(heights));
    }
    QMatrix diffs;
    for (const auto& proj : proj_) {
      for (std::size_t a = 1; a < proj.size(); ++a) diffs.push_back(proj[a] - proj[0]);
    }
    span_ = row_reduce(std::move(diffs), n_).rows;
  }

  /// Dimension of the projected Minkowski sum.
  std::size_t dimension() const { return span_.size(); }

  std::vector<Cell> run() {
    std::vector<Cell> cells;
    std::set<FaceTuple> seen;
    Cell first = initial_cell();
    seen.insert(first.faces);
    cells.push_back(std::move(first));
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
      const Cell cell = cells[idx];
      for (std::optional<QPoint>& next : neighbours(cell)) {
        if (!next) continue;
        FaceTuple faces = faces_at(*next).second;
        if (seen.insert(faces).second) cells.push_back(Cell{std::move(*next), std::move(faces)});
      }
    }
    return cells;
  }

 private:
  BigRational value(std::size_t i, std::size_t a, const QPoint& v) const { return dot(v, proj_[i][a]) + height_[i][a]; }

  std::pair<std::vector<BigRational>, FaceTuple> faces_at(const QPoint& v) const {
    std::vector<BigRational> mins;
    FaceTuple faces;
    for (std::size_t i = 0; i < proj_.size(); ++i) {
      BigRational best;
      std::vector<std::size_t> idx;
      for (std::size_t a = 0; a < proj_[i].size(); ++a) {
        BigRational val = value(i, a, v);
        if (idx.empty() || val < best) {
          best = std::move(val);
          idx.assign(1, a);
        } else if (val == best) {
          idx.push_back(a);
        }
      }
      mins.push_back(std::move(best));
      faces.push_back(std::move(idx));
    }
    return {std::move(mins), std::move(faces)};
  }

  /// Smallest lambda > 0 at which v + lambda t changes some summand's face,
  /// measured from the anchors (points of each face kept tied along t).
  std::optional<BigRational> step(const QPoint& v, const QPoint& t, const std::vector<BigRational>& mins,
                                  const FaceTuple& faces, const std::vector<std::size_t>& anchors) const {
    std::optional<BigRational> best;
    for (std::size_t i = 0; i < proj_.size(); ++i) {
      std::vector<bool> in_face(proj_[i].size(), false);
      for (std::size_t a : faces[i]) in_face[a] = true;
      const BigRational anchor = dot(t, proj_[i][anchors[i]]);
      for (std::size_t a = 0; a < proj_[i].size(); ++a) {
        if (in_face[a]) continue;
        const BigRational g = dot(t, proj_[i][a]) - anchor;
        if (g.sign() >= 0) continue;
        BigRational lambda = (value(i, a, v) - mins[i]) / (-g);
        if (!best || lambda < *best) best = std::move(lambda);
      }
    }
    return best;
  }

  Cell initial_cell() const {
    QPoint v(n_, BigRational(0));
    while (true) {
      auto [mins, faces] = faces_at(v);
      QMatrix dirs;
      std::vector<std::size_t> anchors;
      for (std::size_t i = 0; i < faces.size(); ++i) {
        anchors.push_back(faces[i].front());
        for (std::size_t k = 1; k < faces[i].size(); ++k) {
          dirs.push_back(proj_[i][faces[i][k]] - proj_[i][faces[i].front()]);
        }
      }
      if (rank(dirs, n_) == dimension()) return Cell{v, faces};
      // A direction inside the projected span, orthogonal to the current face.
      QMatrix coupled;
      for (const auto& d : dirs) {
        QPoint row;
        for (const auto& b : span_) row.push_back(dot(d, b));
        coupled.push_back(std::move(row));
      }
      const QPoint y = nullspace(coupled, span_.size()).front();
      QPoint t(n_, BigRational(0));
      for (std::size_t j = 0; j < span_.size(); ++j) t = t + scaled(span_[j], y[j]);
      auto lambda = step(v, t, mins, faces, anchors);
      if (!lambda) {
        t = scaled(t, BigRational(-1));
        lambda = step(v, t, mins, faces, anchors);
      }
      if (!lambda) throw ConsistencyError("lower hull walk: no admissible rotation");
      v = v + scaled(t, *lambda);
    }
  }

  std::vector<std::optional<QPoint>> neighbours(const Cell& cell) const {
    std::set<QPoint> sum{QPoint(n_, BigRational(0))};
    for (std::size_t i = 0; i < cell.faces.size(); ++i) {
      std::set<QPoint> next;
      for (const auto& x : sum) {
        for (std::size_t a : cell.faces[i]) next.insert(x + proj_[i][a]);
      }
      sum = std::move(next);
    }
    const std::vector<QPoint> pts(sum.begin(), sum.end());
    const std::vector<HullFacet> ridges = relative_facets(pts);
    const auto [mins, faces] = faces_at(cell.gradient);

    std::vector<std::optional<QPoint>> out(ridges.size());
    for (std::size_t r = 0; r < ridges.size(); ++r) {
      const QPoint& u = ridges[r].normal;
      std::vector<std::size_t> anchors;
      for (std::size_t i = 0; i < faces.size(); ++i) {
        std::size_t best = faces[i].front();
        BigRational best_val = dot(u, proj_[i][best]);
        for (std::size_t a : faces[i]) {
          BigRational val = dot(u, proj_[i][a]);
          if (val < best_val) {
            best_val = std::move(val);
            best = a;
          }
        }
        anchors.push_back(best);
      }
      if (auto lambda = step(cell.gradient, u, mins, faces, anchors)) out[r] = cell.gradient + scaled(u, *lambda);
    }
    return out;
  }

  std::size_t n_ = 0;
  std::vector<std::vector<QPoint>> proj_;
  std::vector<std::vector<BigRational>> height_;
  QMatrix span_;
};

std::vector<std::vector<QPoint>> vertex_sets(std::span<const Polytope> polys) {
  std::vector<std::vector<QPoint>> out;
  for (const auto& p : polys) out.push_back(p.vertices());
  return out;
}

}  // namespace

std::vector<LowerCell> lower_cells(std::span<const Polytope> lifted) {
  const std::size_t n = lifted.size();
  if (n == 0) throw std::invalid_argument("lower_cells needs at least one polytope");
  for (const auto& p : lifted) {
    if (p.ambient_dim() != n + 1) throw std::invalid_argument("lower_cells: n polytopes must live in R^{n+1}");
  }
  const auto configs = vertex_sets(lifted);
  LowerWalk walk(configs);
  if (walk.dimension() < n) return {};
  std::vector<LowerCell> out;
  for (auto& cell : walk.run()) {
    LowerCell c{std::move(cell.gradient), {}};
    for (std::size_t i = 0; i < n; ++i) c.faces.push_back(subset(configs[i], cell.faces[i]));
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const LowerCell& a, const LowerCell& b) { return a.gradient < b.gradient; });
  return out;
}

std::vector<std::vector<std::size_t>> faces_of_dimension(const std::vector<QPoint>& points, std::size_t k) {
  const std::size_t dim = affine_frame(points).dim;
  if (dim < k) return {};
  std::vector<std::size_t> all(points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (dim == k) return {all};
  std::set<std::vector<std::size_t>> found;
  for (const HullFacet& f : relative_facets(points)) {
    for (auto sub : faces_of_dimension(subset(points, f.points), k)) {
      for (auto& i : sub) i = f.points[i];
      std::sort(sub.begin(), sub.end());
      found.insert(std::move(sub));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<std::pair<QPoint, QPoint>> lower_edges(const Polytope& lifted) {
  if (lifted.ambient_dim() < 2) throw std::invalid_argument("lower_edges needs a lifted polytope");
  const std::vector<std::vector<QPoint>> configs{lifted.vertices()};
  LowerWalk walk(configs);
  if (walk.dimension() == 0) return {};
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& cell : walk.run()) {
    const auto& idx = cell.faces.front();
    for (const auto& e : faces_of_dimension(subset(lifted.vertices(), idx), 1)) {
      edges.emplace(idx[e[0]], idx[e[1]]);
    }
  }
  std::vector<std::pair<QPoint, QPoint>> out;
  for (const auto& [a, b] : edges) out.emplace_back(lifted.vertices()[a], lifted.vertices()[b]);
  return out;
}

EdgeTupleSearch edge_tuple_search(std::span<const Polytope> lifted) {
  const std::size_t n = lifted.size();
  std::vector<std::vector<std::pair<QPoint, QPoint>>> edges;
  EdgeTupleSearch out;
  out.candidates = 1;
  for (const auto& p : lifted) {
    edges.push_back(lower_edges(p));
    out.candidates *= edges.back().size();
  }
  if (out.candidates == 0) return out;
  std::set<QPoint> normals;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    QMatrix a;
    QPoint rhs;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& [p, q] = edges[i][pick[i]];
      a.push_back(project_last(q) - project_last(p));
      rhs.push_back(p.back() - q.back());
    }
    if (auto v = solve_square(a, rhs)) {
      const QPoint normal = [&] {
        QPoint w(*v);
        w.push_back(BigRational(1));
        return w;
      }();
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        const auto m = minimizers(lifted[i].vertices(), normal);
        const auto& [p, q] = edges[i][pick[i]];
        ok = dot(normal, p) == m.value && dot(normal, q) == m.value;
      }
      if (ok) normals.insert(*v);
    }
    std::size_t i = 0;
    while (i < n && ++pick[i] == edges[i].size()) pick[i++] = 0;
    if (i == n) break;
  }
  out.normals.assign(normals.begin(), normals.end());
  return out;
}

}  // namespace fewnomial
