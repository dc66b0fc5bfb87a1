#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fewnomial/polytope.hpp"
#include "generators.hpp"

using namespace fewnomial;
using namespace fewnomial::testing;

namespace {

QPoint pt(std::initializer_list<long> xs) {
  QPoint out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("hull of a square with interior and edge points") {
  const Polytope p = convex_hull({pt({0, 0}), pt({2, 0}), pt({0, 2}), pt({2, 2}), pt({1, 1}), pt({1, 0}), pt({0, 0})});
  CHECK(p.vertices() == std::vector<QPoint>{pt({0, 0}), pt({0, 2}), pt({2, 0}), pt({2, 2})});
  CHECK(p.is_full_dimensional());
  CHECK(p.facets().size() == 4);
  CHECK(euclidean_volume(p) == BigRational(4));
}

TEST_CASE("lower-dimensional hulls") {
  const Polytope seg = convex_hull({pt({0, 0, 0}), pt({1, 1, 1}), pt({3, 3, 3}), pt({2, 2, 2})});
  CHECK(seg.affine_dim() == 1);
  CHECK(seg.vertices() == std::vector<QPoint>{pt({0, 0, 0}), pt({3, 3, 3})});
  CHECK(euclidean_volume(seg) == BigRational(0));
  const Polytope point = convex_hull({pt({4, 5})});
  CHECK(point.affine_dim() == 0);
  const Polytope tri = convex_hull({pt({0, 0, 7}), pt({1, 0, 7}), pt({0, 1, 7}), pt({1, 1, 7}) /* square in a plane */});
  CHECK(tri.affine_dim() == 2);
  CHECK(tri.vertices().size() == 4);
  CHECK_THROWS_AS(convex_hull({}), std::invalid_argument);
  CHECK_THROWS_AS(convex_hull({pt({0}), pt({0, 1})}), std::invalid_argument);
}

TEST_CASE("cube with face and edge midpoints") {
  std::vector<QPoint> pts;
  for (long x = 0; x <= 2; ++x)
    for (long y = 0; y <= 2; ++y)
      for (long z = 0; z <= 2; ++z) pts.push_back(pt({x, y, z}));
  const Polytope cube = convex_hull(pts);
  CHECK(cube.vertices().size() == 8);
  CHECK(cube.facets().size() == 6);
  CHECK(euclidean_volume(cube) == BigRational(8));
}

TEST_CASE("faces by inner normal") {
  const Polytope p = convex_hull({pt({18, 0, 2}), pt({0, 9, 5}), pt({0, 1, 0})});
  const Face f = face(p, pt({0, 0, 1}));
  CHECK(f.vertices == std::vector<QPoint>{pt({0, 1, 0})});
  CHECK(face(p, pt({0, 0, 0})).vertices.size() == 3);
  CHECK_THROWS_AS(face(p, pt({1, 0})), std::invalid_argument);
}

TEST_CASE("minkowski sums and translations") {
  const Polytope a = convex_hull({pt({0, 0}), pt({1, 0})});
  const Polytope b = convex_hull({pt({0, 0}), pt({0, 1})});
  const Polytope s = minkowski_sum(a, b);
  CHECK(s.vertices().size() == 4);
  CHECK(euclidean_volume(s) == BigRational(1));
  CHECK(translate(a, pt({2, 3})).vertices().front() == pt({2, 3}));
  CHECK(project_last(convex_hull({pt({0, 0, 5}), pt({1, 2, 0})})).vertices() ==
        std::vector<QPoint>{pt({0, 0}), pt({1, 2})});
}

TEST_CASE("mixed volume anchors") {
  CHECK(mixed_volume(std::vector<Polytope>(3, standard_simplex(3))) == BigRational(1));
  const std::vector<Polytope> tri = {convex_hull({pt({18, 0}), pt({0, 9}), pt({0, 1})}),
                                     convex_hull({pt({0, 18}), pt({9, 0}), pt({1, 0})})};
  CHECK(mixed_volume(tri) == BigRational(323));
  // A point summand contributes nothing.
  const std::vector<Polytope> with_point = {convex_hull({pt({1, 1})}), tri[1]};
  CHECK(mixed_volume(with_point) == BigRational(0));
  // Parallel segments.
  const std::vector<Polytope> parallel = {convex_hull({pt({0, 0}), pt({1, 1})}), convex_hull({pt({0, 0}), pt({2, 2})})};
  CHECK(mixed_volume(parallel) == BigRational(0));
  CHECK_THROWS_AS(mixed_volume(std::vector<Polytope>{tri[0]}), std::invalid_argument);
}

TEST_CASE("mixed volume is multilinear under dilation") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto pts = random_points(rng, 2, 4, -3, 3);
    const Polytope p = convex_hull(pts);
    std::vector<QPoint> doubled;
    for (const auto& x : pts) doubled.push_back(scaled(x, BigRational(2)));
    const Polytope q = convex_hull(random_points(rng, 2, 4, -3, 3));
    const std::vector<Polytope> base = {p, q}, dilated = {convex_hull(doubled), q};
    CHECK(mixed_volume(dilated) == BigRational(2) * mixed_volume(base));
  }
}

TEST_CASE("lower cells of the worked example") {
  const std::vector<Polytope> lifted = {convex_hull({pt({18, 0, 2}), pt({0, 9, 5}), pt({0, 1, 0})}),
                                        convex_hull({pt({0, 18, 0}), pt({9, 0, 1}), pt({1, 0, 6})})};
  const auto cells = lower_cells(lifted);
  CHECK(cells.size() == 4);
  BigRational total(0);
  for (const auto& c : cells) {
    std::vector<Polytope> faces;
    for (const auto& f : c.faces) {
      std::vector<QPoint> proj;
      for (const auto& x : f) proj.push_back(project_last(x));
      faces.push_back(convex_hull(proj));
    }
    total += mixed_volume(faces);
  }
  CHECK(total == BigRational(323));
}

TEST_CASE("lower cells with a flat lift form the trivial subdivision") {
  const std::vector<Polytope> lifted = {convex_hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0})}),
                                        convex_hull({pt({0, 0, 0}), pt({2, 0, 0}), pt({0, 2, 0})})};
  const auto cells = lower_cells(lifted);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].gradient == pt({0, 0}));
  CHECK(cells[0].faces[0].size() == 3);
}

TEST_CASE("lower cells are empty when the projected sum is degenerate") {
  const std::vector<Polytope> lifted = {convex_hull({pt({0, 0, 0}), pt({1, 1, 3})}),
                                        convex_hull({pt({0, 0, 1}), pt({2, 2, 0})})};
  CHECK(lower_cells(lifted).empty());
}

TEST_CASE("faces of a given dimension") {
  const std::vector<QPoint> square = {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})};
  CHECK(faces_of_dimension(square, 1).size() == 4);
  CHECK(faces_of_dimension(square, 0).size() == 4);
  CHECK(faces_of_dimension(square, 2).size() == 1);
  CHECK(faces_of_dimension(square, 3).empty());
}

TEST_CASE("edge tuple search reproduces the candidate accounting") {
  const std::vector<Polytope> lifted = {convex_hull({pt({18, 0, 2}), pt({0, 9, 5}), pt({0, 1, 0})}),
                                        convex_hull({pt({0, 18, 0}), pt({9, 0, 1}), pt({1, 0, 6})})};
  CHECK(lower_edges(lifted[0]).size() == 3);
  const EdgeTupleSearch s = edge_tuple_search(lifted);
  CHECK(s.candidates == 9);
  REQUIRE(s.normals.size() == 2);
  CHECK(s.normals[0] == QPoint{BigRational::parse("-1/9"), BigRational(0)});
  CHECK(s.normals[1] == QPoint{BigRational::parse("5/8"), BigRational::parse("53/4")});
}

TEST_CASE("mixed subdivision identity on random lifts") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 2;
    std::vector<Polytope> lifted, projected;
    for (std::size_t i = 0; i < n; ++i) {
      auto pts = random_points(rng, n + 1, 5, 0, 3);
      if (trial % 3 == 0) {
        for (auto& x : pts) x.back() = BigRational(0);  // flat: maximally degenerate
      }
      lifted.push_back(convex_hull(pts));
      projected.push_back(project_last(lifted.back()));
    }
    BigRational total(0);
    for (const auto& c : lower_cells(lifted)) {
      std::vector<Polytope> faces;
      for (const auto& f : c.faces) {
        std::vector<QPoint> proj;
        for (const auto& x : f) proj.push_back(project_last(x));
        faces.push_back(convex_hull(proj));
      }
      total += mixed_volume(faces);
    }
    CHECK(total == mixed_volume(projected));
  }
}
