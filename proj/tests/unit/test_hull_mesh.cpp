#include <doctest.h>

#include <array>
#include <cmath>

#include "support/oracles.hpp"
#include "vandervolt/errors.hpp"
#include "vandervolt/hull_mesh.hpp"
#include "vandervolt/prng.hpp"

using namespace vandervolt;

namespace {

bool vertex_present(const ConvexHullMesh& mesh, std::span<const double> p) {
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    double dist = 0.0;
    const auto q = mesh.vertex(v);
    for (std::size_t c = 0; c < p.size(); ++c) dist = std::max(dist, std::fabs(p[c] - q[c]));
    if (dist <= 1e-12) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("unit square mesh conserves area and refines below the bound") {
  const NodeSet corners(2, {0, 0, 1, 0, 0, 1, 1, 1});
  const auto mesh = convex_hull_mesh(corners, 1e-2);
  CHECK(mesh.total_measure() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(mesh.cells.size() >= 100);
  CHECK(mesh.max_cell_measure() <= 1e-2);
  for (int i = 0; i < corners.size(); ++i) CHECK(vertex_present(mesh, corners.point(i)));
}

TEST_CASE("cube mesh conserves volume and refines below the bound") {
  std::vector<double> coords;
  for (int mask = 0; mask < 8; ++mask)
    for (int c = 0; c < 3; ++c) coords.push_back((mask >> c) & 1 ? 1.0 : -1.0);
  const NodeSet corners(3, std::move(coords));
  const auto mesh = convex_hull_mesh(corners, 1e-2);
  CHECK(mesh.total_measure() == doctest::Approx(8.0).epsilon(1e-9));
  CHECK(mesh.cells.size() >= 800);
  CHECK(mesh.max_cell_measure() <= 1e-2);
  for (int i = 0; i < corners.size(); ++i) CHECK(vertex_present(mesh, corners.point(i)));
}

TEST_CASE("every extreme point of a random planar set becomes a mesh vertex") {
  Xorshift64Star rng(501);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> coords(10);
    for (double& c : coords) c = rng.next_double();
    const NodeSet nodes(2, coords);
    const auto mesh = convex_hull_mesh(nodes, 1e-2);

    std::vector<std::array<double, 2>> pts(5);
    for (int i = 0; i < 5; ++i) pts[static_cast<std::size_t>(i)] = {coords[2 * static_cast<std::size_t>(i)], coords[2 * static_cast<std::size_t>(i) + 1]};
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!oracle::inside_hull_of_others_2d(pts, i))
        CHECK(vertex_present(mesh, nodes.point(static_cast<int>(i))));
    }
  }
}

TEST_CASE("random tetrahedral hulls conserve measure") {
  Xorshift64Star rng(502);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> coords(18);
    for (double& c : coords) c = rng.next_double();
    const NodeSet nodes(3, coords);
    const auto mesh = convex_hull_mesh(nodes, 1e-2);
    CHECK(mesh.max_cell_measure() <= 1e-2);
    CHECK(mesh.total_measure() > 0.0);
    // Hull volume never exceeds the unit cube that contains the points.
    CHECK(mesh.total_measure() <= 1.0);
  }
}

TEST_CASE("degenerate hulls are rejected") {
  CHECK_THROWS_AS(convex_hull_mesh(NodeSet(2, {0, 0, 0.5, 0.5, 1, 1}), 1e-2),
                  DegenerateHullError);
  CHECK_THROWS_AS(convex_hull_mesh(NodeSet(3, {0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 0}), 1e-2),
                  DegenerateHullError);
}

TEST_CASE("unsupported dimensions are rejected") {
  CHECK_THROWS_AS(convex_hull_mesh(NodeSet(1, {0.0, 1.0}), 1e-2), UnsupportedDimensionError);
  CHECK_THROWS_AS(convex_hull_mesh(NodeSet(4, {0, 0, 0, 0, 1, 1, 1, 1}), 1e-2),
                  UnsupportedDimensionError);
}

TEST_CASE("nodes interior to the hull do not change the covered region") {
  const NodeSet with_interior(2, {0, 0, 1, 0, 0, 1, 1, 1, 0.5, 0.5, 0.25, 0.75});
  const auto mesh = convex_hull_mesh(with_interior, 1e-2);
  CHECK(mesh.total_measure() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("halving the cell bound only refines") {
  const NodeSet corners(2, {0, 0, 1, 0, 0, 1, 1, 1});
  const auto coarse = convex_hull_mesh(corners, 4e-2);
  const auto fine = convex_hull_mesh(corners, 2e-2);
  CHECK(fine.cells.size() >= coarse.cells.size());
  // Subdivision keeps all previous vertices.
  for (int v = 0; v < coarse.vertex_count(); ++v)
    CHECK(vertex_present(fine, coarse.vertex(v)));
}
