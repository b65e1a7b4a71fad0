#pragma once

#include <span>
#include <vector>

#include "vandervolt/vandermonde.hpp"

namespace vandervolt {

/// Simplex mesh (triangles for d=2, tetrahedra for d=3) covering the convex
/// hull of a node set. Vertices include every hull extreme point; cells
/// partition the hull up to floating-point accuracy.
struct ConvexHullMesh {
  int dimension = 0;
  std::vector<double> vertices;         // row-major, vertex_count() * dimension
  std::vector<std::vector<int>> cells;  // d+1 vertex indices per simplex
  std::vector<double> cell_measures;    // area (d=2) / volume (d=3) per cell

  int vertex_count() const {
    return dimension == 0 ? 0 : static_cast<int>(vertices.size()) / dimension;
  }

  std::span<const double> vertex(int i) const {
    return {vertices.data() + static_cast<std::size_t>(i) * dimension,
            static_cast<std::size_t>(dimension)};
  }

  double total_measure() const;
  double max_cell_measure() const;
};

/// Hull (monotone chain for d=2, quickhull for d=3), fan decomposition from
/// the hull-vertex centroid, then uniform midpoint subdivision until every
/// cell measure is <= max_cell_measure. Vertices deduplicated to 1e-12.
ConvexHullMesh convex_hull_mesh(const NodeSet& nodes, double max_cell_measure);

}  // namespace vandervolt
