#include "vandervolt/hull_mesh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>

#include "vandervolt/errors.hpp"

namespace vandervolt {

double ConvexHullMesh::total_measure() const {
  return std::accumulate(cell_measures.begin(), cell_measures.end(), 0.0);
}

double ConvexHullMesh::max_cell_measure() const {
  double m = 0.0;
  for (double v : cell_measures) m = std::max(m, v);
  return m;
}

namespace {

constexpr double kDegenerateMeasure = 1e-12;

/// Vertex store with 1e-12 coordinate quantization for deduplication.
class VertexStore {
public:
  explicit VertexStore(int dimension) : dimension_(dimension) {}

  int get_or_add(std::span<const double> p) {
    std::vector<long long> key(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) key[i] = std::llround(p[i] * 1e12);
    auto [it, inserted] = index_.try_emplace(std::move(key), next_);
    if (inserted) {
      coords_.insert(coords_.end(), p.begin(), p.end());
      ++next_;
    }
    return it->second;
  }

  int midpoint(int a, int b) {
    const auto key = std::minmax(a, b);
    auto it = midpoints_.find(key);
    if (it != midpoints_.end()) return it->second;
    std::vector<double> m(static_cast<std::size_t>(dimension_));
    for (int c = 0; c < dimension_; ++c)
      m[static_cast<std::size_t>(c)] = 0.5 * (coord(a, c) + coord(b, c));
    const int idx = get_or_add(m);
    midpoints_.emplace(key, idx);
    return idx;
  }

  double coord(int v, int c) const {
    return coords_[static_cast<std::size_t>(v) * dimension_ + c];
  }

  std::span<const double> point(int v) const {
    return {coords_.data() + static_cast<std::size_t>(v) * dimension_,
            static_cast<std::size_t>(dimension_)};
  }

  std::vector<double> take_coords() { return std::move(coords_); }

private:
  int dimension_;
  int next_ = 0;
  std::vector<double> coords_;
  std::map<std::vector<long long>, int> index_;
  std::map<std::pair<int, int>, int> midpoints_;
};

struct Vec2 {
  double x, y;
};

double cross2(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Andrew monotone chain; returns hull point order (CCW, extreme points only).
std::vector<int> monotone_chain(const std::vector<Vec2>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (pts[static_cast<std::size_t>(a)].x != pts[static_cast<std::size_t>(b)].x)
      return pts[static_cast<std::size_t>(a)].x < pts[static_cast<std::size_t>(b)].x;
    return pts[static_cast<std::size_t>(a)].y < pts[static_cast<std::size_t>(b)].y;
  });

  std::vector<int> hull;
  auto build = [&](auto begin, auto end) {
    const std::size_t base = hull.size();
    for (auto it = begin; it != end; ++it) {
      while (hull.size() >= base + 2 &&
             cross2(pts[static_cast<std::size_t>(hull[hull.size() - 2])],
                    pts[static_cast<std::size_t>(hull[hull.size() - 1])],
                    pts[static_cast<std::size_t>(*it)]) <= 0.0)
        hull.pop_back();
      hull.push_back(*it);
    }
    hull.pop_back();  // endpoint repeats as the next chain's start
  };
  build(order.begin(), order.end());
  build(order.rbegin(), order.rend());
  return hull;
}

double triangle_area(std::span<const double> a, std::span<const double> b,
                     std::span<const double> c) {
  return 0.5 * std::fabs((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]));
}

double tet_volume(std::span<const double> a, std::span<const double> b,
                  std::span<const double> c, std::span<const double> d) {
  const double u[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
  const double v[3] = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
  const double w[3] = {d[0] - a[0], d[1] - a[1], d[2] - a[2]};
  const double det = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
                     u[2] * (v[0] * w[1] - v[1] * w[0]);
  return std::fabs(det) / 6.0;
}

// ---- 3D quickhull over small point sets ------------------------------------

struct Face {
  std::array<int, 3> v;  // CCW seen from outside
};

double signed_dist(const Face& f, const std::vector<std::array<double, 3>>& p, int q) {
  const auto& a = p[static_cast<std::size_t>(f.v[0])];
  const auto& b = p[static_cast<std::size_t>(f.v[1])];
  const auto& c = p[static_cast<std::size_t>(f.v[2])];
  const double ab[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
  const double ac[3] = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
  const double nx = ab[1] * ac[2] - ab[2] * ac[1];
  const double ny = ab[2] * ac[0] - ab[0] * ac[2];
  const double nz = ab[0] * ac[1] - ab[1] * ac[0];
  const double norm = std::sqrt(nx * nx + ny * ny + nz * nz);
  const auto& x = p[static_cast<std::size_t>(q)];
  return ((x[0] - a[0]) * nx + (x[1] - a[1]) * ny + (x[2] - a[2]) * nz) / std::max(norm, 1e-300);
}

std::vector<Face> quickhull3(const std::vector<std::array<double, 3>>& p) {
  const int n = static_cast<int>(p.size());
  if (n < 4) throw DegenerateHullError("need at least 4 points to span a 3D hull");

  double lo[3] = {p[0][0], p[0][1], p[0][2]};
  double hi[3] = {p[0][0], p[0][1], p[0][2]};
  for (const auto& q : p)
    for (int c = 0; c < 3; ++c) {
      lo[c] = std::min(lo[c], q[c]);
      hi[c] = std::max(hi[c], q[c]);
    }
  const double diag = std::sqrt((hi[0] - lo[0]) * (hi[0] - lo[0]) +
                                (hi[1] - lo[1]) * (hi[1] - lo[1]) +
                                (hi[2] - lo[2]) * (hi[2] - lo[2]));
  const double eps = 1e-12 * std::max(1.0, diag);

  // Initial simplex: extreme pair, then farthest from the line, then from the plane.
  int i0 = 0;
  for (int i = 1; i < n; ++i)
    if (p[static_cast<std::size_t>(i)] < p[static_cast<std::size_t>(i0)]) i0 = i;
  int i1 = -1;
  double best = eps;
  for (int i = 0; i < n; ++i) {
    double d2 = 0.0;
    for (int c = 0; c < 3; ++c) {
      const double t = p[static_cast<std::size_t>(i)][c] - p[static_cast<std::size_t>(i0)][c];
      d2 += t * t;
    }
    if (std::sqrt(d2) > best) {
      best = std::sqrt(d2);
      i1 = i;
    }
  }
  if (i1 < 0) throw DegenerateHullError("all points coincide");

  int i2 = -1;
  best = eps;
  const auto& a = p[static_cast<std::size_t>(i0)];
  const auto& b = p[static_cast<std::size_t>(i1)];
  const double ab[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
  const double abn = std::sqrt(ab[0] * ab[0] + ab[1] * ab[1] + ab[2] * ab[2]);
  for (int i = 0; i < n; ++i) {
    const auto& x = p[static_cast<std::size_t>(i)];
    const double ax[3] = {x[0] - a[0], x[1] - a[1], x[2] - a[2]};
    const double cx = ab[1] * ax[2] - ab[2] * ax[1];
    const double cy = ab[2] * ax[0] - ab[0] * ax[2];
    const double cz = ab[0] * ax[1] - ab[1] * ax[0];
    const double dist = std::sqrt(cx * cx + cy * cy + cz * cz) / abn;
    if (dist > best) {
      best = dist;
      i2 = i;
    }
  }
  if (i2 < 0) throw DegenerateHullError("points are collinear");

  Face base{{i0, i1, i2}};
  int i3 = -1;
  best = eps;
  for (int i = 0; i < n; ++i) {
    const double dist = std::fabs(signed_dist(base, p, i));
    if (dist > best) {
      best = dist;
      i3 = i;
    }
  }
  if (i3 < 0) throw DegenerateHullError("points are coplanar");
  if (signed_dist(base, p, i3) > 0.0) std::swap(base.v[1], base.v[2]);

  std::vector<Face> faces = {base,
                             {{base.v[0], base.v[2], i3}},
                             {{base.v[2], base.v[1], i3}},
                             {{base.v[1], base.v[0], i3}}};

  // Incremental expansion: repeatedly lift the point farthest outside any face.
  while (true) {
    int far_point = -1, far_face = -1;
    double far_dist = eps;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      for (int i = 0; i < n; ++i) {
        const double d = signed_dist(faces[f], p, i);
        if (d > far_dist) {
          far_dist = d;
          far_point = i;
          far_face = static_cast<int>(f);
        }
      }
    }
    if (far_point < 0) break;
    (void)far_face;

    std::vector<Face> keep;
    std::map<std::pair<int, int>, int> edge_count;
    std::vector<std::pair<int, int>> horizon;
    for (const Face& f : faces) {
      if (signed_dist(f, p, far_point) > eps) {
        for (int e = 0; e < 3; ++e) {
          const int u = f.v[static_cast<std::size_t>(e)];
          const int v = f.v[static_cast<std::size_t>((e + 1) % 3)];
          auto twin = edge_count.find({v, u});
          if (twin != edge_count.end()) {
            edge_count.erase(twin);
          } else {
            edge_count.emplace(std::make_pair(u, v), 1);
          }
        }
      } else {
        keep.push_back(f);
      }
    }
    for (const auto& [edge, cnt] : edge_count) horizon.push_back(edge);
    // Horizon edges keep the visible faces' winding, so each (u,v,p) is outward.
    for (const auto& [u, v] : horizon) keep.push_back(Face{{u, v, far_point}});
    faces = std::move(keep);
  }
  return faces;
}

}  // namespace

ConvexHullMesh convex_hull_mesh(const NodeSet& nodes, double max_cell_measure) {
  const int d = nodes.dimension();
  if (d != 2 && d != 3)
    throw UnsupportedDimensionError("hull meshing supports d in {2,3}");
  if (!(max_cell_measure > 0.0))
    throw DimensionError("max_cell_measure must be positive");

  VertexStore store(d);
  std::vector<std::vector<int>> cells;

  if (d == 2) {
    std::vector<Vec2> pts(static_cast<std::size_t>(nodes.size()));
    for (int i = 0; i < nodes.size(); ++i) {
      auto p = nodes.point(i);
      pts[static_cast<std::size_t>(i)] = {p[0], p[1]};
    }
    const auto hull = monotone_chain(pts);
    if (hull.size() < 3) throw DegenerateHullError("hull has no interior (fewer than 3 extreme points)");

    double area = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const auto& u = pts[static_cast<std::size_t>(hull[i])];
      const auto& v = pts[static_cast<std::size_t>(hull[(i + 1) % hull.size()])];
      area += u.x * v.y - v.x * u.y;
    }
    area *= 0.5;
    if (area <= kDegenerateMeasure) throw DegenerateHullError("hull measure is effectively zero");

    double cx = 0.0, cy = 0.0;
    for (int h : hull) {
      cx += pts[static_cast<std::size_t>(h)].x;
      cy += pts[static_cast<std::size_t>(h)].y;
    }
    cx /= static_cast<double>(hull.size());
    cy /= static_cast<double>(hull.size());

    const double centroid[2] = {cx, cy};
    const int c = store.get_or_add(centroid);
    std::vector<int> ring;
    for (int h : hull) {
      const double q[2] = {pts[static_cast<std::size_t>(h)].x, pts[static_cast<std::size_t>(h)].y};
      ring.push_back(store.get_or_add(q));
    }
    for (std::size_t i = 0; i < ring.size(); ++i)
      cells.push_back({c, ring[i], ring[(i + 1) % ring.size()]});
  } else {
    std::vector<std::array<double, 3>> pts(static_cast<std::size_t>(nodes.size()));
    for (int i = 0; i < nodes.size(); ++i) {
      auto p = nodes.point(i);
      pts[static_cast<std::size_t>(i)] = {p[0], p[1], p[2]};
    }
    const auto faces = quickhull3(pts);

    std::vector<int> hull_points;
    for (const Face& f : faces)
      for (int v : f.v) hull_points.push_back(v);
    std::sort(hull_points.begin(), hull_points.end());
    hull_points.erase(std::unique(hull_points.begin(), hull_points.end()), hull_points.end());

    double centroid[3] = {0.0, 0.0, 0.0};
    for (int h : hull_points)
      for (int cc = 0; cc < 3; ++cc) centroid[cc] += pts[static_cast<std::size_t>(h)][cc];
    for (int cc = 0; cc < 3; ++cc) centroid[cc] /= static_cast<double>(hull_points.size());

    const int c = store.get_or_add(centroid);
    double volume = 0.0;
    for (const Face& f : faces) {
      std::vector<int> cell = {c};
      for (int v : f.v) cell.push_back(store.get_or_add(pts[static_cast<std::size_t>(v)]));
      volume += tet_volume(store.point(cell[0]), store.point(cell[1]), store.point(cell[2]),
                           store.point(cell[3]));
      cells.push_back(std::move(cell));
    }
    if (volume <= kDegenerateMeasure) throw DegenerateHullError("hull measure is effectively zero");
  }

  auto measure_of = [&](const std::vector<int>& cell) {
    return d == 2 ? triangle_area(store.point(cell[0]), store.point(cell[1]), store.point(cell[2]))
                  : tet_volume(store.point(cell[0]), store.point(cell[1]), store.point(cell[2]),
                               store.point(cell[3]));
  };

  auto largest = [&]() {
    double m = 0.0;
    for (const auto& cell : cells) m = std::max(m, measure_of(cell));
    return m;
  };

  while (largest() > max_cell_measure) {
    std::vector<std::vector<int>> next;
    next.reserve(cells.size() * (d == 2 ? 4 : 8));
    for (const auto& cell : cells) {
      if (d == 2) {
        const int v0 = cell[0], v1 = cell[1], v2 = cell[2];
        const int m01 = store.midpoint(v0, v1);
        const int m02 = store.midpoint(v0, v2);
        const int m12 = store.midpoint(v1, v2);
        next.push_back({v0, m01, m02});
        next.push_back({m01, v1, m12});
        next.push_back({m02, m12, v2});
        next.push_back({m01, m12, m02});
      } else {
        const int v0 = cell[0], v1 = cell[1], v2 = cell[2], v3 = cell[3];
        const int m01 = store.midpoint(v0, v1);
        const int m02 = store.midpoint(v0, v2);
        const int m03 = store.midpoint(v0, v3);
        const int m12 = store.midpoint(v1, v2);
        const int m13 = store.midpoint(v1, v3);
        const int m23 = store.midpoint(v2, v3);
        // Bey's red refinement: four corner tets plus the octahedron split
        // along the m02-m13 diagonal.
        next.push_back({v0, m01, m02, m03});
        next.push_back({m01, v1, m12, m13});
        next.push_back({m02, m12, v2, m23});
        next.push_back({m03, m13, m23, v3});
        next.push_back({m01, m02, m03, m13});
        next.push_back({m01, m02, m12, m13});
        next.push_back({m02, m03, m13, m23});
        next.push_back({m02, m12, m13, m23});
      }
    }
    cells = std::move(next);
  }

  ConvexHullMesh mesh;
  mesh.dimension = d;
  mesh.cell_measures.reserve(cells.size());
  for (const auto& cell : cells) mesh.cell_measures.push_back(measure_of(cell));
  mesh.cells = std::move(cells);
  mesh.vertices = store.take_coords();
  return mesh;
}

}  // namespace vandervolt
