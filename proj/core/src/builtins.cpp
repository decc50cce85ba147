#include "genmap3/builtins.hpp"

#include <algorithm>
#include <string>

#include "genmap3/error.hpp"

namespace genmap3 {

namespace {

// Minimal 11-vertex RP^3, obtained by bistellar moves from the antipodal
// quotient of the barycentric subdivision of the 4-cross-polytope boundary.
constexpr std::array<Facet, 40> kRp3Facets{{
    {0, 1, 3, 8},  {0, 1, 3, 9},  {0, 1, 7, 8},  {0, 1, 7, 9},  {0, 2, 3, 6},
    {0, 2, 3, 8},  {0, 2, 5, 8},  {0, 2, 5, 10}, {0, 2, 6, 10}, {0, 3, 6, 9},
    {0, 5, 7, 8},  {0, 5, 7, 10}, {0, 6, 9, 10}, {0, 7, 9, 10}, {1, 2, 5, 9},
    {1, 2, 5, 10}, {1, 2, 6, 7},  {1, 2, 6, 10}, {1, 2, 7, 9},  {1, 3, 5, 9},
    {1, 3, 5, 10}, {1, 3, 8, 10}, {1, 6, 7, 8},  {1, 6, 8, 10}, {2, 3, 4, 7},
    {2, 3, 4, 8},  {2, 3, 6, 7},  {2, 4, 7, 9},  {2, 4, 8, 9},  {2, 5, 8, 9},
    {3, 4, 7, 10}, {3, 4, 8, 10}, {3, 5, 6, 7},  {3, 5, 6, 9},  {3, 5, 7, 10},
    {4, 7, 9, 10}, {4, 8, 9, 10}, {5, 6, 7, 8},  {5, 6, 8, 9},  {6, 8, 9, 10},
}};

// 6-vertex RP^2 (hemi-icosahedron).
constexpr std::array<std::array<Vertex, 3>, 10> kRp2Triangles{{
    {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
    {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5},
}};

constexpr std::array<std::array<Vertex, 3>, 4> kS2Triangles{{
    {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
}};

int wrap(int v) { return ((v % torus3::kSize) + torus3::kSize) % torus3::kSize; }

std::vector<Facet> sphere_facets() {
  std::vector<Facet> out;
  for (Vertex omit = 0; omit < 5; ++omit) {
    Facet f{};
    int w = 0;
    for (Vertex v = 0; v < 5; ++v) {
      if (v != omit) f[w++] = v;
    }
    out.push_back(f);
  }
  return out;
}

std::vector<Facet> torus_facets() {
  std::vector<Facet> out;
  std::array<int, 3> axes{0, 1, 2};
  for (int i = 0; i < torus3::kSize; ++i) {
    for (int j = 0; j < torus3::kSize; ++j) {
      for (int k = 0; k < torus3::kSize; ++k) {
        std::sort(axes.begin(), axes.end());
        do {
          std::array<int, 3> p{i, j, k};
          Facet f{};
          f[0] = torus3::vertex(p[0], p[1], p[2]);
          for (int step = 0; step < 3; ++step) {
            ++p[axes[step]];
            f[step + 1] = torus3::vertex(p[0], p[1], p[2]);
          }
          out.push_back(f);
        } while (std::next_permutation(axes.begin(), axes.end()));
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string_view>& builtin_names() {
  static const std::vector<std::string_view> names{"S3", "T3", "RP3", "S2xS1", "RP2xS1"};
  return names;
}

std::vector<Facet> circle_product(const std::vector<std::array<Vertex, 3>>& surface_triangles) {
  static constexpr std::array<std::array<Vertex, 2>, 3> kCircle{{{0, 1}, {1, 2}, {0, 2}}};
  auto label = [](Vertex a, Vertex b) { return 3 * a + b; };
  std::vector<Facet> out;
  for (auto tri : surface_triangles) {
    std::sort(tri.begin(), tri.end());
    for (const auto& [b0, b1] : kCircle) {
      // monotone lattice paths from (0, b0) to (2, b1) in the 3x2 grid
      for (int rise = 0; rise < 3; ++rise) {
        Facet f{};
        int w = 0;
        for (int a = 0; a <= rise; ++a) f[w++] = label(tri[a], b0);
        for (int a = rise; a < 3; ++a) f[w++] = label(tri[a], b1);
        out.push_back(f);
      }
    }
  }
  return out;
}

std::vector<Facet> builtin_facets(std::string_view name) {
  if (name == "S3") return sphere_facets();
  if (name == "T3") return torus_facets();
  if (name == "RP3") return {kRp3Facets.begin(), kRp3Facets.end()};
  if (name == "S2xS1") return circle_product({kS2Triangles.begin(), kS2Triangles.end()});
  if (name == "RP2xS1") return circle_product({kRp2Triangles.begin(), kRp2Triangles.end()});
  std::string known;
  for (auto n : builtin_names()) known += (known.empty() ? "" : ", ") + std::string(n);
  throw Error(ErrorCode::UnknownBuiltin,
              "'" + std::string(name) + "' (known: " + known + ")");
}

ComplexPtr builtin(std::string_view name) { return make_complex(builtin_facets(name)); }

namespace torus3 {

Vertex vertex(int i, int j, int k) { return wrap(i) + kSize * wrap(j) + kSize * kSize * wrap(k); }

std::vector<std::vector<Vertex>> coordinate_torus(int axis, int level) {
  const auto facets = torus_facets();
  auto coord = [](Vertex v, int a) {
    for (int i = 0; i < a; ++i) v /= kSize;
    return v % kSize;
  };
  std::vector<std::vector<Vertex>> tris;
  for (const Facet& f : facets) {
    std::vector<Vertex> on;
    for (Vertex v : f) {
      if (coord(v, axis) == wrap(level)) on.push_back(v);
    }
    if (on.size() == 3) {
      std::sort(on.begin(), on.end());
      tris.push_back(on);
    }
  }
  std::sort(tris.begin(), tris.end());
  tris.erase(std::unique(tris.begin(), tris.end()), tris.end());
  return tris;
}

std::vector<std::vector<Vertex>> coordinate_circle(int axis, int a, int b) {
  std::vector<std::vector<Vertex>> edges;
  for (int t = 0; t < kSize; ++t) {
    std::array<int, 3> p{}, q{};
    int w = 0;
    for (int ax = 0; ax < 3; ++ax) {
      if (ax == axis) {
        p[ax] = t;
        q[ax] = t + 1;
      } else {
        p[ax] = q[ax] = (w++ == 0) ? a : b;
      }
    }
    std::vector<Vertex> e{vertex(p[0], p[1], p[2]), vertex(q[0], q[1], q[2])};
    std::sort(e.begin(), e.end());
    edges.push_back(e);
  }
  return edges;
}

std::vector<std::pair<Vertex, Vertex>> collapse_axis(int axis) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (int k = 0; k < kSize; ++k) {
    for (int j = 0; j < kSize; ++j) {
      for (int i = 0; i < kSize; ++i) {
        std::array<int, 3> p{i, j, k};
        std::array<int, 3> q = p;
        q[axis] = 0;
        out.emplace_back(vertex(p[0], p[1], p[2]), vertex(q[0], q[1], q[2]));
      }
    }
  }
  return out;
}

}  // namespace torus3

}  // namespace genmap3
