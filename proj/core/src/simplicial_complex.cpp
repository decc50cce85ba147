#include "genmap3/simplicial_complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "genmap3/error.hpp"

namespace genmap3 {

namespace {

void check_dim(int k, int lo, int hi) {
  if (k < lo || k > hi) {
    throw Error(ErrorCode::DimensionMismatch, "simplex dimension " + std::to_string(k) +
                                                  " outside [" + std::to_string(lo) + ", " +
                                                  std::to_string(hi) + "]");
  }
}

std::string tuple_string(std::span<const Vertex> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

// Disjoint-set forest over dense indices.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

SimplicialComplex3 SimplicialComplex3::build(std::span<const Facet> facets) {
  if (facets.empty()) throw Error(ErrorCode::EmptyFacetList, "no facets given");

  SimplicialComplex3 c;
  c.facets_.reserve(facets.size());
  for (Facet f : facets) {
    for (Vertex v : f) {
      if (v < 0) {
        throw Error(ErrorCode::NegativeLabel, "vertex label " + std::to_string(v) + " in facet " +
                                                  tuple_string(f));
      }
    }
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw Error(ErrorCode::RepeatedVertexInFacet, "facet " + tuple_string(f));
    }
    c.facets_.push_back(f);
  }
  std::sort(c.facets_.begin(), c.facets_.end());
  c.facets_.erase(std::unique(c.facets_.begin(), c.facets_.end()), c.facets_.end());

  // Enumerate every face of every facet, then sort and deduplicate per
  // dimension. Sorting tuples of fixed width through an index permutation.
  for (int k = 0; k <= kDim; ++k) {
    const std::size_t width = static_cast<std::size_t>(k) + 1;
    std::vector<std::vector<Vertex>> tuples;
    for (const Facet& f : c.facets_) {
      // subsets of size k+1 of the 4 facet vertices, as bitmasks
      for (unsigned mask = 0; mask < 16; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != width) continue;
        std::vector<Vertex> t;
        for (int j = 0; j < 4; ++j) {
          if (mask & (1U << j)) t.push_back(f[j]);
        }
        tuples.push_back(std::move(t));
      }
    }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    auto& flat = c.simplices_[k];
    flat.reserve(tuples.size() * width);
    for (const auto& t : tuples) flat.insert(flat.end(), t.begin(), t.end());
  }

  for (int k = 1; k <= kDim; ++k) {
    const std::size_t n = c.count(k);
    auto& faces = c.faces_[k];
    faces.reserve(n * (k + 1));
    std::vector<Vertex> face(k);
    for (Index i = 0; i < n; ++i) {
      auto s = c.simplex(k, i);
      for (int omit = 0; omit <= k; ++omit) {
        std::size_t w = 0;
        for (int j = 0; j <= k; ++j) {
          if (j != omit) face[w++] = s[j];
        }
        faces.push_back(*c.find(face));
      }
    }
  }

  for (int k = 0; k < kDim; ++k) {
    const std::size_t n = c.count(k);
    const std::size_t m = c.count(k + 1);
    auto& offsets = c.coface_offsets_[k];
    offsets.assign(n + 1, 0);
    for (Index t = 0; t < m; ++t) {
      for (Index f : c.faces(k + 1, t)) ++offsets[f + 1];
    }
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    auto& cof = c.cofaces_[k];
    cof.assign(offsets.back(), 0);
    std::vector<Index> fill(offsets.begin(), offsets.end() - 1);
    for (Index t = 0; t < m; ++t) {
      for (Index f : c.faces(k + 1, t)) cof[fill[f]++] = t;
    }
  }
  return c;
}

std::size_t SimplicialComplex3::count(int k) const {
  check_dim(k, 0, kDim);
  return simplices_[k].size() / (static_cast<std::size_t>(k) + 1);
}

std::span<const Vertex> SimplicialComplex3::simplex(int k, Index i) const {
  check_dim(k, 0, kDim);
  const std::size_t w = static_cast<std::size_t>(k) + 1;
  return std::span<const Vertex>(simplices_[k]).subspan(i * w, w);
}

std::span<const Index> SimplicialComplex3::faces(int k, Index i) const {
  check_dim(k, 1, kDim);
  const std::size_t w = static_cast<std::size_t>(k) + 1;
  return std::span<const Index>(faces_[k]).subspan(i * w, w);
}

std::span<const Index> SimplicialComplex3::cofaces(int k, Index i) const {
  check_dim(k, 0, kDim - 1);
  const auto& off = coface_offsets_[k];
  return std::span<const Index>(cofaces_[k]).subspan(off[i], off[i + 1] - off[i]);
}

std::optional<Index> SimplicialComplex3::find(std::span<const Vertex> vertices) const {
  if (vertices.empty() || vertices.size() > 4) return std::nullopt;
  const int k = static_cast<int>(vertices.size()) - 1;
  const std::size_t n = count(k);
  std::size_t lo = 0, hi = n;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto s = simplex(k, static_cast<Index>(mid));
    if (std::lexicographical_compare(s.begin(), s.end(), vertices.begin(), vertices.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < n) {
    auto s = simplex(k, static_cast<Index>(lo));
    if (std::equal(s.begin(), s.end(), vertices.begin(), vertices.end())) {
      return static_cast<Index>(lo);
    }
  }
  return std::nullopt;
}

Index SimplicialComplex3::index_of(std::span<const Vertex> vertices) const {
  if (auto i = find(vertices)) return *i;
  throw Error(ErrorCode::UnknownSimplex, "no simplex " + tuple_string(vertices) + " in complex");
}

long SimplicialComplex3::euler_characteristic() const {
  return static_cast<long>(count(0)) - static_cast<long>(count(1)) +
         static_cast<long>(count(2)) - static_cast<long>(count(3));
}

ComplexPtr make_complex(std::span<const Facet> facets) {
  return std::make_shared<const SimplicialComplex3>(SimplicialComplex3::build(facets));
}

bool is_closed_pseudomanifold(const SimplicialComplex3& c) {
  for (Index t = 0; t < c.count(2); ++t) {
    if (c.cofaces(2, t).size() != 2) return false;
  }
  // vertex-connected components vs dual-graph components
  UnionFind vertices(c.count(0));
  for (Index e = 0; e < c.count(1); ++e) {
    auto f = c.faces(1, e);
    vertices.unite(f[0], f[1]);
  }
  UnionFind dual(c.count(3));
  for (Index t = 0; t < c.count(2); ++t) {
    auto cof = c.cofaces(2, t);
    dual.unite(cof[0], cof[1]);
  }
  std::size_t vertex_components = 0, dual_components = 0;
  for (std::size_t v = 0; v < c.count(0); ++v) vertex_components += vertices.find(v) == v;
  for (std::size_t f = 0; f < c.count(3); ++f) dual_components += dual.find(f) == f;
  return vertex_components == dual_components;
}

Gf2Vector fundamental_cycle(const SimplicialComplex3& c) {
  if (!is_closed_pseudomanifold(c)) {
    throw Error(ErrorCode::NotClosed, "fundamental cycle requires a closed pseudomanifold");
  }
  return Gf2Vector::ones(c.count(3));
}

bool is_orientable(const SimplicialComplex3& c) {
  if (!is_closed_pseudomanifold(c)) {
    throw Error(ErrorCode::NotClosed, "orientability requires a closed pseudomanifold");
  }
  // Facet (v0<v1<v2<v3) with sign s induces sign s*(-1)^j on the face that
  // omits v_j. Neighbouring facets must induce opposite signs.
  const std::size_t n = c.count(3);
  std::vector<int> sign(n, 0);
  auto induced = [&](Index facet, Index tri) {
    auto fs = c.faces(3, facet);
    const auto pos = static_cast<int>(std::find(fs.begin(), fs.end(), tri) - fs.begin());
    return sign[facet] * ((pos % 2 == 0) ? 1 : -1);
  };
  for (Index root = 0; root < n; ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::queue<Index> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Index f = queue.front();
      queue.pop();
      for (Index tri : c.faces(3, f)) {
        auto cof = c.cofaces(2, tri);
        const Index g = cof[0] == f ? cof[1] : cof[0];
        if (sign[g] == 0) {
          sign[g] = 1;
          if (induced(g, tri) == induced(f, tri)) sign[g] = -1;
          queue.push(g);
        }
      }
    }
  }
  for (Index tri = 0; tri < c.count(2); ++tri) {
    auto cof = c.cofaces(2, tri);
    if (induced(cof[0], tri) + induced(cof[1], tri) != 0) return false;
  }
  return true;
}

Gf2Matrix boundary_matrix(const SimplicialComplex3& c, int k) {
  check_dim(k, 1, 3);
  Gf2Matrix m(c.count(k - 1), c.count(k));
  for (Index s = 0; s < c.count(k); ++s) {
    for (Index f : c.faces(k, s)) m.set(f, s, true);
  }
  return m;
}

Gf2Vector boundary(const SimplicialComplex3& c, int k, const Gf2Vector& chain) {
  check_dim(k, 1, 3);
  if (chain.length() != c.count(k)) {
    throw Error(ErrorCode::DimensionMismatch,
                "chain of length " + std::to_string(chain.length()) + " over " +
                    std::to_string(c.count(k)) + " simplices of dimension " + std::to_string(k));
  }
  std::vector<std::uint8_t> acc(c.count(k - 1), 0);
  for (Index s : chain.support()) {
    for (Index f : c.faces(k, s)) acc[f] ^= 1U;
  }
  return Gf2Vector::from_dense(acc);
}

Gf2Vector chain_from_simplices(const SimplicialComplex3& c, int k,
                               const std::vector<std::vector<Vertex>>& simplices) {
  check_dim(k, 0, 3);
  Gf2Vector chain(c.count(k));
  for (auto s : simplices) {
    if (s.size() != static_cast<std::size_t>(k) + 1) {
      throw Error(ErrorCode::InvalidInput, "expected " + std::to_string(k + 1) +
                                               " vertices, got " + tuple_string(s));
    }
    std::sort(s.begin(), s.end());
    chain.toggle(c.index_of(s));
  }
  return chain;
}

}  // namespace genmap3
