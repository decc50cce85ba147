#include "genmap3/simplicial_map.hpp"

#include <algorithm>

#include "genmap3/error.hpp"

namespace genmap3 {

SimplicialMap SimplicialMap::identity(const ComplexPtr& c) {
  SimplicialMap m{c, c, {}};
  for (Index i = 0; i < c->count(0); ++i) {
    const Vertex v = c->simplex(0, i)[0];
    m.vertex_images.emplace(v, v);
  }
  return m;
}

SimplicialMap SimplicialMap::constant(const ComplexPtr& source, const ComplexPtr& target,
                                      Vertex image) {
  SimplicialMap m{source, target, {}};
  for (Index i = 0; i < source->count(0); ++i) {
    m.vertex_images.emplace(source->simplex(0, i)[0], image);
  }
  return m;
}

std::vector<Vertex> SimplicialMap::image_of(std::span<const Vertex> simplex) const {
  std::vector<Vertex> out;
  out.reserve(simplex.size());
  for (Vertex v : simplex) {
    auto it = vertex_images.find(v);
    if (it == vertex_images.end()) {
      throw Error(ErrorCode::InvalidMap, "vertex " + std::to_string(v) + " has no image");
    }
    out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MapValidation validate_simplicial_map(const SimplicialMap& m) {
  MapValidation result;
  if (!m.source || !m.target) {
    result.ok = false;
    result.diagnostic = "map is missing its source or target complex";
    return result;
  }
  for (Index i = 0; i < m.source->count(0); ++i) {
    const Vertex v = m.source->simplex(0, i)[0];
    if (!m.vertex_images.contains(v)) {
      result.ok = false;
      result.offending_simplex = {v};
      result.diagnostic = "vertex " + std::to_string(v) + " has no image";
      return result;
    }
  }
  // Lowest dimension first so the diagnostic names the smallest bad simplex.
  for (int k = 1; k <= 3; ++k) {
    for (Index i = 0; i < m.source->count(k); ++i) {
      const auto simplex = m.source->simplex(k, i);
      const auto image = m.image_of(simplex);
      if (m.target->find(image)) continue;
      result.ok = false;
      result.offending_simplex.assign(simplex.begin(), simplex.end());
      std::string s, t;
      for (Vertex v : simplex) s += (s.empty() ? "" : ",") + std::to_string(v);
      for (Vertex v : image) t += (t.empty() ? "" : ",") + std::to_string(v);
      result.diagnostic = "image {" + t + "} of source simplex {" + s +
                          "} is not a simplex of the target";
      return result;
    }
  }
  return result;
}

}  // namespace genmap3
