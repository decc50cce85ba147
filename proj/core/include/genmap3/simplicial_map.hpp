#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genmap3/simplicial_complex.hpp"

namespace genmap3 {

/// A vertex map between complexes. Degenerate images (vertices colliding)
/// are allowed; validate_simplicial_map decides whether it is simplicial.
struct SimplicialMap {
  ComplexPtr source;
  ComplexPtr target;
  std::map<Vertex, Vertex> vertex_images;

  static SimplicialMap identity(const ComplexPtr& c);
  static SimplicialMap constant(const ComplexPtr& source, const ComplexPtr& target, Vertex image);

  /// Image vertex set of a source simplex, sorted and deduplicated.
  std::vector<Vertex> image_of(std::span<const Vertex> simplex) const;
};

struct MapValidation {
  bool ok = true;
  /// First source simplex whose image is not a target simplex.
  std::vector<Vertex> offending_simplex;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
};

MapValidation validate_simplicial_map(const SimplicialMap& m);

}  // namespace genmap3
