#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "genmap3/gf2.hpp"

namespace genmap3 {

/// Vertex labels are nonnegative integers. Their integer order is the
/// global vertex order used by every cup product.
using Vertex = int;
using Facet = std::array<Vertex, 4>;

/// A pure 3-dimensional simplicial complex given by its facets, with face
/// tables for every dimension. Simplices of dimension k are stored as
/// increasing vertex tuples, sorted lexicographically and indexed from 0.
///
/// Immutable after construction.
class SimplicialComplex3 {
 public:
  static constexpr int kDim = 3;

  /// Throws EmptyFacetList, RepeatedVertexInFacet, NegativeLabel.
  /// Facets are normalised to increasing order and deduplicated.
  static SimplicialComplex3 build(std::span<const Facet> facets);

  std::size_t vertex_count() const noexcept { return count(0); }
  std::size_t count(int k) const;

  /// Vertices of the i-th k-simplex, increasing.
  std::span<const Vertex> simplex(int k, Index i) const;

  /// (k-1)-faces of the i-th k-simplex (k >= 1). Entry j is the face that
  /// omits the j-th vertex.
  std::span<const Index> faces(int k, Index i) const;

  /// (k+1)-simplices having the i-th k-simplex as a face (k <= 2).
  std::span<const Index> cofaces(int k, Index i) const;

  /// Index of the simplex with the given increasing vertex tuple.
  std::optional<Index> find(std::span<const Vertex> vertices) const;

  /// Same as find, but throws UnknownSimplex.
  Index index_of(std::span<const Vertex> vertices) const;

  std::span<const Facet> facets() const noexcept { return facets_; }

  long euler_characteristic() const;

  friend bool operator==(const SimplicialComplex3& a, const SimplicialComplex3& b) {
    return a.facets_ == b.facets_;
  }

 private:
  SimplicialComplex3() = default;

  std::vector<Facet> facets_;
  // per dimension: flat vertex tuples with stride k+1
  std::array<std::vector<Vertex>, 4> simplices_;
  // per dimension k >= 1: flat face indices with stride k+1
  std::array<std::vector<Index>, 4> faces_;
  // per dimension k <= 2: CSR coface lists
  std::array<std::vector<Index>, 3> coface_offsets_;
  std::array<std::vector<Index>, 3> cofaces_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex3>;

ComplexPtr make_complex(std::span<const Facet> facets);

/// Every triangle has exactly two cofaces, and within each connected
/// component the facets are connected through shared triangles.
bool is_closed_pseudomanifold(const SimplicialComplex3& c);

/// All-ones 3-chain. Throws NotClosed.
Gf2Vector fundamental_cycle(const SimplicialComplex3& c);

/// Orientation propagation over a spanning tree of the dual graph, then a
/// consistency check on the remaining dual edges. Throws NotClosed.
bool is_orientable(const SimplicialComplex3& c);

/// Mod-2 boundary operator from k-chains to (k-1)-chains, k in 1..3.
/// Rows are (k-1)-simplices, columns are k-simplices.
Gf2Matrix boundary_matrix(const SimplicialComplex3& c, int k);

/// Boundary of a k-chain, k in 1..3. Throws DimensionMismatch.
Gf2Vector boundary(const SimplicialComplex3& c, int k, const Gf2Vector& chain);

/// Chain over k-simplices from explicit vertex tuples (each tuple is
/// sorted first). Throws UnknownSimplex; repeated simplices cancel mod 2.
Gf2Vector chain_from_simplices(const SimplicialComplex3& c, int k,
                               const std::vector<std::vector<Vertex>>& simplices);

}  // namespace genmap3
