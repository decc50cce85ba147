#pragma once

// Mod-2 simplicial cohomology of a SimplicialComplex3.
//
// Cochains are Gf2Vectors over the k-simplices of the complex. A
// CohomologyContext caches the coboundary operators, one cocycle
// representative per basis class of H^k, and the solvers needed to decide
// whether a cocycle is a coboundary. Classes are compared only through
// `cohomologous`; representatives are never canonicalised.

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "genmap3/gf2.hpp"
#include "genmap3/simplicial_complex.hpp"

namespace genmap3 {

class CohomologyContext;
using ContextPtr = std::shared_ptr<const CohomologyContext>;

class CohomologyClass {
 public:
  CohomologyClass(ContextPtr ctx, int degree, Gf2Vector representative);

  int degree() const noexcept { return degree_; }
  const Gf2Vector& representative() const noexcept { return rep_; }
  const CohomologyContext& context() const noexcept { return *ctx_; }
  const ContextPtr& context_ptr() const noexcept { return ctx_; }

  /// Zero in cohomology (not merely a zero representative).
  bool is_zero() const;

  /// Cochain-level sum. Throws ContextMismatch, DegreeMismatch.
  CohomologyClass& operator+=(const CohomologyClass& other);
  friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }

 private:
  ContextPtr ctx_;
  int degree_;
  Gf2Vector rep_;
};

class CohomologyContext : public std::enable_shared_from_this<CohomologyContext> {
 public:
  static ContextPtr create(ComplexPtr complex);

  const SimplicialComplex3& complex() const noexcept { return *complex_; }
  const ComplexPtr& complex_ptr() const noexcept { return complex_; }
  bool closed() const noexcept { return closed_; }

  /// Number of k-simplices (0 outside 0..3).
  std::size_t cochain_length(int k) const;

  /// delta^k : C^k -> C^{k+1}, k in -1..3. Rows are (k+1)-simplices.
  const Gf2Matrix& coboundary(int k) const;

  std::size_t betti(int k) const;
  std::span<const Gf2Vector> basis(int k) const;

  CohomologyClass basis_class(int k, std::size_t i) const;
  CohomologyClass zero(int k) const;
  /// Throws NotACocycle, DimensionMismatch.
  CohomologyClass make_class(int k, Gf2Vector representative) const;
  /// Sum of the basis classes selected by coords (length betti(k)).
  CohomologyClass from_coordinates(int k, const Gf2Vector& coords) const;

  bool is_cocycle(int k, const Gf2Vector& u) const;
  bool is_coboundary(int k, const Gf2Vector& u) const;
  /// Some x with delta^{k-1} x = u.
  std::optional<Gf2Vector> coboundary_preimage(int k, const Gf2Vector& u) const;

  /// Coordinates of a cocycle in the stored H^k basis.
  /// Throws NotACocycle.
  Gf2Vector coordinates(int k, const Gf2Vector& cocycle) const;
  Gf2Vector coordinates(const CohomologyClass& c) const;

  /// All-ones 3-cycle. Throws NotClosed.
  const Gf2Vector& fundamental_cycle() const;

 private:
  explicit CohomologyContext(ComplexPtr complex);

  ComplexPtr complex_;
  bool closed_ = false;
  Gf2Vector fundamental_;
  // index k+1 holds delta^k for k = -1..3
  std::array<Gf2Matrix, 5> coboundary_;
  std::array<std::vector<Gf2Vector>, 4> basis_;
  // solver for delta^{k-1}
  std::array<std::unique_ptr<Gf2Solver>, 4> coboundary_solver_;
  // solver for [delta^{k-1} | basis_k]
  std::array<std::unique_ptr<Gf2Solver>, 4> class_solver_;
};

std::size_t betti_mod2(const CohomologyContext& ctx, int k);

/// u + v is a coboundary. Throws DegreeMismatch, ContextMismatch.
bool cohomologous(const CohomologyClass& u, const CohomologyClass& v);

/// Alexander-Whitney cup product on cochains:
/// (u ∪ v)(v0..v_{p+q}) = u(v0..vp) · v(vp..v_{p+q}) with vertices in the
/// global (integer) order. Throws DegreeOverflow when p + q > 3.
Gf2Vector cup_cochains(const SimplicialComplex3& c, int p, const Gf2Vector& u, int q,
                       const Gf2Vector& v);

CohomologyClass cup(const CohomologyClass& u, const CohomologyClass& v);

/// Bockstein of the integer lift: lift u to a {0,1}-valued integer
/// cochain, take its signed coboundary (all entries even when u is a mod-2
/// cocycle), halve, reduce mod 2. Throws NotACocycle, DegreeOverflow.
Gf2Vector sq1_cochain(const SimplicialComplex3& c, int k, const Gf2Vector& u);

CohomologyClass sq1(const CohomologyClass& u);

/// Pairing of a 3-cochain with a 3-chain. Throws DimensionMismatch.
bool evaluate(const Gf2Vector& cochain, const Gf2Vector& chain);

/// Pairing of a degree-3 class with the fundamental cycle.
bool evaluate_on_fundamental(const CohomologyClass& u);

/// (i, j) entry: <h^k_i ∪ h^{3-k}_j, [M]> over the stored bases.
/// Throws NotClosed.
Gf2Matrix duality_pairing_matrix(const CohomologyContext& ctx, int k);

}  // namespace genmap3
