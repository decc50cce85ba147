#pragma once

// Exact-arithmetic Thom-Boardman strata of the three stable local models of
// maps between 3-manifolds:
//
//   fold         (x, y, z) -> (x^2, y, z)
//   cusp         (x, y, z) -> (x^3 + x y, y, z)
//   swallowtail  (x, y, z) -> (x^4 + x^2 y + x z, y, z)
//
// i1 is the kernel dimension of the Jacobian. Where i1 = 1 the singular
// set is the zero set of g = det J, and i2 = dim(ker J ∩ ker dg). Where
// i2 = 1 as well, a kernel vector field k is read off a nonzero column of
// adj(J); the cusp curve is {g = 0, h = 0} with h = dg(k), and
// i3 = dim(ker J ∩ ker dg ∩ ker dh).

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace genmap3::morin {

using Rational = boost::multiprecision::cpp_rational;

struct RationalPoint3 {
  Rational x, y, z;

  const Rational& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

/// Polynomial in x, y, z with rational coefficients. Terms are kept in a
/// map ordered by exponent triple; zero coefficients are never stored.
class Polynomial {
 public:
  using Exponents = std::array<unsigned, 3>;

  Polynomial() = default;
  static Polynomial constant(const Rational& c);
  static Polynomial variable(int var);  // 0 = x, 1 = y, 2 = z
  static Polynomial monomial(const Rational& c, Exponents e);

  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Polynomial derivative(int var) const;
  Rational evaluate(const RationalPoint3& p) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  void add_term(const Rational& c, const Exponents& e);

  std::map<Exponents, Rational> terms_;
};

struct PolyMap3 {
  std::array<Polynomial, 3> components;

  static PolyMap3 fold();
  static PolyMap3 cusp();
  static PolyMap3 swallowtail();
  static PolyMap3 constant(const RationalPoint3& value);
};

/// J[i][j] = d f_i / d x_j.
using PolyMatrix3 = std::array<std::array<Polynomial, 3>, 3>;

PolyMatrix3 jacobian(const PolyMap3& m);
Polynomial determinant(const PolyMatrix3& j);

/// 3 - rank of the Jacobian at p, exact.
int kernel_dim_at(const PolyMap3& m, const RationalPoint3& p);

/// (1, i2). Throws NotRankDropOne, DegenerateLocus.
std::vector<int> second_order_symbol(const PolyMap3& m, const RationalPoint3& p);

/// (1, 1, i3). Throws NotRankDropOne when the point is not on the cusp
/// curve (i1 != 1 or i2 != 1), DegenerateLocus when the curve is not
/// smooth there.
std::vector<int> third_order_symbol(const PolyMap3& m, const RationalPoint3& p);

/// Thom-Boardman prefix at p, stopping at the first zero or after three
/// entries: (0), (1,0), (1,1,0), (1,1,1), or (i1) for i1 >= 2.
std::vector<int> boardman_prefix(const PolyMap3& m, const RationalPoint3& p);

// ---------------------------------------------------------------- stratum verification

enum class MorinModel { Fold, Cusp, Swallowtail };

MorinModel parse_model(std::string_view name);  // throws InvalidInput
std::string_view model_name(MorinModel model);
PolyMap3 model_map(MorinModel model);

/// The prefix each model must show at p, read off the explicit loci
/// {x = 0}; {y = -3x^2} ⊃ {x = y = 0}; {z = -4x^3 - 2xy} ⊃ {y = -6x^2,
/// z = 8x^3} ⊃ {0}.
std::vector<int> expected_prefix(MorinModel model, const RationalPoint3& p);

/// Points for verification: an n×n×n lattice over [-1, 1] with step 2/(n-1),
/// plus points placed exactly on each singular stratum of the model.
std::vector<RationalPoint3> verification_points(MorinModel model, int n);

struct StrataReport {
  MorinModel model = MorinModel::Fold;
  std::size_t points = 0;
  std::size_t mismatches = 0;
  std::map<std::vector<int>, std::size_t> counts;  // prefix -> number of points
  std::vector<RationalPoint3> mismatch_examples;   // at most a few

  bool ok() const noexcept { return mismatches == 0; }
};

StrataReport verify_strata(MorinModel model, int n);

std::string prefix_string(const std::vector<int>& prefix);
std::string point_string(const RationalPoint3& p);

}  // namespace genmap3::morin
