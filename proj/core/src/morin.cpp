#include "genmap3/morin.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "genmap3/error.hpp"

namespace genmap3::morin {

namespace {

using RationalMatrix = std::vector<std::array<Rational, 3>>;

std::size_t rational_rank(RationalMatrix rows) {
  std::size_t rank = 0;
  for (int col = 0; col < 3 && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / rows[rank][col];
      for (int c = 0; c < 3; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::array<Rational, 3> gradient_at(const Polynomial& g, const RationalPoint3& p) {
  return {g.derivative(0).evaluate(p), g.derivative(1).evaluate(p), g.derivative(2).evaluate(p)};
}

bool is_zero_vector(const std::array<Rational, 3>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

RationalMatrix evaluate_matrix(const PolyMatrix3& j, const RationalPoint3& p) {
  RationalMatrix out(3);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) out[r][c] = j[r][c].evaluate(p);
  }
  return out;
}

Polynomial minor(const PolyMatrix3& j, int skip_row, int skip_col) {
  std::array<int, 2> rows{}, cols{};
  for (int i = 0, r = 0, c = 0; i < 3; ++i) {
    if (i != skip_row) rows[r++] = i;
    if (i != skip_col) cols[c++] = i;
  }
  return j[rows[0]][cols[0]] * j[rows[1]][cols[1]] - j[rows[0]][cols[1]] * j[rows[1]][cols[0]];
}

// cofactor C_ij = (-1)^{i+j} M_ij
Polynomial cofactor(const PolyMatrix3& j, int row, int col) {
  Polynomial m = minor(j, row, col);
  if ((row + col) % 2 == 0) return m;
  return Polynomial() - m;
}

}  // namespace

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(const Rational& c) { return monomial(c, {0, 0, 0}); }

Polynomial Polynomial::variable(int var) {
  Exponents e{0, 0, 0};
  e.at(static_cast<std::size_t>(var)) = 1;
  return monomial(1, e);
}

Polynomial Polynomial::monomial(const Rational& c, Exponents e) {
  Polynomial p;
  p.add_term(c, e);
  return p;
}

void Polynomial::add_term(const Rational& c, const Exponents& e) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial d;
  for (const auto& [e, c] : terms_) {
    const unsigned power = e.at(static_cast<std::size_t>(var));
    if (power == 0) continue;
    Exponents lowered = e;
    lowered[var] = power - 1;
    d.add_term(c * power, lowered);
  }
  return d;
}

Rational Polynomial::evaluate(const RationalPoint3& p) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int v = 0; v < 3; ++v) {
      for (unsigned k = 0; k < e[v]; ++k) term *= p[v];
    }
    sum += term;
  }
  return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(c, e);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(-c, e);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ca * cb, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]});
    }
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  static constexpr const char* kNames = "xyz";
  std::ostringstream os;
  bool first = true;
  // highest total degree first reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Rational mag = c < 0 ? Rational(-c) : c;
    const bool unit = mag == 1 && (e[0] + e[1] + e[2]) > 0;
    if (!unit) os << mag.str();
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      os << kNames[v];
      if (e[v] > 1) os << "^" << e[v];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- models

PolyMap3 PolyMap3::fold() {
  const auto x = Polynomial::variable(0);
  return {{x * x, Polynomial::variable(1), Polynomial::variable(2)}};
}

PolyMap3 PolyMap3::cusp() {
  const auto x = Polynomial::variable(0);
  const auto y = Polynomial::variable(1);
  return {{x * x * x + x * y, y, Polynomial::variable(2)}};
}

PolyMap3 PolyMap3::swallowtail() {
  const auto x = Polynomial::variable(0);
  const auto y = Polynomial::variable(1);
  const auto z = Polynomial::variable(2);
  return {{x * x * x * x + x * x * y + x * z, y, z}};
}

PolyMap3 PolyMap3::constant(const RationalPoint3& value) {
  return {{Polynomial::constant(value.x), Polynomial::constant(value.y),
           Polynomial::constant(value.z)}};
}

PolyMatrix3 jacobian(const PolyMap3& m) {
  PolyMatrix3 j;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) j[r][c] = m.components[r].derivative(c);
  }
  return j;
}

Polynomial determinant(const PolyMatrix3& j) {
  Polynomial det;
  for (int c = 0; c < 3; ++c) det += j[0][c] * cofactor(j, 0, c);
  return det;
}

int kernel_dim_at(const PolyMap3& m, const RationalPoint3& p) {
  return 3 - static_cast<int>(rational_rank(evaluate_matrix(jacobian(m), p)));
}

std::vector<int> second_order_symbol(const PolyMap3& m, const RationalPoint3& p) {
  const PolyMatrix3 j = jacobian(m);
  RationalMatrix rows = evaluate_matrix(j, p);
  const int i1 = 3 - static_cast<int>(rational_rank(rows));
  if (i1 != 1) {
    throw Error(ErrorCode::NotRankDropOne,
                "kernel dimension " + std::to_string(i1) + " at " + point_string(p));
  }
  const auto dg = gradient_at(determinant(j), p);
  if (is_zero_vector(dg)) {
    throw Error(ErrorCode::DegenerateLocus, "gradient of det J vanishes at " + point_string(p));
  }
  rows.push_back(dg);
  return {1, 3 - static_cast<int>(rational_rank(rows))};
}

std::vector<int> third_order_symbol(const PolyMap3& m, const RationalPoint3& p) {
  const auto second = second_order_symbol(m, p);
  if (second[1] != 1) {
    throw Error(ErrorCode::NotRankDropOne, "point " + point_string(p) + " is a fold point");
  }
  const PolyMatrix3 j = jacobian(m);
  const Polynomial g = determinant(j);

  // Column c of adj(J) is (C_c0, C_c1, C_c2); J adj(J) = det(J) I, so on
  // {g = 0} any column is a kernel vector.
  std::array<Polynomial, 3> kernel_field;
  bool found = false;
  for (int c = 0; c < 3 && !found; ++c) {
    for (int i = 0; i < 3; ++i) kernel_field[i] = cofactor(j, c, i);
    found = std::any_of(kernel_field.begin(), kernel_field.end(),
                        [&](const Polynomial& q) { return q.evaluate(p) != 0; });
  }
  if (!found) throw Error(ErrorCode::DegenerateLocus, "adjugate vanishes at " + point_string(p));

  Polynomial h;
  for (int i = 0; i < 3; ++i) h += g.derivative(i) * kernel_field[i];

  RationalMatrix rows = evaluate_matrix(j, p);
  const auto dg = gradient_at(g, p);
  const auto dh = gradient_at(h, p);
  if (rational_rank({dg, dh}) != 2) {
    throw Error(ErrorCode::DegenerateLocus, "cusp curve is not smooth at " + point_string(p));
  }
  rows.push_back(dg);
  rows.push_back(dh);
  return {1, 1, 3 - static_cast<int>(rational_rank(rows))};
}

std::vector<int> boardman_prefix(const PolyMap3& m, const RationalPoint3& p) {
  const int i1 = kernel_dim_at(m, p);
  if (i1 != 1) return {i1};
  const auto second = second_order_symbol(m, p);
  if (second[1] == 0) return second;
  return third_order_symbol(m, p);
}

// ---------------------------------------------------------------- verification

MorinModel parse_model(std::string_view name) {
  if (name == "fold") return MorinModel::Fold;
  if (name == "cusp") return MorinModel::Cusp;
  if (name == "swallowtail") return MorinModel::Swallowtail;
  throw Error(ErrorCode::InvalidInput, "unknown model '" + std::string(name) +
                                           "' (expected fold, cusp or swallowtail)");
}

std::string_view model_name(MorinModel model) {
  switch (model) {
    case MorinModel::Fold: return "fold";
    case MorinModel::Cusp: return "cusp";
    case MorinModel::Swallowtail: return "swallowtail";
  }
  return "?";
}

PolyMap3 model_map(MorinModel model) {
  switch (model) {
    case MorinModel::Fold: return PolyMap3::fold();
    case MorinModel::Cusp: return PolyMap3::cusp();
    case MorinModel::Swallowtail: return PolyMap3::swallowtail();
  }
  return PolyMap3::fold();
}

std::vector<int> expected_prefix(MorinModel model, const RationalPoint3& p) {
  const Rational& x = p.x;
  const Rational& y = p.y;
  const Rational& z = p.z;
  switch (model) {
    case MorinModel::Fold:
      return x == 0 ? std::vector<int>{1, 0} : std::vector<int>{0};
    case MorinModel::Cusp:
      if (y != -3 * x * x) return {0};
      return x == 0 ? std::vector<int>{1, 1, 0} : std::vector<int>{1, 0};
    case MorinModel::Swallowtail:
      if (z != -4 * x * x * x - 2 * x * y) return {0};
      if (y != -6 * x * x) return {1, 0};
      return x == 0 ? std::vector<int>{1, 1, 1} : std::vector<int>{1, 1, 0};
  }
  return {};
}

std::vector<RationalPoint3> verification_points(MorinModel model, int n) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "grid needs at least 2 points per axis");
  std::vector<Rational> axis;
  for (int i = 0; i < n; ++i) axis.push_back(Rational(-1) + Rational(2 * i, n - 1));

  std::vector<RationalPoint3> pts;
  for (const auto& a : axis) {
    for (const auto& b : axis) {
      for (const auto& c : axis) pts.push_back({a, b, c});
    }
  }
  for (const auto& a : axis) {
    for (const auto& b : axis) {
      switch (model) {
        case MorinModel::Fold:
          pts.push_back({0, a, b});
          break;
        case MorinModel::Cusp:
          pts.push_back({a, -3 * a * a, b});
          break;
        case MorinModel::Swallowtail:
          pts.push_back({a, b, -4 * a * a * a - 2 * a * b});
          break;
      }
    }
    switch (model) {
      case MorinModel::Fold:
        break;
      case MorinModel::Cusp:
        pts.push_back({0, 0, a});
        break;
      case MorinModel::Swallowtail:
        pts.push_back({a, -6 * a * a, 8 * a * a * a});
        break;
    }
  }
  if (model == MorinModel::Swallowtail) pts.push_back({0, 0, 0});
  auto key = [](const RationalPoint3& p) { return std::tie(p.x, p.y, p.z); };
  std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [&](const auto& a, const auto& b) { return key(a) == key(b); }),
            pts.end());
  return pts;
}

StrataReport verify_strata(MorinModel model, int n) {
  StrataReport report;
  report.model = model;
  const PolyMap3 map = model_map(model);
  for (const auto& p : verification_points(model, n)) {
    const auto got = boardman_prefix(map, p);
    ++report.points;
    ++report.counts[got];
    if (got != expected_prefix(model, p)) {
      ++report.mismatches;
      if (report.mismatch_examples.size() < 5) report.mismatch_examples.push_back(p);
    }
  }
  return report;
}

std::string prefix_string(const std::vector<int>& prefix) {
  std::string s = "(";
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(prefix[i]);
  }
  return s + ")";
}

std::string point_string(const RationalPoint3& p) {
  return "(" + p.x.str() + ", " + p.y.str() + ", " + p.z.str() + ")";
}

}  // namespace genmap3::morin
