#include "genmap3/cohomology.hpp"

#include <stdexcept>
#include <string>

#include "genmap3/error.hpp"

namespace genmap3 {

namespace {

void check_degree(int k, int lo, int hi) {
  if (k < lo || k > hi) {
    throw Error(ErrorCode::DegreeMismatch, "degree " + std::to_string(k) + " outside [" +
                                               std::to_string(lo) + ", " + std::to_string(hi) +
                                               "]");
  }
}

void check_same_context(const CohomologyClass& a, const CohomologyClass& b) {
  if (a.context_ptr() != b.context_ptr()) {
    throw Error(ErrorCode::ContextMismatch, "classes live over different complexes");
  }
}

}  // namespace

// ---------------------------------------------------------------- CohomologyClass

CohomologyClass::CohomologyClass(ContextPtr ctx, int degree, Gf2Vector representative)
    : ctx_(std::move(ctx)), degree_(degree), rep_(std::move(representative)) {}

bool CohomologyClass::is_zero() const { return ctx_->is_coboundary(degree_, rep_); }

CohomologyClass& CohomologyClass::operator+=(const CohomologyClass& other) {
  check_same_context(*this, other);
  if (other.degree_ != degree_) {
    throw Error(ErrorCode::DegreeMismatch, "adding classes of degree " + std::to_string(degree_) +
                                               " and " + std::to_string(other.degree_));
  }
  rep_ += other.rep_;
  return *this;
}

// ---------------------------------------------------------------- CohomologyContext

ContextPtr CohomologyContext::create(ComplexPtr complex) {
  if (!complex) throw Error(ErrorCode::InvalidInput, "null complex");
  return std::shared_ptr<CohomologyContext>(new CohomologyContext(std::move(complex)));
}

CohomologyContext::CohomologyContext(ComplexPtr complex) : complex_(std::move(complex)) {
  const auto& c = *complex_;
  closed_ = is_closed_pseudomanifold(c);
  if (closed_) fundamental_ = Gf2Vector::ones(c.count(3));

  coboundary_[0] = Gf2Matrix(c.count(0), 0);
  for (int k = 0; k <= 2; ++k) {
    std::vector<Gf2Vector> rows;
    rows.reserve(c.count(k + 1));
    for (Index t = 0; t < c.count(k + 1); ++t) {
      auto f = c.faces(k + 1, t);
      rows.push_back(Gf2Vector::from_support(c.count(k), {f.begin(), f.end()}));
    }
    coboundary_[k + 1] = Gf2Matrix::from_rows(c.count(k), rows);
  }
  coboundary_[4] = Gf2Matrix(0, c.count(3));

  for (int k = 0; k <= 3; ++k) {
    const Gf2Matrix& prev = coboundary(k - 1);
    const auto cocycles = kernel_basis(coboundary(k));

    // Columns: images of delta^{k-1} first, then the cocycle basis. Pivots
    // that land in the second block span a complement of the coboundaries.
    const Gf2Matrix prev_t = prev.transpose();
    std::vector<Gf2Vector> columns;
    columns.reserve(prev.cols() + cocycles.size());
    for (std::size_t j = 0; j < prev.cols(); ++j) columns.push_back(prev_t.row_vector(j));
    columns.insert(columns.end(), cocycles.begin(), cocycles.end());
    Gf2Solver combined(Gf2Matrix::from_columns(c.count(k), columns));

    std::size_t boundary_rank = 0;
    for (Index p : combined.pivots()) {
      if (p < prev.cols()) {
        ++boundary_rank;
      } else {
        basis_[k].push_back(cocycles[p - prev.cols()]);
      }
    }

    coboundary_solver_[k] = std::make_unique<Gf2Solver>(prev);
    if (coboundary_solver_[k]->rank() != boundary_rank) {
      throw std::logic_error("coboundary rank disagrees between eliminations");
    }

    std::vector<Gf2Vector> class_columns(columns.begin(), columns.begin() + prev.cols());
    class_columns.insert(class_columns.end(), basis_[k].begin(), basis_[k].end());
    class_solver_[k] =
        std::make_unique<Gf2Solver>(Gf2Matrix::from_columns(c.count(k), class_columns));
    if (class_solver_[k]->rank() != boundary_rank + basis_[k].size()) {
      throw std::logic_error("cohomology basis is not independent modulo coboundaries");
    }
  }
}

std::size_t CohomologyContext::cochain_length(int k) const {
  if (k < 0 || k > 3) return 0;
  return complex_->count(k);
}

const Gf2Matrix& CohomologyContext::coboundary(int k) const {
  check_degree(k, -1, 3);
  return coboundary_[k + 1];
}

std::size_t CohomologyContext::betti(int k) const {
  check_degree(k, 0, 3);
  return basis_[k].size();
}

std::span<const Gf2Vector> CohomologyContext::basis(int k) const {
  check_degree(k, 0, 3);
  return basis_[k];
}

CohomologyClass CohomologyContext::basis_class(int k, std::size_t i) const {
  check_degree(k, 0, 3);
  if (i >= basis_[k].size()) {
    throw Error(ErrorCode::DimensionMismatch, "basis index " + std::to_string(i) +
                                                  " but H^" + std::to_string(k) +
                                                  " has dimension " +
                                                  std::to_string(basis_[k].size()));
  }
  return CohomologyClass(shared_from_this(), k, basis_[k][i]);
}

CohomologyClass CohomologyContext::zero(int k) const {
  check_degree(k, 0, 3);
  return CohomologyClass(shared_from_this(), k, Gf2Vector(cochain_length(k)));
}

CohomologyClass CohomologyContext::make_class(int k, Gf2Vector representative) const {
  check_degree(k, 0, 3);
  if (representative.length() != cochain_length(k)) {
    throw Error(ErrorCode::DimensionMismatch,
                "cochain of length " + std::to_string(representative.length()) +
                    " for degree " + std::to_string(k) + " (expected " +
                    std::to_string(cochain_length(k)) + ")");
  }
  if (!is_cocycle(k, representative)) {
    throw Error(ErrorCode::NotACocycle, "degree-" + std::to_string(k) + " cochain");
  }
  return CohomologyClass(shared_from_this(), k, std::move(representative));
}

CohomologyClass CohomologyContext::from_coordinates(int k, const Gf2Vector& coords) const {
  check_degree(k, 0, 3);
  if (coords.length() != basis_[k].size()) {
    throw Error(ErrorCode::DimensionMismatch, "coordinate vector length");
  }
  Gf2Vector rep(cochain_length(k));
  for (Index i : coords.support()) rep += basis_[k][i];
  return CohomologyClass(shared_from_this(), k, std::move(rep));
}

bool CohomologyContext::is_cocycle(int k, const Gf2Vector& u) const {
  return (coboundary(k) * u).is_zero();
}

bool CohomologyContext::is_coboundary(int k, const Gf2Vector& u) const {
  check_degree(k, 0, 3);
  return coboundary_solver_[k]->in_column_space(u);
}

std::optional<Gf2Vector> CohomologyContext::coboundary_preimage(int k, const Gf2Vector& u) const {
  check_degree(k, 0, 3);
  return coboundary_solver_[k]->solve(u);
}

Gf2Vector CohomologyContext::coordinates(int k, const Gf2Vector& cocycle) const {
  check_degree(k, 0, 3);
  auto y = class_solver_[k]->solve(cocycle);
  if (!y) throw Error(ErrorCode::NotACocycle, "cannot express cochain in the H^k basis");
  const std::size_t offset = coboundary(k - 1).cols();
  Gf2Vector coords(basis_[k].size());
  for (Index i : y->support()) {
    if (i >= offset) coords.set(static_cast<Index>(i - offset), true);
  }
  return coords;
}

Gf2Vector CohomologyContext::coordinates(const CohomologyClass& c) const {
  if (c.context_ptr().get() != this) {
    throw Error(ErrorCode::ContextMismatch, "class belongs to another context");
  }
  return coordinates(c.degree(), c.representative());
}

const Gf2Vector& CohomologyContext::fundamental_cycle() const {
  if (!closed_) throw Error(ErrorCode::NotClosed, "complex is not a closed pseudomanifold");
  return fundamental_;
}

// ---------------------------------------------------------------- operations

std::size_t betti_mod2(const CohomologyContext& ctx, int k) { return ctx.betti(k); }

bool cohomologous(const CohomologyClass& u, const CohomologyClass& v) {
  check_same_context(u, v);
  if (u.degree() != v.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "comparing classes of degree " +
                                               std::to_string(u.degree()) + " and " +
                                               std::to_string(v.degree()));
  }
  return u.context().is_coboundary(u.degree(), u.representative() + v.representative());
}

Gf2Vector cup_cochains(const SimplicialComplex3& c, int p, const Gf2Vector& u, int q,
                       const Gf2Vector& v) {
  if (p < 0 || q < 0) throw Error(ErrorCode::DegreeMismatch, "negative degree");
  if (p + q > 3) {
    throw Error(ErrorCode::DegreeOverflow, "cup of degrees " + std::to_string(p) + " and " +
                                               std::to_string(q) + " exceeds 3");
  }
  if (u.length() != c.count(p) || v.length() != c.count(q)) {
    throw Error(ErrorCode::DimensionMismatch, "cochain length does not match its degree");
  }
  const int n = p + q;
  Gf2Vector out(c.count(n));
  if (u.is_zero() || v.is_zero()) return out;
  for (Index s = 0; s < c.count(n); ++s) {
    auto verts = c.simplex(n, s);
    const Index front = *c.find(verts.first(p + 1));
    if (!u.get(front)) continue;
    const Index back = *c.find(verts.subspan(p));
    if (v.get(back)) out.set(s, true);
  }
  return out;
}

CohomologyClass cup(const CohomologyClass& u, const CohomologyClass& v) {
  check_same_context(u, v);
  const auto& ctx = u.context();
  Gf2Vector rep =
      cup_cochains(ctx.complex(), u.degree(), u.representative(), v.degree(), v.representative());
  return CohomologyClass(u.context_ptr(), u.degree() + v.degree(), std::move(rep));
}

Gf2Vector sq1_cochain(const SimplicialComplex3& c, int k, const Gf2Vector& u) {
  if (k < 0) throw Error(ErrorCode::DegreeMismatch, "negative degree");
  if (k > 2) throw Error(ErrorCode::DegreeOverflow, "Sq1 of a degree-3 cochain");
  if (u.length() != c.count(k)) {
    throw Error(ErrorCode::DimensionMismatch, "cochain length does not match its degree");
  }
  Gf2Vector out(c.count(k + 1));
  for (Index t = 0; t < c.count(k + 1); ++t) {
    auto f = c.faces(k + 1, t);
    int sum = 0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (u.get(f[j])) sum += (j % 2 == 0) ? 1 : -1;
    }
    if (sum % 2 != 0) {
      throw Error(ErrorCode::NotACocycle, "integer coboundary of the lift is odd on simplex " +
                                              std::to_string(t));
    }
    if ((sum / 2) % 2 != 0) out.set(t, true);
  }
  return out;
}

CohomologyClass sq1(const CohomologyClass& u) {
  const auto& ctx = u.context();
  return CohomologyClass(u.context_ptr(), u.degree() + 1,
                         sq1_cochain(ctx.complex(), u.degree(), u.representative()));
}

bool evaluate(const Gf2Vector& cochain, const Gf2Vector& chain) {
  if (cochain.length() != chain.length()) {
    throw Error(ErrorCode::DimensionMismatch, "pairing cochain of length " +
                                                  std::to_string(cochain.length()) +
                                                  " with chain of length " +
                                                  std::to_string(chain.length()));
  }
  return dot(cochain, chain);
}

bool evaluate_on_fundamental(const CohomologyClass& u) {
  if (u.degree() != 3) {
    throw Error(ErrorCode::DegreeMismatch, "only degree-3 classes pair with [M]");
  }
  return evaluate(u.representative(), u.context().fundamental_cycle());
}

Gf2Matrix duality_pairing_matrix(const CohomologyContext& ctx, int k) {
  check_degree(k, 0, 3);
  const auto& fundamental = ctx.fundamental_cycle();
  const auto left = ctx.basis(k);
  const auto right = ctx.basis(3 - k);
  Gf2Matrix m(left.size(), right.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      const auto product = cup_cochains(ctx.complex(), k, left[i], 3 - k, right[j]);
      if (evaluate(product, fundamental)) m.set(i, j, true);
    }
  }
  return m;
}

}  // namespace genmap3
