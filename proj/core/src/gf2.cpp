#include "genmap3/gf2.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "genmap3/error.hpp"

namespace genmap3 {

namespace {

void check_index(std::size_t i, std::size_t bound, const char* what) {
  if (i >= bound) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " index " + std::to_string(i) + " out of range " +
                    std::to_string(bound));
  }
}

// symmetric difference of two sorted index lists
std::vector<Index> xor_sorted(std::span<const Index> a, std::span<const Index> b) {
  std::vector<Index> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Gf2Vector

Gf2Vector Gf2Vector::from_support(std::size_t length, std::vector<Index> support) {
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
    throw Error(ErrorCode::InvalidInput, "duplicate index in vector support");
  }
  if (!support.empty()) check_index(support.back(), length, "vector");
  Gf2Vector v(length);
  v.support_ = std::move(support);
  return v;
}

Gf2Vector Gf2Vector::ones(std::size_t length) {
  Gf2Vector v(length);
  v.support_.resize(length);
  for (std::size_t i = 0; i < length; ++i) v.support_[i] = static_cast<Index>(i);
  return v;
}

Gf2Vector Gf2Vector::unit(std::size_t length, Index i) {
  check_index(i, length, "vector");
  Gf2Vector v(length);
  v.support_.push_back(i);
  return v;
}

bool Gf2Vector::get(Index i) const {
  check_index(i, length_, "vector");
  return std::binary_search(support_.begin(), support_.end(), i);
}

void Gf2Vector::set(Index i, bool value) {
  check_index(i, length_, "vector");
  auto it = std::lower_bound(support_.begin(), support_.end(), i);
  const bool present = it != support_.end() && *it == i;
  if (value && !present) support_.insert(it, i);
  if (!value && present) support_.erase(it);
}

void Gf2Vector::toggle(Index i) { set(i, !get(i)); }

Gf2Vector& Gf2Vector::operator+=(const Gf2Vector& other) {
  if (other.length_ != length_) {
    throw Error(ErrorCode::DimensionMismatch, "adding vectors of length " +
                                                  std::to_string(length_) + " and " +
                                                  std::to_string(other.length_));
  }
  support_ = xor_sorted(support_, other.support_);
  return *this;
}

std::vector<std::uint8_t> Gf2Vector::to_dense() const {
  std::vector<std::uint8_t> bits(length_, 0);
  for (Index i : support_) bits[i] = 1;
  return bits;
}

Gf2Vector Gf2Vector::from_dense(std::span<const std::uint8_t> bits) {
  Gf2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] & 1U) v.support_.push_back(static_cast<Index>(i));
  }
  return v;
}

bool dot(const Gf2Vector& a, const Gf2Vector& b) {
  if (a.length() != b.length()) {
    throw Error(ErrorCode::DimensionMismatch, "dot product of vectors of length " +
                                                  std::to_string(a.length()) + " and " +
                                                  std::to_string(b.length()));
  }
  auto x = a.support();
  auto y = b.support();
  std::size_t i = 0, j = 0;
  bool acc = false;
  while (i < x.size() && j < y.size()) {
    if (x[i] < y[j]) {
      ++i;
    } else if (y[j] < x[i]) {
      ++j;
    } else {
      acc = !acc;
      ++i;
      ++j;
    }
  }
  return acc;
}

// ---------------------------------------------------------------- Gf2Matrix

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i].push_back(static_cast<Index>(i));
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::size_t cols, const std::vector<Gf2Vector>& rows) {
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].length() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "row length does not match column count");
    }
    auto s = rows[r].support();
    m.entries_[r].assign(s.begin(), s.end());
  }
  return m;
}

Gf2Matrix Gf2Matrix::from_columns(std::size_t rows, const std::vector<Gf2Vector>& columns) {
  Gf2Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].length() != rows) {
      throw Error(ErrorCode::DimensionMismatch, "column length does not match row count");
    }
    for (Index r : columns[c].support()) m.entries_[r].push_back(static_cast<Index>(c));
  }
  return m;
}

Gf2Matrix Gf2Matrix::from_dense(const std::vector<std::vector<std::uint8_t>>& bits) {
  const std::size_t cols = bits.empty() ? 0 : bits.front().size();
  Gf2Matrix m(bits.size(), cols);
  for (std::size_t r = 0; r < bits.size(); ++r) {
    if (bits[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (bits[r][c] & 1U) m.entries_[r].push_back(static_cast<Index>(c));
    }
  }
  return m;
}

Gf2Vector Gf2Matrix::row_vector(std::size_t r) const {
  check_index(r, rows_, "row");
  return Gf2Vector::from_support(cols_, entries_[r]);
}

Gf2Vector Gf2Matrix::column_vector(std::size_t c) const {
  check_index(c, cols_, "column");
  Gf2Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (std::binary_search(entries_[r].begin(), entries_[r].end(), static_cast<Index>(c))) {
      v.set(static_cast<Index>(r), true);
    }
  }
  return v;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  check_index(r, rows_, "row");
  check_index(c, cols_, "column");
  return std::binary_search(entries_[r].begin(), entries_[r].end(), static_cast<Index>(c));
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  check_index(r, rows_, "row");
  check_index(c, cols_, "column");
  auto& row = entries_[r];
  auto it = std::lower_bound(row.begin(), row.end(), static_cast<Index>(c));
  const bool present = it != row.end() && *it == c;
  if (value && !present) row.insert(it, static_cast<Index>(c));
  if (!value && present) row.erase(it);
}

void Gf2Matrix::toggle(std::size_t r, std::size_t c) { set(r, c, !get(r, c)); }

bool Gf2Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& r) { return r.empty(); });
}

std::size_t Gf2Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : entries_) n += r.size();
  return n;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (Index c : entries_[r]) t.entries_[c].push_back(static_cast<Index>(r));
  }
  return t;
}

Gf2Vector Gf2Matrix::operator*(const Gf2Vector& x) const {
  if (x.length() != cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix with " + std::to_string(cols_) +
                                                  " columns applied to vector of length " +
                                                  std::to_string(x.length()));
  }
  std::vector<Index> out;
  for (std::size_t r = 0; r < rows_; ++r) {
    // parity of |row ∩ support|
    auto a = std::span<const Index>(entries_[r]);
    auto b = x.support();
    std::size_t i = 0, j = 0;
    bool acc = false;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j]) {
        ++i;
      } else if (b[j] < a[i]) {
        ++j;
      } else {
        acc = !acc;
        ++i;
        ++j;
      }
    }
    if (acc) out.push_back(static_cast<Index>(r));
  }
  return Gf2Vector::from_support(rows_, std::move(out));
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& other) const {
  if (cols_ != other.rows_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product with incompatible shapes");
  }
  Gf2Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::vector<Index> acc;
    for (Index k : entries_[r]) acc = xor_sorted(acc, other.entries_[k]);
    out.entries_[r] = std::move(acc);
  }
  return out;
}

std::vector<std::vector<std::uint8_t>> Gf2Matrix::to_dense() const {
  std::vector<std::vector<std::uint8_t>> bits(rows_, std::vector<std::uint8_t>(cols_, 0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (Index c : entries_[r]) bits[r][c] = 1;
  }
  return bits;
}

// ---------------------------------------------------------------- Gf2Solver

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

bool test_bit(const std::vector<std::uint64_t>& row, std::size_t i) {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void xor_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

}  // namespace

Gf2Solver::Gf2Solver(const Gf2Matrix& m) : rows_(m.rows()), cols_(m.cols()) {
  const std::size_t cw = words_for(cols_);
  const std::size_t rw = words_for(rows_);
  reduced_.assign(rows_, BitRow(cw, 0));
  transform_.assign(rows_, BitRow(rw, 0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (Index c : m.row(r)) reduced_[r][c / kWordBits] |= Word{1} << (c % kWordBits);
    transform_[r][r / kWordBits] |= Word{1} << (r % kWordBits);
  }

  std::size_t next = 0;
  for (std::size_t c = 0; c < cols_ && next < rows_; ++c) {
    std::size_t p = next;
    while (p < rows_ && !test_bit(reduced_[p], c)) ++p;
    if (p == rows_) continue;
    std::swap(reduced_[p], reduced_[next]);
    std::swap(transform_[p], transform_[next]);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != next && test_bit(reduced_[r], c)) {
        xor_into(reduced_[r], reduced_[next]);
        xor_into(transform_[r], transform_[next]);
      }
    }
    pivots_.push_back(static_cast<Index>(c));
    ++next;
  }
}

Gf2Vector Gf2Solver::transformed(const Gf2Vector& b) const {
  if (b.length() != rows_) {
    throw Error(ErrorCode::DimensionMismatch, "right-hand side of length " +
                                                  std::to_string(b.length()) +
                                                  " for a system with " + std::to_string(rows_) +
                                                  " rows");
  }
  BitRow packed(words_for(rows_), 0);
  for (Index i : b.support()) packed[i / kWordBits] |= Word{1} << (i % kWordBits);
  std::vector<Index> out;
  for (std::size_t r = 0; r < rows_; ++r) {
    unsigned parity = 0;
    for (std::size_t w = 0; w < packed.size(); ++w) {
      parity ^= static_cast<unsigned>(std::popcount(transform_[r][w] & packed[w]));
    }
    if (parity & 1U) out.push_back(static_cast<Index>(r));
  }
  return Gf2Vector::from_support(rows_, std::move(out));
}

std::optional<Gf2Vector> Gf2Solver::solve(const Gf2Vector& b) const {
  const Gf2Vector tb = transformed(b);
  Gf2Vector x(cols_);
  for (Index r : tb.support()) {
    if (r >= pivots_.size()) return std::nullopt;
    x.set(pivots_[r], true);
  }
  return x;
}

bool Gf2Solver::in_column_space(const Gf2Vector& b) const {
  const Gf2Vector tb = transformed(b);
  return tb.is_zero() || tb.support().back() < pivots_.size();
}

std::vector<Gf2Vector> Gf2Solver::kernel_basis() const {
  std::vector<std::uint8_t> is_pivot(cols_, 0);
  for (Index p : pivots_) is_pivot[p] = 1;
  std::vector<Gf2Vector> basis;
  basis.reserve(cols_ - pivots_.size());
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Index> support{static_cast<Index>(f)};
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      if (test_bit(reduced_[r], f)) support.push_back(pivots_[r]);
    }
    basis.push_back(Gf2Vector::from_support(cols_, std::move(support)));
  }
  return basis;
}

Gf2Matrix Gf2Solver::reduced() const {
  Gf2Matrix m(rows_, cols_);
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    for (std::size_t c = pivots_[r]; c < cols_; ++c) {
      if (test_bit(reduced_[r], c)) m.set(r, c, true);
    }
  }
  return m;
}

// ---------------------------------------------------------------- free functions

RrefResult rref(const Gf2Matrix& m) {
  Gf2Solver s(m);
  auto pivots = s.pivots();
  return RrefResult{s.reduced(), {pivots.begin(), pivots.end()}, s.rank()};
}

std::size_t rank(const Gf2Matrix& m) { return Gf2Solver(m).rank(); }

std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& b) {
  return Gf2Solver(m).solve(b);
}

std::vector<Gf2Vector> kernel_basis(const Gf2Matrix& m) { return Gf2Solver(m).kernel_basis(); }

}  // namespace genmap3
