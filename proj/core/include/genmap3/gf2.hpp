#pragma once

// Sparse vectors and matrices over the two-element field.
//
// Chains, cochains, coboundary operators and pairing matrices all live here.
// Elimination runs on packed 64-bit rows internally; the public types stay
// sparse (sorted support lists).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace genmap3 {

using Index = std::uint32_t;

class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t length) : length_(length) {}

  /// Support may be unsorted; duplicate indices are rejected.
  static Gf2Vector from_support(std::size_t length, std::vector<Index> support);
  static Gf2Vector ones(std::size_t length);
  static Gf2Vector unit(std::size_t length, Index i);

  std::size_t length() const noexcept { return length_; }
  std::span<const Index> support() const noexcept { return support_; }
  std::size_t weight() const noexcept { return support_.size(); }
  bool is_zero() const noexcept { return support_.empty(); }

  bool get(Index i) const;
  void set(Index i, bool value);
  void toggle(Index i);

  Gf2Vector& operator+=(const Gf2Vector& other);
  friend Gf2Vector operator+(Gf2Vector a, const Gf2Vector& b) { return a += b; }
  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

  /// Dense 0/1 view, mostly for tests and printing.
  std::vector<std::uint8_t> to_dense() const;
  static Gf2Vector from_dense(std::span<const std::uint8_t> bits);

 private:
  std::size_t length_ = 0;
  std::vector<Index> support_;
};

/// Inner product mod 2.
bool dot(const Gf2Vector& a, const Gf2Vector& b);

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix from_rows(std::size_t cols, const std::vector<Gf2Vector>& rows);
  static Gf2Matrix from_columns(std::size_t rows, const std::vector<Gf2Vector>& columns);
  static Gf2Matrix from_dense(const std::vector<std::vector<std::uint8_t>>& bits);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  /// Sorted column indices of the ones in row r.
  std::span<const Index> row(std::size_t r) const { return entries_[r]; }
  Gf2Vector row_vector(std::size_t r) const;
  Gf2Vector column_vector(std::size_t c) const;

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);
  void toggle(std::size_t r, std::size_t c);

  bool is_zero() const;
  std::size_t nonzeros() const;

  Gf2Matrix transpose() const;
  Gf2Vector operator*(const Gf2Vector& x) const;
  Gf2Matrix operator*(const Gf2Matrix& other) const;
  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

  std::vector<std::vector<std::uint8_t>> to_dense() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Index>> entries_;
};

struct RrefResult {
  Gf2Matrix reduced;
  std::vector<Index> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form. Columns are scanned left to right and the
/// pivot row for each column is the first remaining row with a one there,
/// so the result is fully deterministic. Zero rows end up at the bottom.
RrefResult rref(const Gf2Matrix& m);

std::size_t rank(const Gf2Matrix& m);

/// Some x with m x = b, or nullopt. Free columns are set to zero.
/// Throws DimensionMismatch when b.length() != m.rows().
std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& b);

/// One basis vector per free column: the free column set to one, pivot
/// columns filled from the reduced matrix.
std::vector<Gf2Vector> kernel_basis(const Gf2Matrix& m);

/// A factorisation of a fixed matrix that answers many solves cheaply.
/// Keeps the row transform T with T m = rref(m).
class Gf2Solver {
 public:
  explicit Gf2Solver(const Gf2Matrix& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  std::span<const Index> pivots() const noexcept { return pivots_; }

  std::optional<Gf2Vector> solve(const Gf2Vector& b) const;
  bool in_column_space(const Gf2Vector& b) const;
  std::vector<Gf2Vector> kernel_basis() const;
  Gf2Matrix reduced() const;

 private:
  using Word = std::uint64_t;
  using BitRow = std::vector<Word>;

  Gf2Vector transformed(const Gf2Vector& b) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitRow> reduced_;
  std::vector<BitRow> transform_;
  std::vector<Index> pivots_;
};

}  // namespace genmap3
