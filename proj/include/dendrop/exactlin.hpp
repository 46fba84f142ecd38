#pragma once

// Exact scalars over Q and F_p, dense matrices and structure-constant tensors.
//
// Everything here is a value type. Rational scalars are GMP fractions kept in
// lowest terms; prime-field scalars are residues in [0, p). No floating point
// appears anywhere on the arithmetic path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "dendrop/error.hpp"

namespace dendrop {

enum class FieldKind { rational, prime };

struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  std::uint32_t p = 0;  // 0 unless kind == prime

  static FieldSpec rational() { return {}; }
  /// Throws InvalidField unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  [[nodiscard]] bool finite() const { return kind == FieldKind::prime; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(FieldSpec field);
  Scalar(FieldSpec field, long value);
  /// Reduces into F_p when the field is finite; BadRational if the
  /// denominator vanishes mod p.
  Scalar(FieldSpec field, const mpq_class& value);

  /// Accepts "a", "-a", "a/b". BadRational on malformed text or zero denominator.
  static Scalar parse(FieldSpec field, std::string_view text);

  [[nodiscard]] const FieldSpec& field() const { return field_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  [[nodiscard]] std::uint32_t residue() const { return static_cast<std::uint32_t>(std::get<std::uint64_t>(value_)); }

  /// DivisionByZero on zero.
  [[nodiscard]] Scalar inverse() const;

  /// Lowest-terms "p/q", or the integer when q = 1; residues as decimal.
  [[nodiscard]] std::string to_string() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void check_field(const Scalar& other) const;

  FieldSpec field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(FieldSpec field, std::size_t n);
Vector unit_vector(FieldSpec field, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector subtract(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& s, std::span<const Scalar> v);
std::string to_string(std::span<const Scalar> v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  /// Row-major entries; DimensionMismatch if the count is not rows * cols.
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(FieldSpec field, std::size_t n);
  /// Convenience for small integer/rational literals, e.g. {{"1/2", "0"}, {"0", "1"}}.
  static Matrix from_strings(FieldSpec field, const std::vector<std::vector<std::string>>& rows);
  static Matrix diagonal(FieldSpec field, std::span<const Scalar> diag);
  /// Matrix whose columns are the given vectors (all of length rows).
  static Matrix from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector>& columns);

  [[nodiscard]] const FieldSpec& field() const { return field_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool square() const { return rows_ == cols_; }
  [[nodiscard]] bool is_zero() const;

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  [[nodiscard]] std::span<const Scalar> entries() const { return entries_; }

  [[nodiscard]] Vector column(std::size_t c) const;
  [[nodiscard]] Vector apply(std::span<const Scalar> v) const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Matrix scaled(const Scalar& s) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Which unknown gets a pivot first when a system is underdetermined.
/// pivot_first is the library-wide default (lowest column index wins).
enum class PivotRule { pivot_first, pivot_last };

struct Echelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
std::vector<Vector> kernel_basis(const Matrix& m);
/// Throws Singular when m is not invertible, DimensionMismatch if not square.
Matrix invert(const Matrix& m);
bool invertible(const Matrix& m);
/// Some x with m x = b; NoSolution if b lies outside the column span.
Vector solve(const Matrix& m, std::span<const Scalar> b, PivotRule rule = PivotRule::pivot_first);
bool in_span(const std::vector<Vector>& vectors, std::span<const Scalar> v);
/// Reduced row echelon basis of the column space of m (as columns of the result).
Matrix column_space_basis(const Matrix& m);

/// Coordinates c[i][j][k] of b_i . b_j = sum_k c[i][j][k] b_k.
class StructureTensor {
 public:
  StructureTensor() = default;
  StructureTensor(FieldSpec field, std::size_t dim);

  [[nodiscard]] const FieldSpec& field() const { return field_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] bool is_zero() const;

  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return entries_[(i * dim_ + j) * dim_ + k]; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * dim_ + j) * dim_ + k];
  }
  [[nodiscard]] std::span<const Scalar> entries() const { return entries_; }
  [[nodiscard]] std::span<Scalar> entries() { return entries_; }

  /// Coordinates of b_i . b_j.
  [[nodiscard]] Vector basis_product(std::size_t i, std::size_t j) const;
  [[nodiscard]] Vector apply(std::span<const Scalar> x, std::span<const Scalar> y) const;
  [[nodiscard]] StructureTensor scaled(const Scalar& s) const;

  friend StructureTensor operator+(const StructureTensor& a, const StructureTensor& b);
  friend bool operator==(const StructureTensor& a, const StructureTensor& b) = default;

 private:
  FieldSpec field_;
  std::size_t dim_ = 0;
  std::vector<Scalar> entries_;
};

}  // namespace dendrop
