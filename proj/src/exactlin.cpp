#include "dendrop/exactlin.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <utility>

namespace dendrop {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotIntertwining: return "NotIntertwining";
    case ErrorCode::NotMultiplicative: return "NotMultiplicative";
    case ErrorCode::InvalidOperator: return "InvalidOperator";
    case ErrorCode::InvalidDendriform: return "InvalidDendriform";
    case ErrorCode::KernelNotIdeal: return "KernelNotIdeal";
    case ErrorCode::FieldNotFinite: return "FieldNotFinite";
    case ErrorCode::DimensionCap: return "DimensionCap";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::BadRational: return "BadRational";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidField, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  return {FieldKind::prime, static_cast<std::uint32_t>(p)};
}

std::string FieldSpec::to_string() const {
  return finite() ? "F_" + std::to_string(p) : std::string("Q");
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

std::uint64_t reduce_signed(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint32_t p) {
  // Fermat; p is prime.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return result;
}

}  // namespace

Scalar::Scalar(FieldSpec field) : field_(field) {
  if (field.finite()) {
    value_ = std::uint64_t{0};
  } else {
    value_ = mpq_class(0);
  }
}

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
  if (field.finite()) {
    value_ = reduce_signed(value, field.p);
  } else {
    value_ = mpq_class(value);
  }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (!field.finite()) {
    mpq_class q(value);
    q.canonicalize();
    value_ = std::move(q);
    return;
  }
  const std::uint64_t den = reduce_mpz(value.get_den(), field.p);
  if (den == 0) {
    throw Error(ErrorCode::BadRational,
                "denominator of " + value.get_str() + " vanishes in " + field.to_string());
  }
  const std::uint64_t num = reduce_mpz(value.get_num(), field.p);
  value_ = num * inverse_mod(den, field.p) % field.p;
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  const std::string s(text);
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::BadRational, "malformed rational \"" + s + "\"");
  }
  mpz_class n(num.front() == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw Error(ErrorCode::BadRational, "zero denominator in \"" + s + "\"");
  return Scalar(field, mpq_class(n, d));
}

bool Scalar::is_zero() const {
  if (field_.finite()) return std::get<std::uint64_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (field_.finite()) return std::get<std::uint64_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::check_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw Error(ErrorCode::FieldMismatch, field_.to_string() + " vs " + other.field_.to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Scalar out(field_);
  if (field_.finite()) {
    out.value_ = inverse_mod(std::get<std::uint64_t>(value_), field_.p);
  } else {
    out.value_ = mpq_class(1 / std::get<mpq_class>(value_));
  }
  return out;
}

std::string Scalar::to_string() const {
  if (field_.finite()) return std::to_string(std::get<std::uint64_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_field(rhs);
  if (field_.finite()) {
    auto& v = std::get<std::uint64_t>(value_);
    v = (v + std::get<std::uint64_t>(rhs.value_)) % field_.p;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_field(rhs);
  if (field_.finite()) {
    auto& v = std::get<std::uint64_t>(value_);
    v = (v + field_.p - std::get<std::uint64_t>(rhs.value_)) % field_.p;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_field(rhs);
  if (field_.finite()) {
    auto& v = std::get<std::uint64_t>(value_);
    v = v * std::get<std::uint64_t>(rhs.value_) % field_.p;
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::operator-() const {
  Scalar out(field_);
  return out -= *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

// ---------------------------------------------------------------------------
// Vectors

Vector zero_vector(FieldSpec field, std::size_t n) { return Vector(n, Scalar(field)); }

Vector unit_vector(FieldSpec field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = Scalar(field, 1);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector add");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vector subtract(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector subtract");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(const Scalar& s, std::span<const Scalar> v) {
  Vector out(v.begin(), v.end());
  for (auto& x : out) x *= s;
  return out;
}

std::string to_string(std::span<const Scalar> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].to_string();
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar(field)) {}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch, "matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                                                  " given " + std::to_string(entries_.size()) + " entries");
  }
  for (const auto& e : entries_) {
    if (!(e.field() == field)) throw Error(ErrorCode::FieldMismatch, "matrix entry field");
  }
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(field, 1);
  return m;
}

Matrix Matrix::from_strings(FieldSpec field, const std::vector<std::vector<std::string>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  std::vector<Scalar> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (const auto& s : row) entries.push_back(Scalar::parse(field, s));
  }
  return Matrix(field, r, c, std::move(entries));
}

Matrix Matrix::diagonal(FieldSpec field, std::span<const Scalar> diag) {
  Matrix m(field, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

bool Matrix::is_zero() const { return dendrop::is_zero(entries_); }

Vector Matrix::column(std::size_t c) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& e = (*this)(r, c);
      if (!e.is_zero()) out[r] += e * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& e : out.entries_) e *= s;
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

// ---------------------------------------------------------------------------
// Gaussian elimination. Columns are scanned left to right; the pivot row is the
// lowest-index row at or below the current one with a nonzero entry.

Echelon row_reduce(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    }
    const Scalar inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Scalar factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = Scalar(m.field(), 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix invert(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(m.field(), 1);
  }
  const Echelon e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
    throw Error(ErrorCode::Singular, "matrix is not invertible");
  }
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

bool invertible(const Matrix& m) { return m.square() && rank(m) == m.rows(); }

Vector solve(const Matrix& m, std::span<const Scalar> b, PivotRule rule) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  const std::size_t n = m.cols();
  // pivot_last eliminates on the column-reversed system.
  auto source_col = [&](std::size_t c) { return rule == PivotRule::pivot_first ? c : n - 1 - c; };
  Matrix aug(m.field(), m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, source_col(c));
    aug(r, n) = b[r];
  }
  const Echelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) throw Error(ErrorCode::NoSolution, "vector not in column span");
  Vector x = zero_vector(m.field(), n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[source_col(e.pivots[r])] = e.reduced(r, n);
  return x;
}

bool in_span(const std::vector<Vector>& vectors, std::span<const Scalar> v) {
  if (is_zero(v)) return true;
  if (vectors.empty()) return false;
  const FieldSpec field = v.front().field();
  Matrix m = Matrix::from_columns(field, v.size(), vectors);
  std::vector<Vector> with = vectors;
  with.emplace_back(v.begin(), v.end());
  return rank(Matrix::from_columns(field, v.size(), with)) == rank(m);
}

Matrix column_space_basis(const Matrix& m) {
  const Echelon e = row_reduce(m.transpose());
  Matrix basis(m.field(), m.rows(), e.pivots.size());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t c = 0; c < m.rows(); ++c) basis(c, r) = e.reduced(r, c);
  return basis;
}

// ---------------------------------------------------------------------------
// StructureTensor

StructureTensor::StructureTensor(FieldSpec field, std::size_t dim)
    : field_(field), dim_(dim), entries_(dim * dim * dim, Scalar(field)) {}

bool StructureTensor::is_zero() const { return dendrop::is_zero(entries_); }

Vector StructureTensor::basis_product(std::size_t i, std::size_t j) const {
  Vector out;
  out.reserve(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out.push_back(at(i, j, k));
  return out;
}

Vector StructureTensor::apply(std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "bilinear product");
  Vector out = zero_vector(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = at(i, j, k);
        if (!c.is_zero()) out[k] += xy * c;
      }
    }
  }
  return out;
}

StructureTensor StructureTensor::scaled(const Scalar& s) const {
  StructureTensor out = *this;
  for (auto& e : out.entries_) e *= s;
  return out;
}

StructureTensor operator+(const StructureTensor& a, const StructureTensor& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::DimensionMismatch, "tensor sum");
  StructureTensor out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

}  // namespace dendrop
