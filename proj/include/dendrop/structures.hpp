#pragma once

// Algebras, bimodules, bimodule algebras and dendriform di/trialgebras in
// structure-constant form, with basis-wise validators.
//
// Nothing is validated at construction time. Validators check every basis
// pair/triple (bilinearity makes that equivalent to the identity on all
// elements) and keep the first few violations for diagnostics.

#include <cstddef>
#include <string>
#include <vector>

#include "dendrop/exactlin.hpp"

namespace dendrop {

/// Default basis labels e1..en.
std::vector<std::string> default_basis(std::size_t n);

struct Algebra {
  std::string name;
  std::vector<std::string> basis;
  StructureTensor product;

  Algebra() = default;
  explicit Algebra(StructureTensor product, std::string name = {});

  [[nodiscard]] std::size_t dim() const { return product.dim(); }
  [[nodiscard]] const FieldSpec& field() const { return product.field(); }

  friend bool operator==(const Algebra&, const Algebra&) = default;
};

/// Left action matrices left[i] = l(b_i) and right action matrices right[i]
/// with coords(v r(b_i)) = right[i] * coords(v). The right law
/// v r(x*y) = (v r(x)) r(y) therefore reads right(x*y) = right(y) right(x).
struct Bimodule {
  Algebra over;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<Matrix> left;
  std::vector<Matrix> right;

  Bimodule() = default;
  Bimodule(Algebra over, std::size_t dim, std::vector<Matrix> left, std::vector<Matrix> right);

  [[nodiscard]] const FieldSpec& field() const { return over.field(); }
  /// l(x) and r(x) for an arbitrary element x of the algebra.
  [[nodiscard]] Matrix left_of(std::span<const Scalar> x) const;
  [[nodiscard]] Matrix right_of(std::span<const Scalar> x) const;

  friend bool operator==(const Bimodule&, const Bimodule&) = default;
};

/// Bimodule with zero actions.
Bimodule zero_bimodule(const Algebra& over, std::size_t dim);

struct BimoduleAlgebra {
  Bimodule base;
  StructureTensor product;

  [[nodiscard]] std::size_t dim() const { return base.dim; }
  [[nodiscard]] const FieldSpec& field() const { return base.field(); }

  friend bool operator==(const BimoduleAlgebra&, const BimoduleAlgebra&) = default;
};

struct DendriformDi {
  std::string name;
  std::vector<std::string> basis;
  StructureTensor prec;
  StructureTensor succ;

  DendriformDi() = default;
  DendriformDi(StructureTensor prec, StructureTensor succ, std::string name = {});

  [[nodiscard]] std::size_t dim() const { return prec.dim(); }
  [[nodiscard]] const FieldSpec& field() const { return prec.field(); }

  friend bool operator==(const DendriformDi&, const DendriformDi&) = default;
};

struct DendriformTri {
  std::string name;
  std::vector<std::string> basis;
  StructureTensor prec;
  StructureTensor succ;
  StructureTensor dot;

  DendriformTri() = default;
  DendriformTri(StructureTensor prec, StructureTensor succ, StructureTensor dot, std::string name = {});

  [[nodiscard]] std::size_t dim() const { return prec.dim(); }
  [[nodiscard]] const FieldSpec& field() const { return prec.field(); }

  friend bool operator==(const DendriformTri&, const DendriformTri&) = default;
};

/// The trialgebra with the same two products and a zero third product.
DendriformTri with_zero_dot(const DendriformDi& d);
/// Drops the third product.
DendriformDi without_dot(const DendriformTri& t);
/// Same products, labels and names ignored.
bool same_products(const DendriformDi& a, const DendriformDi& b);
bool same_products(const DendriformTri& a, const DendriformTri& b);

struct Violation {
  std::string axiom;
  std::vector<std::size_t> indices;  // 0-based basis indices
  Vector lhs;
  Vector rhs;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  bool passed = true;
  std::string structure_kind;
  std::size_t violation_count = 0;  // total, including those not kept
  std::vector<Violation> violations;

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

struct ValidationOptions {
  std::size_t max_violations = 5;
};

/// Collects violations into a report, keeping at most max_violations.
class ReportBuilder {
 public:
  ReportBuilder(std::string kind, ValidationOptions options = {});

  /// Records a violation when lhs != rhs; returns whether they agreed.
  bool check(const char* axiom, std::vector<std::size_t> indices, const Vector& lhs, const Vector& rhs);
  void absorb(const ValidationReport& other);
  [[nodiscard]] ValidationReport finish() &&;

 private:
  ValidationReport report_;
  ValidationOptions options_;
};

ValidationReport validate_associativity(const Algebra& alg, ValidationOptions options = {});
ValidationReport validate_associativity(const StructureTensor& product, ValidationOptions options = {});
ValidationReport validate_bimodule(const Bimodule& v, ValidationOptions options = {});
ValidationReport validate_bimodule_algebra(const BimoduleAlgebra& r, ValidationOptions options = {});
ValidationReport validate_dendriform_di(const DendriformDi& d, ValidationOptions options = {});
ValidationReport validate_dendriform_tri(const DendriformTri& t, ValidationOptions options = {});

Algebra star_product(const DendriformDi& d);
Algebra star_product(const DendriformTri& t);

/// Left and right multiplication matrices of an algebra: L(b_i) y = b_i * y and
/// y R(b_i) = y * b_i in the orientation of Bimodule.
Bimodule regular_bimodule(const Algebra& a);
/// (A, *, L, R). Throws NotAssociative if a fails validate_associativity.
BimoduleAlgebra canonical_bimodule(const Algebra& a);

}  // namespace dendrop
