#pragma once

// Rota-Baxter operators and O-operators (relative Rota-Baxter operators) on
// bimodules and bimodule algebras, their validators, and the transports along
// domain isomorphisms and range automorphisms.

#include <optional>

#include "dendrop/structures.hpp"

namespace dendrop {

enum class OperatorKind { module, algebra };

std::string_view to_string(OperatorKind kind);

/// A linear map alpha from a bimodule (or bimodule algebra) over A into A.
/// The codomain A is domain.over. For algebra-kind operators the domain
/// carries its own product and the operator a weight.
struct OOperator {
  OperatorKind kind = OperatorKind::module;
  Bimodule domain;
  std::optional<StructureTensor> domain_product;  // algebra kind only
  std::optional<Scalar> weight;                   // algebra kind only
  Matrix map;                                     // dim A x dim domain

  [[nodiscard]] const Algebra& codomain() const { return domain.over; }
  [[nodiscard]] const FieldSpec& field() const { return domain.field(); }
  /// KindMismatch for module-kind operators.
  [[nodiscard]] BimoduleAlgebra domain_algebra() const;

  friend bool operator==(const OOperator&, const OOperator&) = default;
};

/// Both check that the map is (dim A) x (dim domain); DimensionMismatch otherwise.
OOperator make_module_operator(Bimodule domain, Matrix map);
OOperator make_algebra_operator(BimoduleAlgebra domain, Matrix map, Scalar weight);

struct RotaBaxterOperator {
  Algebra algebra;
  Matrix map;
  Scalar weight;

  friend bool operator==(const RotaBaxterOperator&, const RotaBaxterOperator&) = default;
};

ValidationReport validate_rota_baxter(const RotaBaxterOperator& rb, ValidationOptions options = {});
/// KindMismatch unless op.kind == module.
ValidationReport validate_o_module(const OOperator& op, ValidationOptions options = {});
/// KindMismatch unless op.kind == algebra.
ValidationReport validate_o_algebra(const OOperator& op, ValidationOptions options = {});
/// Dispatches on op.kind.
ValidationReport validate_o_operator(const OOperator& op, ValidationOptions options = {});

/// The algebra-kind operator on (A, *, L, R) with the same matrix and weight.
OOperator rb_as_o_operator(const RotaBaxterOperator& rb);
/// The module-kind operator on (A, L, R); only meaningful for weight zero.
OOperator rb_module_reading(const RotaBaxterOperator& rb);
/// Forgets the domain product and weight (weight-zero algebra -> module).
OOperator as_module_operator(const OOperator& op);
/// Installs a domain product and weight on a module-kind operator. The
/// product defaults to zero.
OOperator as_algebra_operator(const OOperator& op, const Scalar& weight,
                              std::optional<StructureTensor> product = std::nullopt);

/// Checks that g : source -> target intertwines left and right actions (and
/// the products when both are given): g l1(x) = l2(x) g, g r1(x) = r2(x) g,
/// g(v .1 w) = g(v) .2 g(w). Invertibility is not checked here.
ValidationReport check_domain_morphism(const Bimodule& source, const std::optional<StructureTensor>& source_product,
                                       const Bimodule& target, const std::optional<StructureTensor>& target_product,
                                       const Matrix& g, ValidationOptions options = {});

/// f(x * y) = f(x) * f(y) on basis pairs.
ValidationReport check_multiplicative(const Algebra& a, const Matrix& f, ValidationOptions options = {});

/// Pulls a domain structure back along an invertible g : V1 -> V, giving the
/// unique structure on V1 that makes g an isomorphism (l1 = g^-1 l g, ...).
Bimodule pull_back(const Bimodule& target, const Matrix& g);
BimoduleAlgebra pull_back(const BimoduleAlgebra& target, const Matrix& g);

/// Replaces the actions x -> l(x), r(x) by x -> l(f^-1 x), r(f^-1 x).
Bimodule twist_actions(const Bimodule& v, const Matrix& f_inverse);

/// alpha o g on the supplied source structure. NotInvertible if g is
/// singular; NotIntertwining if g is not a morphism onto op's domain.
OOperator compose_with_domain_iso(const OOperator& op, const Bimodule& source, const Matrix& g);
OOperator compose_with_domain_iso(const OOperator& op, const BimoduleAlgebra& source, const Matrix& g);

/// f o alpha on the domain with actions l o f^-1 and r o f^-1.
/// NotInvertible if f is singular; NotMultiplicative if f is not an algebra map.
OOperator twist_by_range_automorphism(const OOperator& op, const Matrix& f);

}  // namespace dendrop
