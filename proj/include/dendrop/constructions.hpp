#pragma once

// Dendriform structures built from O-operators: on the domain of any operator,
// on the range of an invertible one (or of one whose kernel is an ideal), and
// the canonical identity operator that recovers a given dendriform structure.

#include "dendrop/operators.hpp"

namespace dendrop {

/// u<v = u r(a(v)), u>v = l(a(u))v, u.v = w (u o v). InvalidOperator unless
/// the operator validates on a valid bimodule algebra over an associative A.
DendriformTri domain_dendriform_tri(const OOperator& op);
/// Same two products for a module-kind operator.
DendriformDi domain_dendriform_di(const OOperator& op);

/// a(u * v) = a(u) * a(v) on basis pairs, with * the sum of the products of d.
ValidationReport check_operator_homomorphism(const OOperator& op, const DendriformTri& d,
                                             ValidationOptions options = {});
ValidationReport check_operator_homomorphism(const OOperator& op, const DendriformDi& d,
                                             ValidationOptions options = {});

struct CanonicalTri {
  BimoduleAlgebra domain;  // (V, ., L_succ, R_prec) over (V, *)
  OOperator op;            // identity, weight 1
};

struct CanonicalDi {
  Bimodule domain;
  OOperator op;  // identity, module kind
};

/// InvalidDendriform if the input fails its validator.
CanonicalTri canonical_operator_from_tri(const DendriformTri& t);
CanonicalDi canonical_operator_from_di(const DendriformDi& d);

/// Whether ker a is a two-sided ideal of the domain product. Algebra kind only.
bool kernel_ideal_check(const OOperator& op);

/// x<y = a(a^-1(x) r(y)), x>y = a(l(x) a^-1(y)), x.y = a(w a^-1(x) o a^-1(y)).
/// Singular when the map is not invertible.
DendriformTri range_dendriform_tri(const OOperator& op);
DendriformDi range_dendriform_di(const OOperator& op);

struct QuotientRange {
  DendriformTri structure;  // in the image basis
  Matrix embedding;         // columns: image basis vectors inside A
};

/// Range structure on a(R) through a section s with a s = id on the image.
/// The image basis is the reduced echelon basis of the column space, so it
/// does not depend on the section rule. KernelNotIdeal when ker a is not an ideal.
QuotientRange range_dendriform_quotient(const OOperator& op, PivotRule rule = PivotRule::pivot_first);

/// Entrywise: product of a equals the sum of the dendriform products.
ValidationReport check_splitting(const DendriformTri& d, const Algebra& a, ValidationOptions options = {});
ValidationReport check_splitting(const DendriformDi& d, const Algebra& a, ValidationOptions options = {});

}  // namespace dendrop
