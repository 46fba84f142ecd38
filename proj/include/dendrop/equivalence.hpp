#pragma once

// Isomorphism and equivalence of O-operators and of dendriform structures,
// checked against explicit witnesses, plus exhaustive search over GL_n(F_p).

#include <cstdint>
#include <optional>

#include "dendrop/operators.hpp"

namespace dendrop {

enum class WitnessRole { dendriform_iso, operator_iso_g, range_automorphism_f };

struct IsoWitness {
  Matrix F;
  WitnessRole role = WitnessRole::dendriform_iso;
};

/// F(x op1 y) = F(x) op2 F(y) for every product. NotInvertible if F is singular.
ValidationReport verify_dendriform_iso(const DendriformDi& d1, const DendriformDi& d2, const Matrix& F,
                                       ValidationOptions options = {});
ValidationReport verify_dendriform_iso(const DendriformTri& d1, const DendriformTri& d2, const Matrix& F,
                                       ValidationOptions options = {});

/// g is a domain isomorphism and a1 = a2 g. NotInvertible if g is singular.
ValidationReport verify_operator_iso(const OOperator& op1, const OOperator& op2, const Matrix& g,
                                     ValidationOptions options = {});

/// f a1 = a2 g, with g an isomorphism from op1's domain with actions twisted
/// by f^-1 onto op2's domain. NotInvertible for singular f or g,
/// NotMultiplicative if f is not an automorphism of the codomain.
ValidationReport verify_operator_equiv(const OOperator& op1, const OOperator& op2, const Matrix& f,
                                       const Matrix& g, ValidationOptions options = {});

struct Intertwiner {
  Matrix g;  // a2^-1 a1
  ValidationReport report;
};

/// Singular unless both maps are invertible.
Intertwiner induced_intertwiner(const OOperator& op1, const OOperator& op2);

struct IsoSearchOptions {
  std::size_t max_dim = 3;
  unsigned workers = 0;  // 0: hardware concurrency
};

struct IsoSearchResult {
  std::optional<IsoWitness> witness;
  std::uint64_t examined = 0;  // invertible candidates checked, witness included
};

/// First F in row-major lexicographic order over GL_n(F_p) that verifies.
/// FieldNotFinite over Q, DimensionCap above options.max_dim.
IsoSearchResult search_dendriform_iso_fp(const DendriformDi& d1, const DendriformDi& d2, IsoSearchOptions options = {});
IsoSearchResult search_dendriform_iso_fp(const DendriformTri& d1, const DendriformTri& d2,
                                         IsoSearchOptions options = {});

}  // namespace dendrop
