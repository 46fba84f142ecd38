#pragma once

// Exhaustive enumeration over F_p in low dimension: associative products,
// Rota-Baxter operators and dendriform dialgebras, and the comparison between
// dialgebras coming from Rota-Baxter operators and all dialgebras.
//
// Candidates are ordered lexicographically by their entry tuples (row-major
// matrices, tensors in (i,j,k) order, prec before succ). Outputs keep that
// order whatever the number of workers.

#include <cstdint>
#include <optional>
#include <vector>

#include "dendrop/kernels.hpp"
#include "dendrop/operators.hpp"

namespace dendrop {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// DENDROP_BUDGET when set (SchemaError if it is not a positive integer),
/// kDefaultBudget otherwise.
std::uint64_t budget_from_env();

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;  // max candidates per search space
  unsigned workers = 0;                   // 0: hardware concurrency
  std::optional<kernels::Isa> isa;        // default: fastest exact variant
};

/// Candidate count p^entries, saturating at UINT64_MAX.
std::uint64_t candidate_count(std::uint32_t p, std::size_t entries);

/// All n^3 tensors over F_p passing the associativity check. BudgetExceeded
/// when p^(n^3) > budget.
std::vector<Algebra> enumerate_associative_products(std::size_t n, std::uint32_t p,
                                                    const EnumerationOptions& options = {});

/// All n x n matrices that are Rota-Baxter operators of the given weight on a.
/// FieldNotFinite over Q; BudgetExceeded when p^(n^2) > budget.
std::vector<RotaBaxterOperator> enumerate_rb_operators(const Algebra& a, const Scalar& weight,
                                                       const EnumerationOptions& options = {});

/// All (prec, succ) pairs satisfying the dialgebra axioms. BudgetExceeded when
/// p^(2 n^3) > budget.
std::vector<DendriformDi> enumerate_dendriform_di(std::size_t n, std::uint32_t p,
                                                  const EnumerationOptions& options = {});

struct PhiImageResult {
  std::vector<DendriformDi> all;
  std::vector<DendriformDi> image;              // subset of all, same order
  std::vector<RotaBaxterOperator> image_witness;  // first weight-0 operator giving image[i]
  std::vector<DendriformDi> missing;            // all minus image, same order
  bool image_subset = true;                     // every constructed dialgebra validated and lies in all
  std::size_t round_trip_failures = 0;          // canonical operator round trip over all
};

/// Dialgebras x<y = xP(y), x>y = P(x)y from weight-zero Rota-Baxter operators
/// on every associative product, against every dialgebra. A finite-field
/// analogue of the question over C, not a statement about it.
PhiImageResult phi_image_experiment(std::size_t n, std::uint32_t p, const EnumerationOptions& options = {});

}  // namespace dendrop
