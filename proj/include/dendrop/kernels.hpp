#pragma once

// Batched identity checks over F_p used by the enumeration filters.
//
// A batch holds `lanes` candidates in structure-of-arrays layout: entry e of
// candidate l lives at soa[e * stride + l]. Residues are in [0, p). The AVX2
// variants process 8 lanes at a time and need stride % 8 == 0; lanes between
// `lanes` and the next multiple of 8 must be readable (their results are
// discarded). Every variant writes ok[l] = 1 when candidate l passes.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace dendrop::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

struct Batch {
  const std::uint32_t* soa = nullptr;
  std::size_t stride = 0;
  std::size_t lanes = 0;
};

/// True when the running CPU has AVX2 and the binary carries the AVX2 path.
bool avx2_available();

/// Fastest variant that is exact for this prime. The AVX2 path keeps residues
/// in signed 32-bit lanes and is used for p < 1024.
Isa best_isa(std::uint32_t p);

/// Falls back to scalar when `isa` is unavailable or inexact for p.
Isa effective_isa(Isa isa, std::uint32_t p);

/// Candidates: one n^3 structure tensor each. (x*y)*z = x*(y*z).
void associativity(Isa isa, Batch batch, std::size_t n, std::uint32_t p, std::uint8_t* ok);

/// Candidates: prec tensor (n^3 entries) followed by succ tensor. The three
/// dendriform dialgebra axioms.
void dendriform_di(Isa isa, Batch batch, std::size_t n, std::uint32_t p, std::uint8_t* ok);

/// Candidates: an n x n matrix in row-major order. Rota-Baxter identity of
/// the given weight on the fixed algebra with tensor `algebra` (n^3 residues).
void rota_baxter(Isa isa, Batch batch, std::size_t n, std::uint32_t p, const std::uint32_t* algebra,
                 std::uint32_t weight, std::uint8_t* ok);

namespace scalar {
void associativity(Batch batch, std::size_t n, std::uint32_t p, std::uint8_t* ok);
void dendriform_di(Batch batch, std::size_t n, std::uint32_t p, std::uint8_t* ok);
void rota_baxter(Batch batch, std::size_t n, std::uint32_t p, const std::uint32_t* algebra, std::uint32_t weight,
                 std::uint8_t* ok);
}  // namespace scalar

namespace avx2 {
void associativity(Batch batch, std::size_t n, std::uint32_t p, std::uint8_t* ok);
void dendriform_di(Batch batch, std::size_t n, std::uint32_t p, std::uint8_t* ok);
void rota_baxter(Batch batch, std::size_t n, std::uint32_t p, const std::uint32_t* algebra, std::uint32_t weight,
                 std::uint8_t* ok);
}  // namespace avx2

}  // namespace dendrop::kernels
