// AVX2 kernels: 8 candidates per register, 32-bit residues.
//
// Reduction mod p is Barrett style with m = floor(2^32 / p): the quotient
// estimate mulhi(x, m) is short by at most one, fixed by one conditional
// subtraction. Callers guarantee p < 1024, so every value fed to reduce() is
// below p^2 + p < 2^21 and all lanes stay positive as signed 32-bit ints.

#include "dendrop/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace dendrop::kernels::avx2 {

namespace {

constexpr std::size_t kMaxEntries = 64;
using Regs = __m256i[kMaxEntries];

struct ModP {
  __m256i p;
  __m256i m;

  explicit ModP(std::uint32_t prime)
      : p(_mm256_set1_epi32(static_cast<int>(prime))),
        m(_mm256_set1_epi32(static_cast<int>((std::uint64_t{1} << 32) / prime))) {}

  [[nodiscard]] __m256i reduce(__m256i x) const {
    // high 32 bits of x * m, even lanes then odd lanes
    const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, m), 32);
    const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), m);
    const __m256i q = _mm256_blend_epi32(even, odd, 0b10101010);
    __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, p));
    r = _mm256_sub_epi32(r, _mm256_andnot_si256(_mm256_cmpgt_epi32(p, r), p));
    return r;
  }
  /// reduce(acc + a * b) with acc, a, b already reduced.
  [[nodiscard]] __m256i mul_add(__m256i acc, __m256i a, __m256i b) const {
    return reduce(_mm256_add_epi32(acc, _mm256_mullo_epi32(a, b)));
  }
  [[nodiscard]] __m256i add(__m256i a, __m256i b) const { return reduce(_mm256_add_epi32(a, b)); }
};

void load(Batch batch, std::size_t group, std::size_t first, std::size_t count, Regs& out) {
  for (std::size_t e = 0; e < count; ++e) {
    out[e] = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(batch.soa + (first + e) * batch.stride + group));
  }
}

// Lanes where sum_m A(i,j,m) B(m,l,k) != sum_m C(j,l,m) D(i,m,k) for some
// i,j,l,k, as an all-ones mask.
__m256i composite_failures(const Regs& A, const Regs& B, const Regs& C, const Regs& D, std::size_t n,
                           const ModP& mod) {
  auto at = [n](std::size_t a, std::size_t b, std::size_t c) { return (a * n + b) * n + c; };
  __m256i bad = _mm256_setzero_si256();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k) {
          __m256i lhs = _mm256_setzero_si256(), rhs = _mm256_setzero_si256();
          for (std::size_t m = 0; m < n; ++m) {
            lhs = mod.mul_add(lhs, A[at(i, j, m)], B[at(m, l, k)]);
            rhs = mod.mul_add(rhs, C[at(j, l, m)], D[at(i, m, k)]);
          }
          bad = _mm256_or_si256(bad, _mm256_xor_si256(_mm256_cmpeq_epi32(lhs, rhs), _mm256_set1_epi32(-1)));
        }
  return bad;
}

void store(__m256i bad, std::size_t group, std::size_t lanes, std::uint8_t* ok) {
  const auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(bad));
  for (std::size_t b = 0; b < 8 && group + b < lanes; ++b) ok[group + b] = ((mask >> (4 * b)) & 1) == 0;
}

}  // namespace

void associativity(Batch batch, std::size_t n, std::uint32_t p, std::uint8_t* ok) {
  const ModP mod(p);
  const std::size_t n3 = n * n * n;
  Regs c{};
  for (std::size_t g = 0; g < batch.lanes; g += 8) {
    load(batch, g, 0, n3, c);
    store(composite_failures(c, c, c, c, n, mod), g, batch.lanes, ok);
  }
}

void dendriform_di(Batch batch, std::size_t n, std::uint32_t p, std::uint8_t* ok) {
  const ModP mod(p);
  const std::size_t n3 = n * n * n;
  Regs prec{}, succ{}, star{};
  for (std::size_t g = 0; g < batch.lanes; g += 8) {
    load(batch, g, 0, n3, prec);
    load(batch, g, n3, n3, succ);
    for (std::size_t e = 0; e < n3; ++e) star[e] = mod.add(prec[e], succ[e]);
    __m256i bad = composite_failures(prec, prec, star, prec, n, mod);
    bad = _mm256_or_si256(bad, composite_failures(succ, prec, prec, succ, n, mod));
    bad = _mm256_or_si256(bad, composite_failures(star, succ, succ, succ, n, mod));
    store(bad, g, batch.lanes, ok);
  }
}

void rota_baxter(Batch batch, std::size_t n, std::uint32_t p, const std::uint32_t* algebra, std::uint32_t weight,
                 std::uint8_t* ok) {
  const ModP mod(p);
  Regs c{};
  for (std::size_t e = 0; e < n * n * n; ++e) c[e] = _mm256_set1_epi32(static_cast<int>(algebra[e]));
  auto cat = [&](std::size_t a, std::size_t b, std::size_t k) { return c[(a * n + b) * n + k]; };
  const __m256i w = _mm256_set1_epi32(static_cast<int>(weight));
  Regs P{};
  __m256i sum[4];
  for (std::size_t g = 0; g < batch.lanes; g += 8) {
    load(batch, g, 0, n * n, P);
    auto pm = [&](std::size_t r, std::size_t col) { return P[r * n + col]; };
    __m256i bad = _mm256_setzero_si256();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t m = 0; m < n; ++m) {
          __m256i s = mod.mul_add(_mm256_setzero_si256(), w, cat(i, j, m));
          for (std::size_t a = 0; a < n; ++a) {
            s = mod.mul_add(s, pm(a, i), cat(a, j, m));
            s = mod.mul_add(s, pm(a, j), cat(i, a, m));
          }
          sum[m] = s;
        }
        for (std::size_t k = 0; k < n; ++k) {
          __m256i lhs = _mm256_setzero_si256(), rhs = _mm256_setzero_si256();
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
              lhs = mod.mul_add(lhs, mod.mul_add(_mm256_setzero_si256(), pm(a, i), pm(b, j)), cat(a, b, k));
            }
          }
          for (std::size_t m = 0; m < n; ++m) rhs = mod.mul_add(rhs, pm(k, m), sum[m]);
          bad = _mm256_or_si256(bad, _mm256_xor_si256(_mm256_cmpeq_epi32(lhs, rhs), _mm256_set1_epi32(-1)));
        }
      }
    }
    store(bad, g, batch.lanes, ok);
  }
}

}  // namespace dendrop::kernels::avx2

#else

// Non-x86 builds: the dispatcher never selects these, they only satisfy the linker.
namespace dendrop::kernels::avx2 {
void associativity(Batch batch, std::size_t n, std::uint32_t p, std::uint8_t* ok) {
  scalar::associativity(batch, n, p, ok);
}
void dendriform_di(Batch batch, std::size_t n, std::uint32_t p, std::uint8_t* ok) {
  scalar::dendriform_di(batch, n, p, ok);
}
void rota_baxter(Batch batch, std::size_t n, std::uint32_t p, const std::uint32_t* algebra, std::uint32_t weight,
                 std::uint8_t* ok) {
  scalar::rota_baxter(batch, n, p, algebra, weight, ok);
}
}  // namespace dendrop::kernels::avx2

#endif
