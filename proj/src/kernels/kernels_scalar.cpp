// Reference kernels: one candidate at a time, plain 64-bit arithmetic.

#include "dendrop/kernels.hpp"

#include <array>

namespace dendrop::kernels::scalar {

namespace {

constexpr std::size_t kMaxEntries = 64;  // n <= 4
using Local = std::array<std::uint64_t, kMaxEntries>;

void gather(Batch batch, std::size_t lane, std::size_t first, std::size_t count, Local& out) {
  for (std::size_t e = 0; e < count; ++e) out[e] = batch.soa[(first + e) * batch.stride + lane];
}

// sum_m A(i,j,m) B(m,l,k) == sum_m C(j,l,m) D(i,m,k) for all i,j,l,k.
bool composite_identity(const Local& A, const Local& B, const Local& C, const Local& D, std::size_t n,
                        std::uint64_t p) {
  auto at = [n](std::size_t a, std::size_t b, std::size_t c) { return (a * n + b) * n + c; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k) {
          std::uint64_t lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < n; ++m) {
            lhs += A[at(i, j, m)] * B[at(m, l, k)] % p;
            rhs += C[at(j, l, m)] * D[at(i, m, k)] % p;
          }
          if (lhs % p != rhs % p) return false;
        }
  return true;
}

}  // namespace

void associativity(Batch batch, std::size_t n, std::uint32_t p, std::uint8_t* ok) {
  const std::size_t n3 = n * n * n;
  Local c{};
  for (std::size_t l = 0; l < batch.lanes; ++l) {
    gather(batch, l, 0, n3, c);
    ok[l] = composite_identity(c, c, c, c, n, p);
  }
}

void dendriform_di(Batch batch, std::size_t n, std::uint32_t p, std::uint8_t* ok) {
  const std::size_t n3 = n * n * n;
  Local prec{}, succ{}, star{};
  for (std::size_t l = 0; l < batch.lanes; ++l) {
    gather(batch, l, 0, n3, prec);
    gather(batch, l, n3, n3, succ);
    for (std::size_t e = 0; e < n3; ++e) star[e] = (prec[e] + succ[e]) % p;
    // (x<y)<z = x<(y*z), (x>y)<z = x>(y<z), (x*y)>z = x>(y>z)
    ok[l] = composite_identity(prec, prec, star, prec, n, p) && composite_identity(succ, prec, prec, succ, n, p) &&
            composite_identity(star, succ, succ, succ, n, p);
  }
}

void rota_baxter(Batch batch, std::size_t n, std::uint32_t p, const std::uint32_t* algebra, std::uint32_t weight,
                 std::uint8_t* ok) {
  auto c = [&](std::size_t a, std::size_t b, std::size_t k) -> std::uint64_t { return algebra[(a * n + b) * n + k]; };
  Local P{};
  std::array<std::uint64_t, 4> sum{};
  for (std::size_t l = 0; l < batch.lanes; ++l) {
    gather(batch, l, 0, n * n, P);
    auto pm = [&](std::size_t r, std::size_t col) { return P[r * n + col]; };
    bool good = true;
    for (std::size_t i = 0; i < n && good; ++i) {
      for (std::size_t j = 0; j < n && good; ++j) {
        // P(x)y + xP(y) + w xy, then P of it
        for (std::size_t m = 0; m < n; ++m) {
          std::uint64_t s = weight * c(i, j, m) % p;
          for (std::size_t a = 0; a < n; ++a) s += pm(a, i) * c(a, j, m) % p + pm(a, j) * c(i, a, m) % p;
          sum[m] = s % p;
        }
        for (std::size_t k = 0; k < n; ++k) {
          std::uint64_t lhs = 0, rhs = 0;
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) lhs += pm(a, i) * pm(b, j) % p * c(a, b, k) % p;
          for (std::size_t m = 0; m < n; ++m) rhs += pm(k, m) * sum[m] % p;
          if (lhs % p != rhs % p) {
            good = false;
            break;
          }
        }
      }
    }
    ok[l] = good;
  }
}

}  // namespace dendrop::kernels::scalar
