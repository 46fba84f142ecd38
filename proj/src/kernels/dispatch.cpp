#include "dendrop/kernels.hpp"

#include "dendrop/error.hpp"

namespace dendrop::kernels {

namespace {

constexpr std::uint32_t kAvx2PrimeLimit = 1024;
constexpr std::size_t kMaxDim = 4;

void check_batch(Isa isa, Batch batch, std::size_t n) {
  if (n == 0 || n > kMaxDim) throw Error(ErrorCode::DimensionCap, "kernels support dimensions 1..4");
  if (batch.stride < batch.lanes) throw Error(ErrorCode::DimensionMismatch, "batch stride below lane count");
  if (isa == Isa::avx2 && batch.stride % 8 != 0) {
    throw Error(ErrorCode::DimensionMismatch, "AVX2 batches need a stride that is a multiple of 8");
  }
}

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

Isa best_isa(std::uint32_t p) { return avx2_available() && p < kAvx2PrimeLimit ? Isa::avx2 : Isa::scalar; }

Isa effective_isa(Isa isa, std::uint32_t p) { return isa == Isa::avx2 ? best_isa(p) : Isa::scalar; }

void associativity(Isa isa, Batch batch, std::size_t n, std::uint32_t p, std::uint8_t* ok) {
  isa = effective_isa(isa, p);
  check_batch(isa, batch, n);
  isa == Isa::avx2 ? avx2::associativity(batch, n, p, ok) : scalar::associativity(batch, n, p, ok);
}

void dendriform_di(Isa isa, Batch batch, std::size_t n, std::uint32_t p, std::uint8_t* ok) {
  isa = effective_isa(isa, p);
  check_batch(isa, batch, n);
  isa == Isa::avx2 ? avx2::dendriform_di(batch, n, p, ok) : scalar::dendriform_di(batch, n, p, ok);
}

void rota_baxter(Isa isa, Batch batch, std::size_t n, std::uint32_t p, const std::uint32_t* algebra,
                 std::uint32_t weight, std::uint8_t* ok) {
  isa = effective_isa(isa, p);
  check_batch(isa, batch, n);
  isa == Isa::avx2 ? avx2::rota_baxter(batch, n, p, algebra, weight, ok)
                   : scalar::rota_baxter(batch, n, p, algebra, weight, ok);
}

}  // namespace dendrop::kernels
