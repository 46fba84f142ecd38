#include <doctest.h>

#include "dendrop/enumeration.hpp"
#include "dendrop/kernels.hpp"
#include "generators.hpp"
#include "test_util.hpp"

using namespace dendrop;
using namespace dendrop::testing;
namespace k = dendrop::kernels;

namespace {

// Candidates in SoA layout with stride rounded up to a multiple of 8; padding
// lanes hold garbage so that reads past `lanes` would show up.
struct SoA {
  std::vector<std::uint32_t> data;
  std::size_t stride = 0, lanes = 0;

  SoA(const std::vector<std::vector<std::uint32_t>>& cands, std::size_t entries, Rng& rng) {
    lanes = cands.size();
    stride = (lanes + 7) / 8 * 8 + 8;
    data.assign(entries * stride, 0);
    for (auto& v : data) v = static_cast<std::uint32_t>(rng() % 2);
    for (std::size_t l = 0; l < lanes; ++l)
      for (std::size_t e = 0; e < entries; ++e) data[e * stride + l] = cands[l][e];
  }
  [[nodiscard]] k::Batch batch() const { return {data.data(), stride, lanes}; }
};

std::vector<std::uint32_t> residues(const StructureTensor& t) {
  std::vector<std::uint32_t> r;
  for (const auto& s : t.entries()) r.push_back(s.residue());
  return r;
}

std::vector<std::uint32_t> random_residues(std::size_t n, std::uint32_t p, Rng& rng) {
  std::vector<std::uint32_t> r(n);
  for (auto& x : r) x = static_cast<std::uint32_t>(rng() % p);
  return r;
}

StructureTensor tensor_of(const FieldSpec& f, std::size_t n, const std::uint32_t* r) {
  StructureTensor t(f, n);
  for (std::size_t e = 0; e < n * n * n; ++e) t.entries()[e] = Scalar(f, static_cast<long>(r[e]));
  return t;
}

}  // namespace

TEST_CASE("dispatch reports the running ISA") {
  CHECK(k::effective_isa(k::Isa::scalar, 3) == k::Isa::scalar);
  CHECK(k::effective_isa(k::Isa::avx2, 1031) == k::Isa::scalar);
  if (k::avx2_available()) CHECK(k::best_isa(3) == k::Isa::avx2);
  MESSAGE("avx2 available: " << k::avx2_available());
}

TEST_CASE("dispatch rejects bad shapes") {
  std::vector<std::uint32_t> buf(8 * 125);
  std::uint8_t ok[8];
  CHECK_ERROR(k::associativity(k::Isa::scalar, {buf.data(), 8, 8}, 5, 3, ok), DimensionCap);
  CHECK_ERROR(k::associativity(k::Isa::scalar, {buf.data(), 8, 8}, 0, 3, ok), DimensionCap);
  CHECK_ERROR(k::associativity(k::Isa::scalar, {buf.data(), 4, 8}, 1, 3, ok), DimensionMismatch);
}

TEST_CASE("associativity kernels agree with each other and with the validator") {
  Rng rng(61);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 1021u}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (std::size_t n = 1; n <= 4; ++n) {
      const std::size_t n3 = n * n * n;
      std::vector<std::vector<std::uint32_t>> cands;
      // associative ones moved by random bases, plus random tensors
      const auto seeds = n <= 3 && p <= 5 ? seed_algebras(p, n) : std::vector<Algebra>{zero_algebra(f, n)};
      for (int i = 0; i < 37; ++i) {
        if (i % 2) {
          const Algebra& a = seeds[rng() % seeds.size()];
          cands.push_back(residues(transport_algebra(a, random_invertible(f, n, rng)).product));
        } else {
          cands.push_back(random_residues(n3, p, rng));
        }
      }
      const SoA soa(cands, n3, rng);
      std::vector<std::uint8_t> s(cands.size()), v(cands.size());
      k::scalar::associativity(soa.batch(), n, p, s.data());
      k::associativity(k::Isa::avx2, soa.batch(), n, p, v.data());
      CHECK(s == v);
      for (std::size_t l = 0; l < cands.size(); ++l)
        CHECK(static_cast<bool>(s[l]) == validate_associativity(tensor_of(f, n, cands[l].data())).passed);
    }
  }
}

TEST_CASE("dendriform kernels agree with each other and with the validator") {
  Rng rng(62);
  for (std::uint32_t p : {2u, 3u, 5u, 1021u}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (std::size_t n = 1; n <= 3; ++n) {
      const std::size_t n3 = n * n * n;
      std::vector<std::vector<std::uint32_t>> cands;
      for (int i = 0; i < 29; ++i) {
        if (i % 3 == 0 && p <= 5) {
          // a valid one from a random weight-0 module operator
          CaseFactory factory(p, rng(), 3);
          const DendriformDi d = domain_dendriform_di(factory.rb_module_case(n).op);
          auto r = residues(d.prec);
          const auto s = residues(d.succ);
          r.insert(r.end(), s.begin(), s.end());
          cands.push_back(r);
        } else {
          cands.push_back(random_residues(2 * n3, p, rng));
        }
      }
      const SoA soa(cands, 2 * n3, rng);
      std::vector<std::uint8_t> s(cands.size()), v(cands.size());
      k::scalar::dendriform_di(soa.batch(), n, p, s.data());
      k::dendriform_di(k::Isa::avx2, soa.batch(), n, p, v.data());
      CHECK(s == v);
      for (std::size_t l = 0; l < cands.size(); ++l) {
        const DendriformDi d(tensor_of(f, n, cands[l].data()), tensor_of(f, n, cands[l].data() + n3));
        CHECK(static_cast<bool>(s[l]) == validate_dendriform_di(d).passed);
      }
    }
  }
}

TEST_CASE("Rota-Baxter kernels agree with each other and with the validator") {
  Rng rng(63);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 1021u}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto seeds = p <= 5 ? seed_algebras(p, n) : std::vector<Algebra>{zero_algebra(f, n)};
      const Algebra& a = seeds[rng() % seeds.size()];
      const auto alg = residues(a.product);
      for (std::uint32_t w : {0u, 1u, static_cast<std::uint32_t>(p - 1)}) {
        std::vector<std::vector<std::uint32_t>> cands;
        cands.push_back(std::vector<std::uint32_t>(n * n, 0));
        for (int i = 0; i < 20; ++i) cands.push_back(random_residues(n * n, p, rng));
        const SoA soa(cands, n * n, rng);
        std::vector<std::uint8_t> s(cands.size()), v(cands.size());
        k::scalar::rota_baxter(soa.batch(), n, p, alg.data(), w, s.data());
        k::rota_baxter(k::Isa::avx2, soa.batch(), n, p, alg.data(), w, v.data());
        CHECK(s == v);
        CHECK(s[0] == 1);
        for (std::size_t l = 0; l < cands.size(); ++l) {
          std::vector<Scalar> e;
          for (auto x : cands[l]) e.emplace_back(f, static_cast<long>(x));
          const RotaBaxterOperator rb{a, Matrix(f, n, n, std::move(e)), Scalar(f, static_cast<long>(w))};
          CHECK(static_cast<bool>(s[l]) == validate_rota_baxter(rb).passed);
        }
      }
    }
  }
}

TEST_CASE("AVX2 reduction is exact at the top of its range") {
  if (!k::avx2_available()) return;
  // all entries p-1 maximizes every intermediate
  for (std::uint32_t p : {2u, 1021u}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const std::size_t n3 = n * n * n;
      std::vector<std::vector<std::uint32_t>> cands(11, std::vector<std::uint32_t>(2 * n3, p - 1));
      Rng rng(64);
      const SoA soa(cands, 2 * n3, rng);
      std::vector<std::uint8_t> s(cands.size()), v(cands.size());
      k::scalar::dendriform_di(soa.batch(), n, p, s.data());
      k::avx2::dendriform_di(soa.batch(), n, p, v.data());
      CHECK(s == v);
      k::scalar::associativity(soa.batch(), n, p, s.data());
      k::avx2::associativity(soa.batch(), n, p, v.data());
      CHECK(s == v);
    }
  }
}
