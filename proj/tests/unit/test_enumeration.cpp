#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "dendrop/catalogue.hpp"
#include "dendrop/constructions.hpp"
#include "dendrop/enumeration.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace dendrop;
using namespace dendrop::testing;

namespace {

const FieldSpec kF2 = FieldSpec::prime(2);
const FieldSpec kF3 = FieldSpec::prime(3);

std::size_t fixture_count(const char* np, const char* key) {
  return oracle_fixture()["counts"][np][key].get<std::size_t>();
}

}  // namespace

TEST_CASE("candidate_count saturates") {
  CHECK(candidate_count(2, 8) == 256);
  CHECK(candidate_count(3, 27) == 7625597484987ull);
  CHECK(candidate_count(1021, 64) == UINT64_MAX);
}

TEST_CASE("enumerate_associative_products examples") {
  const auto one = enumerate_associative_products(1, 2);
  REQUIRE(one.size() == 2);
  CHECK(one[0].product.is_zero());
  CHECK(one[1].product == T(kF2, 1, {{0, 0, 0, "1"}}));
  CHECK(enumerate_associative_products(1, 3).size() == oracle_fixture()["assoc_counts"]["1,3"].get<std::size_t>());
  CHECK(enumerate_associative_products(2, 2).size() == fixture_count("2,2", "assoc"));
  CHECK_ERROR(enumerate_associative_products(3, 3), BudgetExceeded);
  const EnumerationOptions small{.budget = 100, .isa = std::nullopt};
  CHECK_ERROR(enumerate_associative_products(2, 2, small), BudgetExceeded);
  for (const auto& a : enumerate_associative_products(2, 3)) CHECK(validate_associativity(a).passed);
}

TEST_CASE("enumerate_rb_operators examples") {
  CHECK(enumerate_rb_operators(zero_algebra(kF2, 2), Scalar(kF2, 0)).size() == 16);
  const auto n2f2 = enumerate_rb_operators(n2(kF2), Scalar(kF2, 0));
  CHECK(n2f2.size() == oracle_fixture()["rb0_n2"]["2"].get<std::size_t>());
  bool has_zero = false, has_diag10 = false;
  for (const auto& rb : n2f2) {
    has_zero |= rb.map.is_zero();
    has_diag10 |= rb.map == diag(kF2, {"1", "0"});
  }
  CHECK(has_zero);
  CHECK(has_diag10);

  const auto n2f3 = enumerate_rb_operators(n2(kF3), Scalar(kF3, 0));
  CHECK(n2f3.size() == oracle_fixture()["rb0_n2"]["3"].get<std::size_t>());
  std::vector<std::vector<int>> diagonal;
  for (const auto& rb : n2f3)
    if (rb.map(0, 1).is_zero() && rb.map(1, 0).is_zero())
      diagonal.push_back({static_cast<int>(rb.map(0, 0).residue()), static_cast<int>(rb.map(1, 1).residue())});
  std::sort(diagonal.begin(), diagonal.end());
  CHECK(diagonal == oracle_fixture()["rb0_n2_f3_diagonal"].get<std::vector<std::vector<int>>>());
  for (const auto& rb : n2f3) CHECK(validate_rota_baxter(rb).passed);

  CHECK_ERROR(enumerate_rb_operators(n2(), S("0")), FieldNotFinite);
}

TEST_CASE("weight-0 Rota-Baxter pairs over all F_2 algebras") {
  for (std::size_t n : {1u, 2u}) {
    std::size_t pairs = 0;
    for (const auto& a : enumerate_associative_products(n, 2)) pairs += enumerate_rb_operators(a, Scalar(kF2, 0)).size();
    CHECK(pairs == fixture_count(n == 1 ? "1,2" : "2,2", "rb0_pairs"));
  }
}

TEST_CASE("enumerate_dendriform_di examples") {
  const auto one = enumerate_dendriform_di(1, 2);
  CHECK(one.size() == fixture_count("1,2", "dendriform_di"));
  CHECK((one[0].prec.is_zero() && one[0].succ.is_zero()));
  const auto two = enumerate_dendriform_di(2, 2);
  CHECK(two.size() == fixture_count("2,2", "dendriform_di"));
  const DendriformDi rb4(T(kF2, 2, {{1, 1, 0, "1"}}), StructureTensor(kF2, 2));
  CHECK(std::find(two.begin(), two.end(), rb4) != two.end());
  for (const auto& d : two) CHECK(validate_dendriform_di(d).passed);
}

TEST_CASE("phi_image_experiment matches the oracle") {
  for (const char* np : {"1,2", "2,2"}) {
    const std::size_t n = np[0] - '0';
    const auto r = phi_image_experiment(n, 2);
    CHECK(r.all.size() == fixture_count(np, "dendriform_di"));
    CHECK(r.image.size() == fixture_count(np, "image"));
    CHECK(r.missing.size() == fixture_count(np, "missing"));
    CHECK(r.image_subset == oracle_fixture()["counts"][np]["image_subset"].get<bool>());
    CHECK(r.round_trip_failures == 0);
    CHECK(r.image.size() + r.missing.size() == r.all.size());
    REQUIRE(r.image_witness.size() == r.image.size());
    for (std::size_t i = 0; i < r.image.size(); ++i) {
      const DendriformDi d = domain_dendriform_di(rb_module_reading(r.image_witness[i]));
      CHECK(same_products(d, r.image[i]));
    }
  }
}

TEST_CASE("serial, parallel and scalar-only runs give identical lists") {
  const EnumerationOptions serial{.workers = 1, .isa = kernels::Isa::scalar};
  const EnumerationOptions parallel{.workers = 4, .isa = std::nullopt};
  CHECK(enumerate_associative_products(2, 3, serial) == enumerate_associative_products(2, 3, parallel));
  CHECK(enumerate_dendriform_di(2, 2, serial) == enumerate_dendriform_di(2, 2, parallel));
  const Algebra a = dual_numbers(kF3);
  CHECK(enumerate_rb_operators(a, Scalar(kF3, 1), serial) == enumerate_rb_operators(a, Scalar(kF3, 1), parallel));
}

TEST_CASE("budget_from_env") {
  unsetenv("DENDROP_BUDGET");
  CHECK(budget_from_env() == kDefaultBudget);
  setenv("DENDROP_BUDGET", "1000", 1);
  CHECK(budget_from_env() == 1000);
  setenv("DENDROP_BUDGET", "lots", 1);
  CHECK_ERROR(budget_from_env(), SchemaError);
  unsetenv("DENDROP_BUDGET");
}
