#include <doctest.h>

#include "dendrop/catalogue.hpp"
#include "dendrop/enumeration.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "test_util.hpp"

using namespace dendrop;
using namespace dendrop::testing;

namespace {

Bimodule with_left(const Algebra& a, std::size_t i, Matrix m) {
  Bimodule v = regular_bimodule(a);
  v.left[i] = std::move(m);
  return v;
}

}  // namespace

TEST_CASE("validate_associativity examples") {
  CHECK(validate_associativity(n2()).passed);
  CHECK(validate_associativity(dual_numbers()).passed);

  const auto r = validate_associativity(Algebra(T(kQ, 2, {{0, 0, 1, "1"}, {1, 0, 0, "1"}})));
  CHECK_FALSE(r.passed);
  REQUIRE(!r.violations.empty());
  CHECK(r.violations[0].indices == std::vector<std::size_t>{0, 0, 0});
  CHECK(r.violations[0].lhs == V(kQ, {"1", "0"}));
  CHECK(r.violations[0].rhs == V(kQ, {"0", "0"}));
  CHECK(r.structure_kind == "associative_algebra");
}

TEST_CASE("reports keep at most N violations but count all") {
  // dense 2-dim product failing on several triples
  const Algebra bad(T(kQ, 2, {{0, 0, 1, "1"}, {0, 1, 0, "1"}, {1, 0, 0, "1"}, {1, 1, 0, "1"}}));
  const auto all = validate_associativity(bad, {100});
  REQUIRE_FALSE(all.passed);
  const auto few = validate_associativity(bad, {1});
  CHECK(few.violations.size() == 1);
  CHECK(few.violation_count == all.violation_count);
  CHECK(all.violations.size() == all.violation_count);
}

TEST_CASE("validate_bimodule examples") {
  const Algebra a = n2();
  CHECK(validate_bimodule(zero_bimodule(a, 1)).passed);
  CHECK(validate_bimodule(regular_bimodule(a)).passed);

  // On k[x]/(x^2), zeroing L(x) gives the module through x -> 0, still a bimodule.
  const Algebra d = dual_numbers();
  CHECK(validate_bimodule(with_left(d, 1, Matrix(kQ, 2, 2))).passed);
  // Zeroing L(1) breaks l(1*x) = l(1)l(x) at the pair (e1, e2).
  const auto r = validate_bimodule(with_left(d, 0, Matrix(kQ, 2, 2)));
  CHECK_FALSE(r.passed);
  bool pair_12 = false;
  for (const auto& v : r.violations) pair_12 |= v.indices[0] == 0 && v.indices[1] == 1;
  CHECK(pair_12);
}

TEST_CASE("validate_bimodule_algebra examples") {
  const Algebra a = n2();
  Bimodule reg = regular_bimodule(a);
  CHECK(validate_bimodule_algebra({reg, StructureTensor(kQ, 2)}).passed);
  CHECK(validate_bimodule_algebra(canonical_bimodule(a)).passed);

  const auto r = validate_bimodule_algebra({reg, T(kQ, 2, {{0, 0, 1, "1"}})});
  CHECK_FALSE(r.passed);
  bool found = false;
  for (const auto& v : r.violations)
    found |= v.axiom == "(v.w)r(x)=v.(w r(x))" && v.indices == std::vector<std::size_t>{1, 0, 0} &&
             v.lhs == V(kQ, {"1", "0"}) && v.rhs == V(kQ, {"0", "0"});
  CHECK(found);

  // the L(x) -> 0 module on k[x]/(x^2) with its own product is not a bimodule algebra
  const Algebra d = dual_numbers();
  CHECK_FALSE(validate_bimodule_algebra({with_left(d, 1, Matrix(kQ, 2, 2)), d.product}).passed);
}

TEST_CASE("validate_dendriform_di examples") {
  CHECK(validate_dendriform_di(catalogue_entry("rb-2").dialgebra).passed);
  CHECK(validate_dendriform_di(catalogue_entry("extra-1").dialgebra).passed);
  const auto r = validate_dendriform_di(DendriformDi(T(kQ, 2, {{0, 0, 1, "1"}}), T(kQ, 2, {{0, 0, 0, "1"}})));
  CHECK_FALSE(r.passed);
  REQUIRE(!r.violations.empty());
  const auto& v = r.violations[0];
  CHECK(v.axiom == "(x<y)<z=x<(y*z)");
  CHECK(v.indices == std::vector<std::size_t>{0, 0, 0});
  CHECK(v.lhs == V(kQ, {"0", "0"}));
  CHECK(v.rhs == V(kQ, {"0", "1"}));
}

TEST_CASE("validate_dendriform_tri examples") {
  CHECK(validate_dendriform_tri(with_zero_dot(catalogue_entry("rb-3").dialgebra)).passed);
  const auto e = T(kQ, 2, {{1, 1, 0, "1"}});
  CHECK(validate_dendriform_tri(DendriformTri(e, e, e)).passed);
  const auto one = T(kQ, 1, {{0, 0, 0, "1"}});
  const auto r = validate_dendriform_tri(DendriformTri(one, StructureTensor(kQ, 1), one));
  CHECK_FALSE(r.passed);
  bool found = false;
  for (const auto& v : r.violations) found |= v.axiom == "(x<y).z=x.(y>z)" && v.lhs == V(kQ, {"1"}) && v.rhs == V(kQ, {"0"});
  CHECK(found);
}

TEST_CASE("star_product examples") {
  CHECK(star_product(catalogue_entry("rb-2").dialgebra).product == n2().product);
  CHECK(star_product(DendriformDi(StructureTensor(kQ, 2), StructureTensor(kQ, 2))).product.is_zero());
  const auto e = T(kQ, 2, {{1, 1, 0, "1"}});
  CHECK(star_product(DendriformTri(e, e, e)).product == T(kQ, 2, {{1, 1, 0, "3"}}));
}

TEST_CASE("canonical_bimodule examples") {
  const auto c = canonical_bimodule(n2());
  CHECK(c.base.left[0].is_zero());
  CHECK(c.base.left[1] == M(kQ, {{"0", "1"}, {"0", "0"}}));
  CHECK(c.base.right == c.base.left);
  CHECK(c.product == n2().product);
  const auto z = canonical_bimodule(zero_algebra(kQ, 2));
  for (const auto& m : z.base.left) CHECK(m.is_zero());
  for (const auto& m : z.base.right) CHECK(m.is_zero());
  const auto d = canonical_bimodule(dual_numbers());
  CHECK(d.base.left[0] == Matrix::identity(kQ, 2));
  CHECK(d.base.left[1] == M(kQ, {{"0", "0"}, {"1", "0"}}));
}

TEST_CASE("catalogue entries") {
  const auto cat = builtin_catalogue();
  CHECK(cat.size() == 11);
  const auto& fx = oracle_fixture()["catalogue_valid"];
  for (const auto& e : cat) {
    CHECK(validate_dendriform_di(e.dialgebra).passed == fx[e.name].get<bool>());
    CHECK(e.typo_corrected == !e.note.empty());
  }
  CHECK(catalogue_entry("rb-2").dialgebra.prec == T(kQ, 2, {{1, 1, 0, "1/2"}}));
  CHECK(catalogue_entry("rb-2").dialgebra.succ == T(kQ, 2, {{1, 1, 0, "1/2"}}));
  CHECK(catalogue_entry("extra-5").dialgebra.prec == T(kQ, 2, {{0, 0, 1, "1/3"}}));
  CHECK(catalogue_entry("extra-5").dialgebra.succ == T(kQ, 2, {{0, 0, 1, "2/3"}}));
  CHECK(catalogue_entry("rb-1").dialgebra.prec.is_zero());
  CHECK(catalogue_entry("rb-1").dialgebra.succ.is_zero());
  CHECK_ERROR(catalogue_entry("rb-7"), SchemaError);
}

TEST_CASE("literal extra-2 reading is not dendriform") {
  const DendriformDi literal(T(kQ, 2, {{0, 0, 0, "1"}, {0, 1, 1, "1"}}), T(kQ, 2, {{1, 0, 1, "1"}}));
  CHECK(validate_dendriform_di(literal).passed == oracle_fixture()["extra2_literal_valid"].get<bool>());
  CHECK(catalogue_entry("extra-2").typo_corrected);
}

TEST_CASE("property: splitting law, the star product of a dendriform structure is associative") {
  for (const auto& d : enumerate_dendriform_di(2, 2)) {
    CHECK(validate_associativity(star_product(d)).passed);
    CHECK(validate_dendriform_tri(with_zero_dot(d)).passed);
    CHECK(without_dot(with_zero_dot(d)) == d);
  }
  CaseFactory factory(3, 21);
  for (int i = 0; i < 100; ++i) {
    const auto c = factory.canonical_tri_case(1 + i % 3);
    const DendriformTri t = domain_dendriform_tri(c.op);
    CHECK(validate_associativity(star_product(t)).passed);
  }
}

TEST_CASE("validators agree with transported structures") {
  Rng rng(22);
  const FieldSpec f = FieldSpec::prime(3);
  for (const auto& a : seed_algebras(3, 3)) {
    const Matrix h = random_invertible(f, 3, rng);
    CHECK(validate_associativity(transport_algebra(a, h)).passed);
    CHECK(validate_bimodule_algebra(canonical_bimodule(transport_algebra(a, h))).passed);
  }
}
