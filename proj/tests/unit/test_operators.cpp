#include <doctest.h>

#include "generators.hpp"
#include "test_util.hpp"

using namespace dendrop;
using namespace dendrop::testing;

namespace {

RotaBaxterOperator rb(const Algebra& a, Matrix m, const char* w) { return {a, std::move(m), S(a.field(), w)}; }

OOperator one_dim_module_op(const char* a1, const char* a2) {
  return make_module_operator(zero_bimodule(n2(), 1), M(kQ, {{a1}, {a2}}));
}

}  // namespace

TEST_CASE("validate_rota_baxter examples") {
  const Algebra a = n2();
  for (const char* w : {"0", "1", "-3/2"}) CHECK(validate_rota_baxter(rb(a, Matrix(kQ, 2, 2), w)).passed);
  CHECK(validate_rota_baxter(rb(a, diag(kQ, {"1/4", "1/2"}), "0")).passed);
  CHECK_FALSE(validate_rota_baxter(rb(a, diag(kQ, {"1/8", "1/2"}), "0")).passed);
  const auto r = validate_rota_baxter(rb(a, Matrix::identity(kQ, 2), "0"));
  CHECK_FALSE(r.passed);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].indices == std::vector<std::size_t>{1, 1});
  CHECK(r.violations[0].lhs == V(kQ, {"1", "0"}));
  CHECK(r.violations[0].rhs == V(kQ, {"2", "0"}));
  CHECK(r.structure_kind == "rota_baxter");
}

TEST_CASE("weight-0 diagonal operators on N2 are diag(a, 2a) or diag(a, 0)") {
  for (const char* a : {"1", "-1/3", "5/7"}) {
    const Scalar x = S(a);
    const Vector good{x, x + x}, zero_tail{x, Scalar(kQ)}, off{x, x};
    CHECK(validate_rota_baxter({n2(), Matrix::diagonal(kQ, good), S("0")}).passed);
    CHECK(validate_rota_baxter({n2(), Matrix::diagonal(kQ, zero_tail), S("0")}).passed);
    CHECK_FALSE(validate_rota_baxter({n2(), Matrix::diagonal(kQ, off), S("0")}).passed);
  }
}

TEST_CASE("validate_o_module examples") {
  const Algebra zero = zero_algebra(kQ, 2);
  Rng rng(31);
  CHECK(validate_o_module(make_module_operator(zero_bimodule(zero, 3), random_matrix(kQ, 2, 3, rng))).passed);
  CHECK(validate_o_module(one_dim_module_op("1", "0")).passed);
  const auto r = validate_o_module(one_dim_module_op("0", "1"));
  CHECK_FALSE(r.passed);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].lhs == V(kQ, {"1", "0"}));
  CHECK(r.violations[0].rhs == V(kQ, {"0", "0"}));
  CHECK_ERROR(validate_o_algebra(one_dim_module_op("1", "0")), KindMismatch);
}

TEST_CASE("validate_o_algebra examples") {
  // zero product and weight 0 on top of a valid module operator
  const OOperator m = one_dim_module_op("1", "0");
  CHECK(validate_o_algebra(as_algebra_operator(m, S("0"))).passed);

  const auto can = canonical_bimodule(n2());
  CHECK(validate_o_algebra(make_algebra_operator(can, diag(kQ, {"1/3", "1"}), S("1"))).passed);
  const auto r = validate_o_algebra(make_algebra_operator(can, Matrix::identity(kQ, 2), S("1")));
  CHECK_FALSE(r.passed);
  REQUIRE(!r.violations.empty());
  CHECK(r.violations[0].indices == std::vector<std::size_t>{1, 1});
  CHECK(r.violations[0].lhs == V(kQ, {"1", "0"}));
  CHECK(r.violations[0].rhs == V(kQ, {"3", "0"}));
}

TEST_CASE("operator shape errors") {
  CHECK_ERROR(make_module_operator(zero_bimodule(n2(), 1), Matrix(kQ, 1, 1)), DimensionMismatch);
  CHECK_ERROR(make_module_operator(zero_bimodule(n2(), 1), Matrix(FieldSpec::prime(3), 2, 1)), FieldMismatch);
  CHECK_ERROR(validate_rota_baxter(rb(n2(), Matrix(kQ, 2, 3), "0")), DimensionMismatch);
}

TEST_CASE("rb_as_o_operator examples and the bridging law") {
  const Algebra a = n2();
  const OOperator op = rb_as_o_operator(rb(a, diag(kQ, {"1/4", "1/2"}), "0"));
  CHECK(op.kind == OperatorKind::algebra);
  CHECK(op.domain_algebra() == canonical_bimodule(a));
  CHECK(validate_o_algebra(op).passed);
  for (const char* w : {"0", "1", "2/5"}) CHECK(validate_o_algebra(rb_as_o_operator(rb(a, Matrix(kQ, 2, 2), w))).passed);
  CHECK_FALSE(validate_o_algebra(rb_as_o_operator(rb(a, Matrix::identity(kQ, 2), "0"))).passed);

  // validate_rota_baxter(P) and validate_o_algebra(rb_as_o_operator(P)) agree everywhere
  Rng rng(32);
  for (std::uint32_t p : {2u, 3u}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (const auto& alg : seed_algebras(p, 2)) {
      for (int i = 0; i < 10; ++i) {
        const RotaBaxterOperator cand{alg, random_matrix(f, 2, 2, rng), random_scalar(f, rng)};
        const bool direct = validate_rota_baxter(cand).passed;
        CHECK(validate_o_algebra(rb_as_o_operator(cand)).passed == direct);
        if (cand.weight.is_zero()) CHECK(validate_o_module(rb_module_reading(cand)).passed == direct);
      }
    }
  }
}

TEST_CASE("property: a module operator read with zero domain product and weight 0 is valid") {
  CaseFactory factory(3, 33);
  for (int i = 0; i < 60; ++i) {
    const auto c = factory.rb_module_case(1 + i % 3);
    REQUIRE(validate_o_module(c.op).passed);
    const OOperator alg = as_algebra_operator(c.op, Scalar(factory.field(), 0));
    CHECK(validate_o_algebra(alg).passed);
    CHECK(as_module_operator(alg).map == c.op.map);
  }
}

TEST_CASE("compose_with_domain_iso examples") {
  const OOperator op = rb_as_o_operator(rb(n2(), diag(kQ, {"1/4", "1/2"}), "0"));
  const BimoduleAlgebra dom = op.domain_algebra();
  CHECK(compose_with_domain_iso(op, dom, Matrix::identity(kQ, 2)) == op);

  const Matrix swap = M(kQ, {{"0", "1"}, {"1", "0"}});
  const OOperator sw = compose_with_domain_iso(op, pull_back(dom, swap), swap);
  CHECK(sw.map == M(kQ, {{"0", "1/4"}, {"1/2", "0"}}));
  CHECK(validate_o_algebra(sw).passed);

  CHECK_ERROR(compose_with_domain_iso(op, dom, M(kQ, {{"1", "1"}, {"1", "1"}})), NotInvertible);
  // a source that g does not intertwine
  CHECK_ERROR(compose_with_domain_iso(op, dom, swap), NotIntertwining);
  CHECK_ERROR(compose_with_domain_iso(op, dom.base, Matrix::identity(kQ, 2)), KindMismatch);
}

TEST_CASE("twist_by_range_automorphism examples") {
  const OOperator op = rb_as_o_operator(rb(n2(), diag(kQ, {"1/4", "1/2"}), "0"));
  CHECK(twist_by_range_automorphism(op, Matrix::identity(kQ, 2)) == op);
  const Matrix f = diag(kQ, {"4", "2"});
  const OOperator tw = twist_by_range_automorphism(op, f);
  CHECK(tw.map == f * op.map);
  CHECK(validate_o_algebra(tw).passed);
  CHECK_ERROR(twist_by_range_automorphism(op, diag(kQ, {"1", "2"})), NotMultiplicative);
  CHECK_ERROR(twist_by_range_automorphism(op, diag(kQ, {"0", "2"})), NotInvertible);
}

TEST_CASE("property: transports preserve validity") {
  for (std::uint32_t p : {3u, 5u}) {
    CaseFactory factory(p, 34 + p, p == 3 ? 3 : 2);
    for (int i = 0; i < 150; ++i) {
      const auto c = factory.any_case();
      CHECK(validate_o_operator(c.op).passed);
      const auto t = factory.transported(c);
      CHECK(validate_o_operator(t.op).passed);
      if (t.op.kind == OperatorKind::algebra) CHECK(validate_bimodule_algebra(t.op.domain_algebra()).passed);
      else CHECK(validate_bimodule(t.op.domain).passed);
    }
  }
}

TEST_CASE("check_multiplicative and check_domain_morphism") {
  CHECK(check_multiplicative(n2(), diag(kQ, {"4", "2"})).passed);
  CHECK_FALSE(check_multiplicative(n2(), diag(kQ, {"1", "2"})).passed);
  const BimoduleAlgebra c = canonical_bimodule(n2());
  CHECK(check_domain_morphism(c.base, c.product, c.base, c.product, Matrix::identity(kQ, 2)).passed);
  // multiplicative but not A-linear: g(e2 e2) = 4e1, e2 g(e2) = 2e1
  CHECK_FALSE(check_domain_morphism(c.base, c.product, c.base, c.product, diag(kQ, {"4", "2"})).passed);
  const Matrix g = M(kQ, {{"1", "2"}, {"0", "3"}});
  const BimoduleAlgebra src = pull_back(c, g);
  CHECK(check_domain_morphism(src.base, src.product, c.base, c.product, g).passed);
  CHECK(check_domain_morphism(src.base, std::nullopt, c.base, std::nullopt, g).passed);
}
