#include <doctest.h>

#include "generators.hpp"
#include "test_util.hpp"

using namespace dendrop;
using namespace dendrop::testing;

TEST_CASE("scalars stay reduced") {
  CHECK(S("2/4").to_string() == "1/2");
  CHECK(S("-6/4").to_string() == "-3/2");
  CHECK(S("8/4").to_string() == "2");
  CHECK_ERROR(S("4/-8"), BadRational);
  const FieldSpec f5 = FieldSpec::prime(5);
  CHECK(Scalar(f5, -1).residue() == 4);
  CHECK(S(f5, "1/2").residue() == 3);
  CHECK((S(f5, "3") * S(f5, "2")).residue() == 1);
  CHECK_ERROR(S("1/0"), BadRational);
  CHECK_ERROR(S("one"), BadRational);
  CHECK_ERROR(S(f5, "1/5"), BadRational);
  CHECK_ERROR(Scalar(kQ).inverse(), DivisionByZero);
  CHECK_ERROR(FieldSpec::prime(4), InvalidField);
  CHECK_ERROR(FieldSpec::prime(1), InvalidField);
  CHECK_ERROR(S("1") + S(f5, "1"), FieldMismatch);
}

TEST_CASE("big rationals do not overflow") {
  Scalar x = S("1");
  for (int i = 0; i < 200; ++i) x *= S("3/2");
  for (int i = 0; i < 200; ++i) x /= S("3/2");
  CHECK(x.is_one());
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(Matrix::identity(kQ, 2)).empty());
  const auto k = kernel_basis(M(kQ, {{"1", "0"}, {"0", "0"}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == V(kQ, {"0", "1"}));
  const FieldSpec f2 = FieldSpec::prime(2);
  const auto k2 = kernel_basis(M(f2, {{"1", "1"}, {"1", "1"}}));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == V(f2, {"1", "1"}));
}

TEST_CASE("invert examples") {
  CHECK(invert(Matrix::identity(kQ, 3)) == Matrix::identity(kQ, 3));
  CHECK(invert(diag(kQ, {"1/2", "1/8"})) == diag(kQ, {"2", "8"}));
  const FieldSpec f2 = FieldSpec::prime(2);
  const Matrix u = M(f2, {{"1", "1"}, {"0", "1"}});
  CHECK(invert(u) == u);
  CHECK_ERROR(invert(M(kQ, {{"1", "2"}, {"2", "4"}})), Singular);
  CHECK_ERROR(invert(Matrix(kQ, 2, 3)), DimensionMismatch);
}

TEST_CASE("solve examples") {
  CHECK(solve(Matrix::identity(kQ, 2), V(kQ, {"3", "4"})) == V(kQ, {"3", "4"}));
  const Matrix m = M(kQ, {{"1", "0"}, {"0", "0"}});
  CHECK(solve(m, V(kQ, {"5", "0"})) == V(kQ, {"5", "0"}));
  CHECK_ERROR(solve(m, V(kQ, {"0", "1"})), NoSolution);
}

TEST_CASE("solve pivot rules pick different preimages") {
  const Matrix m = M(kQ, {{"1", "1"}});
  CHECK(solve(m, V(kQ, {"2"}), PivotRule::pivot_first) == V(kQ, {"2", "0"}));
  CHECK(solve(m, V(kQ, {"2"}), PivotRule::pivot_last) == V(kQ, {"0", "2"}));
}

TEST_CASE("in_span examples") {
  const std::vector<Vector> span{V(kQ, {"0", "1"})};
  CHECK(in_span(span, V(kQ, {"0", "7"})));
  CHECK_FALSE(in_span(span, V(kQ, {"1", "0"})));
  CHECK(in_span({}, V(kQ, {"0", "0"})));
  CHECK_FALSE(in_span({}, V(kQ, {"0", "1"})));
}

TEST_CASE("column_space_basis is the reduced basis of the image") {
  const Matrix m = M(kQ, {{"2", "4", "0"}, {"1", "2", "0"}});
  const Matrix b = column_space_basis(m);
  CHECK(b.cols() == 1);
  CHECK(b.column(0) == V(kQ, {"1", "1/2"}));
}

TEST_CASE("property: rank-nullity, inverses and solve over F_p") {
  Rng rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng() % 4, c = 1 + rng() % 4;
      const Matrix m = random_matrix(f, n, c, rng);
      const auto ker = kernel_basis(m);
      CHECK(ker.size() + rank(m) == c);
      for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
      const Vector x = random_matrix(f, c, 1, rng).column(0);
      const Vector b = m.apply(x);
      for (auto rule : {PivotRule::pivot_first, PivotRule::pivot_last}) CHECK(m.apply(solve(m, b, rule)) == b);
      CHECK(in_span([&] {
              std::vector<Vector> cols;
              for (std::size_t j = 0; j < c; ++j) cols.push_back(m.column(j));
              return cols;
            }(),
            b));
      const Matrix sq = random_matrix(f, n, n, rng);
      if (invertible(sq)) {
        CHECK(invert(sq) * sq == Matrix::identity(f, n));
        CHECK(sq * invert(sq) == Matrix::identity(f, n));
      } else {
        CHECK_ERROR(invert(sq), Singular);
      }
      CHECK(kernel_basis(m) == ker);  // deterministic
    }
  }
}

TEST_CASE("property: inverse over Q") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const Matrix m = random_invertible(kQ, n, rng);
    CHECK(invert(m) * m == Matrix::identity(kQ, n));
  }
}

TEST_CASE("tensor apply is bilinear") {
  Rng rng(13);
  const FieldSpec f = FieldSpec::prime(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const StructureTensor t = random_tensor(f, n, rng, 0.5);
    const Vector x = random_matrix(f, n, 1, rng).column(0), y = random_matrix(f, n, 1, rng).column(0),
                 z = random_matrix(f, n, 1, rng).column(0);
    const Scalar a = random_scalar(f, rng);
    CHECK(t.apply(add(x, scale(a, y)), z) == add(t.apply(x, z), scale(a, t.apply(y, z))));
    CHECK(t.apply(z, add(x, scale(a, y))) == add(t.apply(z, x), scale(a, t.apply(z, y))));
  }
}
