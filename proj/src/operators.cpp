#include "dendrop/operators.hpp"

#include <utility>

namespace dendrop {

std::string_view to_string(OperatorKind kind) { return kind == OperatorKind::module ? "module" : "algebra"; }

BimoduleAlgebra OOperator::domain_algebra() const {
  if (kind != OperatorKind::algebra || !domain_product) {
    throw Error(ErrorCode::KindMismatch, "operator on a module has no domain product");
  }
  return {domain, *domain_product};
}

namespace {

void check_map_shape(const Bimodule& domain, const Matrix& map) {
  if (map.rows() != domain.over.dim() || map.cols() != domain.dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "operator matrix is " + std::to_string(map.rows()) + "x" + std::to_string(map.cols()) +
                    ", expected " + std::to_string(domain.over.dim()) + "x" + std::to_string(domain.dim));
  }
  if (!(map.field() == domain.field())) throw Error(ErrorCode::FieldMismatch, "operator matrix field");
}

// Shared body of the module and algebra identities:
// alpha(u)*alpha(v) = alpha(l(alpha(u))v) + alpha(u r(alpha(v))) [+ weight alpha(u.v)]
ValidationReport check_o_identity(const OOperator& op, const char* kind, ValidationOptions options) {
  check_map_shape(op.domain, op.map);
  const bool with_product = op.kind == OperatorKind::algebra;
  ReportBuilder rb(kind, options);
  const std::size_t m = op.domain.dim;
  const auto& a_prod = op.codomain().product;
  std::vector<Vector> images;
  std::vector<Matrix> lefts, rights;
  for (std::size_t u = 0; u < m; ++u) {
    images.push_back(op.map.column(u));
    lefts.push_back(op.domain.left_of(images.back()));
    rights.push_back(op.domain.right_of(images.back()));
  }
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      const Vector lhs = a_prod.apply(images[u], images[v]);
      Vector rhs = add(op.map.apply(lefts[u].column(v)), op.map.apply(rights[v].column(u)));
      if (with_product) {
        const Vector uv = op.domain_product->basis_product(u, v);
        rhs = add(rhs, scale(*op.weight, op.map.apply(uv)));
      }
      rb.check(with_product ? "a(u)*a(v)=a(l(a(u))v)+a(u r(a(v)))+w a(u.v)" : "a(u)*a(v)=a(l(a(u))v)+a(u r(a(v)))",
               {u, v}, lhs, rhs);
    }
  }
  return std::move(rb).finish();
}

}  // namespace

OOperator make_module_operator(Bimodule domain, Matrix map) {
  check_map_shape(domain, map);
  OOperator op;
  op.kind = OperatorKind::module;
  op.domain = std::move(domain);
  op.map = std::move(map);
  return op;
}

OOperator make_algebra_operator(BimoduleAlgebra domain, Matrix map, Scalar weight) {
  check_map_shape(domain.base, map);
  if (domain.product.dim() != domain.base.dim) throw Error(ErrorCode::DimensionMismatch, "domain product");
  if (!(weight.field() == domain.field())) throw Error(ErrorCode::FieldMismatch, "operator weight");
  OOperator op;
  op.kind = OperatorKind::algebra;
  op.domain = std::move(domain.base);
  op.domain_product = std::move(domain.product);
  op.weight = std::move(weight);
  op.map = std::move(map);
  return op;
}

ValidationReport validate_rota_baxter(const RotaBaxterOperator& rb, ValidationOptions options) {
  const std::size_t n = rb.algebra.dim();
  if (!rb.map.square() || rb.map.rows() != n) throw Error(ErrorCode::DimensionMismatch, "Rota-Baxter map");
  ReportBuilder report("rota_baxter", options);
  const auto& c = rb.algebra.product;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector px = rb.map.column(i);
    const Vector x = unit_vector(rb.algebra.field(), n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector py = rb.map.column(j);
      const Vector y = unit_vector(rb.algebra.field(), n, j);
      const Vector lhs = c.apply(px, py);
      Vector rhs = add(rb.map.apply(c.apply(px, y)), rb.map.apply(c.apply(x, py)));
      rhs = add(rhs, scale(rb.weight, rb.map.apply(c.basis_product(i, j))));
      report.check("P(x)P(y)=P(P(x)y)+P(xP(y))+wP(xy)", {i, j}, lhs, rhs);
    }
  }
  return std::move(report).finish();
}

ValidationReport validate_o_module(const OOperator& op, ValidationOptions options) {
  if (op.kind != OperatorKind::module) throw Error(ErrorCode::KindMismatch, "expected an operator on a module");
  return check_o_identity(op, "o_operator_module", options);
}

ValidationReport validate_o_algebra(const OOperator& op, ValidationOptions options) {
  if (op.kind != OperatorKind::algebra || !op.domain_product || !op.weight) {
    throw Error(ErrorCode::KindMismatch, "expected an operator on an algebra with a weight");
  }
  return check_o_identity(op, "o_operator_algebra", options);
}

ValidationReport validate_o_operator(const OOperator& op, ValidationOptions options) {
  return op.kind == OperatorKind::module ? validate_o_module(op, options) : validate_o_algebra(op, options);
}

OOperator rb_as_o_operator(const RotaBaxterOperator& rb) {
  return make_algebra_operator(canonical_bimodule(rb.algebra), rb.map, rb.weight);
}

OOperator rb_module_reading(const RotaBaxterOperator& rb) {
  return make_module_operator(canonical_bimodule(rb.algebra).base, rb.map);
}

OOperator as_module_operator(const OOperator& op) {
  OOperator out = op;
  out.kind = OperatorKind::module;
  out.domain_product.reset();
  out.weight.reset();
  return out;
}

OOperator as_algebra_operator(const OOperator& op, const Scalar& weight, std::optional<StructureTensor> product) {
  OOperator out = op;
  out.kind = OperatorKind::algebra;
  out.domain_product = product ? std::move(*product) : StructureTensor(op.field(), op.domain.dim);
  out.weight = weight;
  return out;
}

ValidationReport check_domain_morphism(const Bimodule& source, const std::optional<StructureTensor>& source_product,
                                       const Bimodule& target, const std::optional<StructureTensor>& target_product,
                                       const Matrix& g, ValidationOptions options) {
  if (g.rows() != target.dim || g.cols() != source.dim) throw Error(ErrorCode::DimensionMismatch, "morphism shape");
  if (source.over.dim() != target.over.dim()) throw Error(ErrorCode::DimensionMismatch, "acting algebras differ");
  ReportBuilder rb("domain_morphism", options);
  for (std::size_t i = 0; i < source.over.dim(); ++i) {
    const Matrix gl = g * source.left[i], lg = target.left[i] * g;
    const Matrix gr = g * source.right[i], rg = target.right[i] * g;
    for (std::size_t a = 0; a < source.dim; ++a) {
      rb.check("g(l1(x)v)=l2(x)g(v)", {i, a}, gl.column(a), lg.column(a));
      rb.check("g(v r1(x))=g(v)r2(x)", {i, a}, gr.column(a), rg.column(a));
    }
  }
  if (source_product && target_product) {
    for (std::size_t a = 0; a < source.dim; ++a) {
      for (std::size_t b = 0; b < source.dim; ++b) {
        rb.check("g(v.w)=g(v).g(w)", {a, b}, g.apply(source_product->basis_product(a, b)),
                 target_product->apply(g.column(a), g.column(b)));
      }
    }
  }
  return std::move(rb).finish();
}

ValidationReport check_multiplicative(const Algebra& a, const Matrix& f, ValidationOptions options) {
  const std::size_t n = a.dim();
  if (!f.square() || f.rows() != n) throw Error(ErrorCode::DimensionMismatch, "algebra map shape");
  ReportBuilder rb("algebra_morphism", options);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rb.check("f(x*y)=f(x)*f(y)", {i, j}, f.apply(a.product.basis_product(i, j)),
               a.product.apply(f.column(i), f.column(j)));
    }
  }
  return std::move(rb).finish();
}

Bimodule pull_back(const Bimodule& target, const Matrix& g) {
  const Matrix g_inv = invert(g);
  Bimodule out = target;
  for (auto& l : out.left) l = g_inv * l * g;
  for (auto& r : out.right) r = g_inv * r * g;
  return out;
}

BimoduleAlgebra pull_back(const BimoduleAlgebra& target, const Matrix& g) {
  const Matrix g_inv = invert(g);
  BimoduleAlgebra out{pull_back(target.base, g), StructureTensor(target.field(), target.dim())};
  for (std::size_t a = 0; a < target.dim(); ++a) {
    for (std::size_t b = 0; b < target.dim(); ++b) {
      const Vector prod = g_inv.apply(target.product.apply(g.column(a), g.column(b)));
      for (std::size_t k = 0; k < target.dim(); ++k) out.product.at(a, b, k) = prod[k];
    }
  }
  return out;
}

Bimodule twist_actions(const Bimodule& v, const Matrix& f_inverse) {
  Bimodule out = v;
  for (std::size_t i = 0; i < v.over.dim(); ++i) {
    const Vector pre = f_inverse.column(i);
    out.left[i] = v.left_of(pre);
    out.right[i] = v.right_of(pre);
  }
  return out;
}

namespace {

OOperator compose_impl(const OOperator& op, const Bimodule& source, const std::optional<StructureTensor>& product,
                       const Matrix& g) {
  if (!invertible(g)) throw Error(ErrorCode::NotInvertible, "domain isomorphism is singular");
  if (!(source.over == op.codomain())) {
    throw Error(ErrorCode::NotIntertwining, "source structure is over a different algebra");
  }
  const auto report = check_domain_morphism(source, product, op.domain, op.domain_product, g, {.max_violations = 1});
  if (!report.passed) {
    throw Error(ErrorCode::NotIntertwining, "g violates " + report.violations.front().axiom);
  }
  OOperator out = op;
  out.domain = source;
  out.domain_product = product;
  out.map = op.map * g;
  return out;
}

}  // namespace

OOperator compose_with_domain_iso(const OOperator& op, const Bimodule& source, const Matrix& g) {
  if (op.kind != OperatorKind::module) throw Error(ErrorCode::KindMismatch, "algebra operator needs a bimodule algebra source");
  return compose_impl(op, source, std::nullopt, g);
}

OOperator compose_with_domain_iso(const OOperator& op, const BimoduleAlgebra& source, const Matrix& g) {
  if (op.kind != OperatorKind::algebra) throw Error(ErrorCode::KindMismatch, "module operator needs a bimodule source");
  return compose_impl(op, source.base, source.product, g);
}

OOperator twist_by_range_automorphism(const OOperator& op, const Matrix& f) {
  if (!invertible(f)) throw Error(ErrorCode::NotInvertible, "range automorphism is singular");
  const auto mult = check_multiplicative(op.codomain(), f, {.max_violations = 1});
  if (!mult.passed) {
    const auto& v = mult.violations.front();
    throw Error(ErrorCode::NotMultiplicative, "f(x*y) != f(x)*f(y) at basis pair (" + std::to_string(v.indices[0]) +
                                                  "," + std::to_string(v.indices[1]) + "): " + to_string(v.lhs) +
                                                  " vs " + to_string(v.rhs));
  }
  OOperator out = op;
  out.domain = twist_actions(op.domain, invert(f));
  out.map = f * op.map;
  return out;
}

}  // namespace dendrop
