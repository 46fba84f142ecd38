#include "dendrop/constructions.hpp"

#include <utility>

namespace dendrop {

namespace {

// The domain construction is only guaranteed under the full hypothesis, so the
// operator identity and every structure it rests on are checked up front.
void require_valid_operator(const OOperator& op) {
  const ValidationOptions one{.max_violations = 1};
  auto refuse = [](const ValidationReport& r, const char* what) {
    if (r.passed) return;
    std::string msg = std::string(what) + " fails";
    if (!r.violations.empty()) msg += " " + r.violations.front().axiom;
    throw Error(ErrorCode::InvalidOperator, msg);
  };
  refuse(validate_associativity(op.codomain(), one), "codomain algebra");
  if (op.kind == OperatorKind::algebra) {
    refuse(validate_bimodule_algebra(op.domain_algebra(), one), "domain bimodule algebra");
    refuse(validate_o_algebra(op, one), "operator identity");
  } else {
    refuse(validate_bimodule(op.domain, one), "domain bimodule");
    refuse(validate_o_module(op, one), "operator identity");
  }
}

void fill(StructureTensor& t, std::size_t i, std::size_t j, const Vector& v) {
  for (std::size_t k = 0; k < v.size(); ++k) t.at(i, j, k) = v[k];
}

// prec and succ of the domain construction.
std::pair<StructureTensor, StructureTensor> domain_pair(const OOperator& op) {
  const std::size_t m = op.domain.dim;
  StructureTensor prec(op.field(), m), succ(op.field(), m);
  for (std::size_t u = 0; u < m; ++u) {
    const Vector image = op.map.column(u);
    const Matrix l = op.domain.left_of(image), r = op.domain.right_of(image);
    for (std::size_t v = 0; v < m; ++v) {
      fill(succ, u, v, l.column(v));  // l(a(u)) v
      fill(prec, v, u, r.column(v));  // v r(a(u))
    }
  }
  return {std::move(prec), std::move(succ)};
}

template <class D>
ValidationReport homomorphism_report(const OOperator& op, const D& d, ValidationOptions options) {
  if (d.dim() != op.domain.dim) throw Error(ErrorCode::DimensionMismatch, "dendriform and operator domain");
  const Algebra star = star_product(d);
  ReportBuilder rb("operator_homomorphism", options);
  for (std::size_t u = 0; u < d.dim(); ++u) {
    for (std::size_t v = 0; v < d.dim(); ++v) {
      rb.check("a(u*v)=a(u)*a(v)", {u, v}, op.map.apply(star.product.basis_product(u, v)),
               op.codomain().product.apply(op.map.column(u), op.map.column(v)));
    }
  }
  return std::move(rb).finish();
}

Bimodule succ_prec_bimodule(const Algebra& a, const StructureTensor& prec, const StructureTensor& succ) {
  const std::size_t n = a.dim();
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix l(a.field(), n, n), r(a.field(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        l(k, j) = succ.at(i, j, k);  // b_i > b_j
        r(k, j) = prec.at(j, i, k);  // b_j < b_i
      }
    }
    left.push_back(std::move(l));
    right.push_back(std::move(r));
  }
  Bimodule v(a, n, std::move(left), std::move(right));
  v.basis = a.basis;
  return v;
}

void require_postcondition(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidDendriform, std::string("canonical operator: ") + what);
}

void require_algebra_kind(const OOperator& op, const char* what) {
  if (op.kind != OperatorKind::algebra) throw Error(ErrorCode::KindMismatch, std::string(what) + " needs an algebra-kind operator");
}

void require_module_kind(const OOperator& op, const char* what) {
  if (op.kind != OperatorKind::module) throw Error(ErrorCode::KindMismatch, std::string(what) + " needs a module-kind operator");
}

}  // namespace

DendriformTri domain_dendriform_tri(const OOperator& op) {
  require_algebra_kind(op, "domain trialgebra");
  require_valid_operator(op);
  auto [prec, succ] = domain_pair(op);
  DendriformTri t(std::move(prec), std::move(succ), op.domain_product->scaled(*op.weight));
  t.basis = op.domain.basis;
  return t;
}

DendriformDi domain_dendriform_di(const OOperator& op) {
  require_module_kind(op, "domain dialgebra");
  require_valid_operator(op);
  auto [prec, succ] = domain_pair(op);
  DendriformDi d(std::move(prec), std::move(succ));
  d.basis = op.domain.basis;
  return d;
}

ValidationReport check_operator_homomorphism(const OOperator& op, const DendriformTri& d, ValidationOptions options) {
  return homomorphism_report(op, d, options);
}

ValidationReport check_operator_homomorphism(const OOperator& op, const DendriformDi& d, ValidationOptions options) {
  return homomorphism_report(op, d, options);
}

CanonicalTri canonical_operator_from_tri(const DendriformTri& t) {
  const auto report = validate_dendriform_tri(t, {.max_violations = 1});
  if (!report.passed) {
    throw Error(ErrorCode::InvalidDendriform, "input fails " + report.violations.front().axiom);
  }
  const Algebra a = star_product(t);
  BimoduleAlgebra domain{succ_prec_bimodule(a, t.prec, t.succ), t.dot};
  OOperator op = make_algebra_operator(domain, Matrix::identity(t.field(), t.dim()), Scalar(t.field(), 1));
  require_postcondition(validate_bimodule_algebra(domain, {.max_violations = 1}).passed, "bimodule algebra");
  require_postcondition(validate_o_algebra(op, {.max_violations = 1}).passed, "operator identity");
  require_postcondition(same_products(domain_dendriform_tri(op), t), "round trip");
  return {std::move(domain), std::move(op)};
}

CanonicalDi canonical_operator_from_di(const DendriformDi& d) {
  const auto report = validate_dendriform_di(d, {.max_violations = 1});
  if (!report.passed) {
    throw Error(ErrorCode::InvalidDendriform, "input fails " + report.violations.front().axiom);
  }
  Bimodule domain = succ_prec_bimodule(star_product(d), d.prec, d.succ);
  OOperator op = make_module_operator(domain, Matrix::identity(d.field(), d.dim()));
  require_postcondition(validate_bimodule(domain, {.max_violations = 1}).passed, "bimodule");
  require_postcondition(validate_o_module(op, {.max_violations = 1}).passed, "operator identity");
  require_postcondition(same_products(domain_dendriform_di(op), d), "round trip");
  return {std::move(domain), std::move(op)};
}

bool kernel_ideal_check(const OOperator& op) {
  require_algebra_kind(op, "kernel ideal check");
  const auto kernel = kernel_basis(op.map);
  const auto& prod = *op.domain_product;
  for (const auto& u : kernel) {
    for (std::size_t v = 0; v < op.domain.dim; ++v) {
      const Vector bv = unit_vector(op.field(), op.domain.dim, v);
      if (!in_span(kernel, prod.apply(u, bv)) || !in_span(kernel, prod.apply(bv, u))) return false;
    }
  }
  return true;
}

DendriformTri range_dendriform_tri(const OOperator& op) {
  require_algebra_kind(op, "range trialgebra");
  require_valid_operator(op);
  const Matrix inv = invert(op.map);
  const std::size_t n = op.codomain().dim();
  StructureTensor prec(op.field(), n), succ(op.field(), n), dot(op.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector pre_x = inv.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector pre_y = inv.column(j);
      fill(prec, i, j, op.map.apply(op.domain.right[j].apply(pre_x)));
      fill(succ, i, j, op.map.apply(op.domain.left[i].apply(pre_y)));
      fill(dot, i, j, op.map.apply(scale(*op.weight, op.domain_product->apply(pre_x, pre_y))));
    }
  }
  DendriformTri t(std::move(prec), std::move(succ), std::move(dot));
  t.basis = op.codomain().basis;
  return t;
}

DendriformDi range_dendriform_di(const OOperator& op) {
  require_module_kind(op, "range dialgebra");
  require_valid_operator(op);
  const Matrix inv = invert(op.map);
  const std::size_t n = op.codomain().dim();
  StructureTensor prec(op.field(), n), succ(op.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      fill(prec, i, j, op.map.apply(op.domain.right[j].apply(inv.column(i))));
      fill(succ, i, j, op.map.apply(op.domain.left[i].apply(inv.column(j))));
    }
  }
  DendriformDi d(std::move(prec), std::move(succ));
  d.basis = op.codomain().basis;
  return d;
}

QuotientRange range_dendriform_quotient(const OOperator& op, PivotRule rule) {
  require_algebra_kind(op, "quotient range");
  require_valid_operator(op);
  if (!kernel_ideal_check(op)) throw Error(ErrorCode::KernelNotIdeal, "kernel of the operator is not an ideal");
  const Matrix basis = column_space_basis(op.map);
  const std::size_t r = basis.cols();
  std::vector<Vector> image, section;
  for (std::size_t a = 0; a < r; ++a) {
    image.push_back(basis.column(a));
    section.push_back(solve(op.map, image.back(), rule));
  }
  auto coords = [&](const Vector& x) { return solve(basis, x); };
  StructureTensor prec(op.field(), r), succ(op.field(), r), dot(op.field(), r);
  for (std::size_t a = 0; a < r; ++a) {
    const Matrix l = op.domain.left_of(image[a]);
    for (std::size_t b = 0; b < r; ++b) {
      const Matrix rt = op.domain.right_of(image[b]);
      fill(prec, a, b, coords(op.map.apply(rt.apply(section[a]))));
      fill(succ, a, b, coords(op.map.apply(l.apply(section[b]))));
      fill(dot, a, b, coords(op.map.apply(scale(*op.weight, op.domain_product->apply(section[a], section[b])))));
    }
  }
  return {DendriformTri(std::move(prec), std::move(succ), std::move(dot)), basis};
}

namespace {

ValidationReport splitting_report(const StructureTensor& sum, const Algebra& a, ValidationOptions options) {
  if (sum.dim() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "splitting: dimensions differ");
  ReportBuilder rb("splitting", options);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      rb.check("x*y=sum of dendriform products", {i, j}, a.product.basis_product(i, j), sum.basis_product(i, j));
    }
  }
  return std::move(rb).finish();
}

}  // namespace

ValidationReport check_splitting(const DendriformTri& d, const Algebra& a, ValidationOptions options) {
  return splitting_report(d.prec + d.succ + d.dot, a, options);
}

ValidationReport check_splitting(const DendriformDi& d, const Algebra& a, ValidationOptions options) {
  return splitting_report(d.prec + d.succ, a, options);
}

}  // namespace dendrop
