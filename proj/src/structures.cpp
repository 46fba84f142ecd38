#include "dendrop/structures.hpp"

#include <utility>

namespace dendrop {

namespace {

// sum_a v_a t[a][k][.]  =  v . b_k
Vector right_mul(const StructureTensor& t, std::span<const Scalar> v, std::size_t k) {
  const std::size_t n = t.dim();
  Vector out = zero_vector(t.field(), n);
  for (std::size_t a = 0; a < n; ++a) {
    if (v[a].is_zero()) continue;
    for (std::size_t m = 0; m < n; ++m) {
      const Scalar& c = t.at(a, k, m);
      if (!c.is_zero()) out[m] += v[a] * c;
    }
  }
  return out;
}

// sum_a v_a t[i][a][.]  =  b_i . v
Vector left_mul(const StructureTensor& t, std::size_t i, std::span<const Scalar> v) {
  const std::size_t n = t.dim();
  Vector out = zero_vector(t.field(), n);
  for (std::size_t a = 0; a < n; ++a) {
    if (v[a].is_zero()) continue;
    for (std::size_t m = 0; m < n; ++m) {
      const Scalar& c = t.at(i, a, m);
      if (!c.is_zero()) out[m] += v[a] * c;
    }
  }
  return out;
}

void require_same_shape(const StructureTensor& a, const StructureTensor& b, const char* what) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, what);
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, what);
}

}  // namespace

std::vector<std::string> default_basis(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
  return out;
}

Algebra::Algebra(StructureTensor p, std::string n)
    : name(std::move(n)), basis(default_basis(p.dim())), product(std::move(p)) {}

Bimodule::Bimodule(Algebra o, std::size_t d, std::vector<Matrix> l, std::vector<Matrix> r)
    : over(std::move(o)), dim(d), basis(default_basis(d)), left(std::move(l)), right(std::move(r)) {}

Matrix Bimodule::left_of(std::span<const Scalar> x) const {
  Matrix out(field(), dim, dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) out = out + left.at(i).scaled(x[i]);
  }
  return out;
}

Matrix Bimodule::right_of(std::span<const Scalar> x) const {
  Matrix out(field(), dim, dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) out = out + right.at(i).scaled(x[i]);
  }
  return out;
}

Bimodule zero_bimodule(const Algebra& over, std::size_t dim) {
  std::vector<Matrix> zeros(over.dim(), Matrix(over.field(), dim, dim));
  return Bimodule(over, dim, zeros, zeros);
}

DendriformDi::DendriformDi(StructureTensor p, StructureTensor s, std::string n)
    : name(std::move(n)), basis(default_basis(p.dim())), prec(std::move(p)), succ(std::move(s)) {
  require_same_shape(prec, succ, "dendriform dialgebra products");
}

DendriformTri::DendriformTri(StructureTensor p, StructureTensor s, StructureTensor d, std::string n)
    : name(std::move(n)), basis(default_basis(p.dim())), prec(std::move(p)), succ(std::move(s)), dot(std::move(d)) {
  require_same_shape(prec, succ, "dendriform trialgebra products");
  require_same_shape(prec, dot, "dendriform trialgebra products");
}

DendriformTri with_zero_dot(const DendriformDi& d) {
  DendriformTri t(d.prec, d.succ, StructureTensor(d.field(), d.dim()), d.name);
  t.basis = d.basis;
  return t;
}

DendriformDi without_dot(const DendriformTri& t) {
  DendriformDi d(t.prec, t.succ, t.name);
  d.basis = t.basis;
  return d;
}

bool same_products(const DendriformDi& a, const DendriformDi& b) {
  return a.prec == b.prec && a.succ == b.succ;
}

bool same_products(const DendriformTri& a, const DendriformTri& b) {
  return a.prec == b.prec && a.succ == b.succ && a.dot == b.dot;
}

// ---------------------------------------------------------------------------

ReportBuilder::ReportBuilder(std::string kind, ValidationOptions options) : options_(options) {
  report_.structure_kind = std::move(kind);
}

bool ReportBuilder::check(const char* axiom, std::vector<std::size_t> indices, const Vector& lhs,
                          const Vector& rhs) {
  if (lhs == rhs) return true;
  report_.passed = false;
  ++report_.violation_count;
  if (report_.violations.size() < options_.max_violations) {
    report_.violations.push_back({axiom, std::move(indices), lhs, rhs});
  }
  return false;
}

void ReportBuilder::absorb(const ValidationReport& other) {
  if (other.passed) return;
  report_.passed = false;
  report_.violation_count += other.violation_count;
  for (const auto& v : other.violations) {
    if (report_.violations.size() >= options_.max_violations) break;
    report_.violations.push_back(v);
  }
}

ValidationReport ReportBuilder::finish() && { return std::move(report_); }

// ---------------------------------------------------------------------------

ValidationReport validate_associativity(const StructureTensor& t, ValidationOptions options) {
  ReportBuilder rb("associative_algebra", options);
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = t.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        rb.check("(x*y)*z=x*(y*z)", {i, j, k}, right_mul(t, ij, k), left_mul(t, i, t.basis_product(j, k)));
      }
    }
  }
  return std::move(rb).finish();
}

ValidationReport validate_associativity(const Algebra& alg, ValidationOptions options) {
  return validate_associativity(alg.product, options);
}

namespace {

void check_bimodule_shape(const Bimodule& v) {
  const std::size_t n = v.over.dim();
  if (v.left.size() != n || v.right.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "bimodule needs one left and one right matrix per algebra basis element");
  }
  if (v.basis.size() != v.dim) throw Error(ErrorCode::DimensionMismatch, "bimodule basis labels");
  for (const auto* family : {&v.left, &v.right}) {
    for (const auto& m : *family) {
      if (m.rows() != v.dim || m.cols() != v.dim) {
        throw Error(ErrorCode::DimensionMismatch, "action matrix must be " + std::to_string(v.dim) + "x" +
                                                      std::to_string(v.dim));
      }
      if (!(m.field() == v.field())) throw Error(ErrorCode::FieldMismatch, "action matrix field");
    }
  }
}

}  // namespace

ValidationReport validate_bimodule(const Bimodule& v, ValidationOptions options) {
  check_bimodule_shape(v);
  ReportBuilder rb("bimodule", options);
  const std::size_t n = v.over.dim();
  const auto& c = v.over.product;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector xy = c.basis_product(i, j);
      const Matrix l_xy = v.left_of(xy);
      const Matrix r_xy = v.right_of(xy);
      const Matrix l_l = v.left[i] * v.left[j];
      const Matrix r_r = v.right[j] * v.right[i];
      const Matrix r_after_l = v.right[j] * v.left[i];
      const Matrix l_after_r = v.left[i] * v.right[j];
      for (std::size_t a = 0; a < v.dim; ++a) {
        rb.check("l(x*y)v=l(x)(l(y)v)", {i, j, a}, l_xy.column(a), l_l.column(a));
        rb.check("v r(x*y)=(v r(x))r(y)", {i, j, a}, r_xy.column(a), r_r.column(a));
        rb.check("(l(x)v)r(y)=l(x)(v r(y))", {i, j, a}, r_after_l.column(a), l_after_r.column(a));
      }
    }
  }
  return std::move(rb).finish();
}

ValidationReport validate_bimodule_algebra(const BimoduleAlgebra& r, ValidationOptions options) {
  check_bimodule_shape(r.base);
  if (r.product.dim() != r.base.dim) throw Error(ErrorCode::DimensionMismatch, "bimodule algebra product");
  ReportBuilder rb("bimodule_algebra", options);
  rb.absorb(validate_bimodule(r.base, options));
  const auto& prod = r.product;
  const std::size_t n = r.base.over.dim();
  const std::size_t m = r.base.dim;
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix& l = r.base.left[i];
    const Matrix& rt = r.base.right[i];
    for (std::size_t a = 0; a < m; ++a) {
      const Vector lv = l.column(a);
      const Vector vr = rt.column(a);
      for (std::size_t b = 0; b < m; ++b) {
        const Vector vw = prod.basis_product(a, b);
        rb.check("l(x)(v.w)=(l(x)v).w", {i, a, b}, l.apply(vw), right_mul(prod, lv, b));
        rb.check("(v.w)r(x)=v.(w r(x))", {i, a, b}, rt.apply(vw), left_mul(prod, a, rt.column(b)));
        rb.check("(v r(x)).w=v.(l(x)w)", {i, a, b}, right_mul(prod, vr, b), left_mul(prod, a, l.column(b)));
      }
    }
  }
  ValidationReport assoc = validate_associativity(prod, options);
  rb.absorb(assoc);
  return std::move(rb).finish();
}

ValidationReport validate_dendriform_di(const DendriformDi& d, ValidationOptions options) {
  require_same_shape(d.prec, d.succ, "dendriform dialgebra products");
  ReportBuilder rb("dendriform_di", options);
  const std::size_t n = d.dim();
  const StructureTensor star = d.prec + d.succ;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x_prec_y = d.prec.basis_product(i, j);
      const Vector x_succ_y = d.succ.basis_product(i, j);
      const Vector x_star_y = star.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        rb.check("(x<y)<z=x<(y*z)", {i, j, k}, right_mul(d.prec, x_prec_y, k),
                 left_mul(d.prec, i, star.basis_product(j, k)));
        rb.check("(x>y)<z=x>(y<z)", {i, j, k}, right_mul(d.prec, x_succ_y, k),
                 left_mul(d.succ, i, d.prec.basis_product(j, k)));
        rb.check("x>(y>z)=(x*y)>z", {i, j, k}, left_mul(d.succ, i, d.succ.basis_product(j, k)),
                 right_mul(d.succ, x_star_y, k));
      }
    }
  }
  return std::move(rb).finish();
}

ValidationReport validate_dendriform_tri(const DendriformTri& t, ValidationOptions options) {
  require_same_shape(t.prec, t.succ, "dendriform trialgebra products");
  require_same_shape(t.prec, t.dot, "dendriform trialgebra products");
  ReportBuilder rb("dendriform_tri", options);
  const std::size_t n = t.dim();
  const StructureTensor star = t.prec + t.succ + t.dot;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector pr = t.prec.basis_product(i, j);
      const Vector su = t.succ.basis_product(i, j);
      const Vector dt = t.dot.basis_product(i, j);
      const Vector st = star.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vector y_pr_z = t.prec.basis_product(j, k);
        const Vector y_su_z = t.succ.basis_product(j, k);
        const Vector y_dt_z = t.dot.basis_product(j, k);
        const Vector y_st_z = star.basis_product(j, k);
        rb.check("(x<y)<z=x<(y*z)", {i, j, k}, right_mul(t.prec, pr, k), left_mul(t.prec, i, y_st_z));
        rb.check("(x>y)<z=x>(y<z)", {i, j, k}, right_mul(t.prec, su, k), left_mul(t.succ, i, y_pr_z));
        rb.check("(x*y)>z=x>(y>z)", {i, j, k}, right_mul(t.succ, st, k), left_mul(t.succ, i, y_su_z));
        rb.check("(x>y).z=x>(y.z)", {i, j, k}, right_mul(t.dot, su, k), left_mul(t.succ, i, y_dt_z));
        rb.check("(x<y).z=x.(y>z)", {i, j, k}, right_mul(t.dot, pr, k), left_mul(t.dot, i, y_su_z));
        rb.check("(x.y)<z=x.(y<z)", {i, j, k}, right_mul(t.prec, dt, k), left_mul(t.dot, i, y_pr_z));
        rb.check("(x.y).z=x.(y.z)", {i, j, k}, right_mul(t.dot, dt, k), left_mul(t.dot, i, y_dt_z));
      }
    }
  }
  return std::move(rb).finish();
}

Algebra star_product(const DendriformDi& d) {
  Algebra a(d.prec + d.succ);
  a.basis = d.basis;
  return a;
}

Algebra star_product(const DendriformTri& t) {
  Algebra a(t.prec + t.succ + t.dot);
  a.basis = t.basis;
  return a;
}

Bimodule regular_bimodule(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix l(a.field(), n, n), r(a.field(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        l(k, j) = a.product.at(i, j, k);
        r(k, j) = a.product.at(j, i, k);
      }
    }
    left.push_back(std::move(l));
    right.push_back(std::move(r));
  }
  Bimodule v(a, n, std::move(left), std::move(right));
  v.basis = a.basis;
  return v;
}

BimoduleAlgebra canonical_bimodule(const Algebra& a) {
  if (!validate_associativity(a, {.max_violations = 1}).passed) {
    throw Error(ErrorCode::NotAssociative, "canonical bimodule needs an associative algebra");
  }
  return {regular_bimodule(a), a.product};
}

}  // namespace dendrop
