#include "dendrop/equivalence.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <utility>

namespace dendrop {

namespace {

void require_invertible(const Matrix& m, const char* what) {
  if (!m.square() || !invertible(m)) throw Error(ErrorCode::NotInvertible, std::string(what) + " is not invertible");
}

void check_product(ReportBuilder& rb, const char* axiom, const StructureTensor& p1, const StructureTensor& p2,
                   const Matrix& F) {
  for (std::size_t i = 0; i < p1.dim(); ++i) {
    for (std::size_t j = 0; j < p1.dim(); ++j) {
      rb.check(axiom, {i, j}, F.apply(p1.basis_product(i, j)), p2.apply(F.column(i), F.column(j)));
    }
  }
}

void require_iso_shape(std::size_t n1, std::size_t n2, const Matrix& F) {
  if (n1 != n2 || F.rows() != n1 || F.cols() != n1) throw Error(ErrorCode::DimensionMismatch, "isomorphism shape");
}

void check_map_equation(ReportBuilder& rb, const char* axiom, const Matrix& lhs, const Matrix& rhs) {
  for (std::size_t c = 0; c < lhs.cols(); ++c) rb.check(axiom, {c}, lhs.column(c), rhs.column(c));
}

void check_weights(ReportBuilder& rb, const OOperator& op1, const OOperator& op2) {
  if (op1.kind != op2.kind) throw Error(ErrorCode::KindMismatch, "operators of different kinds");
  if (op1.kind == OperatorKind::algebra) rb.check("w1=w2", {}, {*op1.weight}, {*op2.weight});
}

// ---------------------------------------------------------------------------
// Search over GL_n(F_p) on raw residues.

using Residues = std::vector<std::uint64_t>;

Residues residues(const StructureTensor& t) {
  Residues out;
  for (const auto& s : t.entries()) out.push_back(s.residue());
  return out;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (b %= p; e; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

bool invertible_mod(Residues m, std::size_t n, std::uint64_t p) {
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv * n + c] == 0) ++piv;
    if (piv == n) return false;
    for (std::size_t k = 0; k < n; ++k) std::swap(m[c * n + k], m[piv * n + k]);
    const std::uint64_t inv = pow_mod(m[c * n + c], p - 2, p);
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::uint64_t f = m[r * n + c] * inv % p;
      if (f == 0) continue;
      for (std::size_t k = c; k < n; ++k) m[r * n + k] = (m[r * n + k] + (p - f) * m[c * n + k]) % p;
    }
  }
  return true;
}

struct SearchProblem {
  std::size_t n;
  std::uint64_t p;
  std::vector<std::pair<Residues, Residues>> products;

  bool verifies(const Residues& F) const {
    for (const auto& [c1, c2] : products) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t r = 0; r < n; ++r) {
            std::uint64_t lhs = 0, rhs = 0;
            for (std::size_t k = 0; k < n; ++k) lhs += c1[(i * n + j) * n + k] * F[r * n + k] % p;
            for (std::size_t a = 0; a < n; ++a) {
              const std::uint64_t fa = F[a * n + i];
              if (fa == 0) continue;
              for (std::size_t b = 0; b < n; ++b) rhs += fa * F[b * n + j] % p * c2[(a * n + b) * n + r] % p;
            }
            if (lhs % p != rhs % p) return false;
          }
        }
      }
    }
    return true;
  }
};

struct ChunkResult {
  std::uint64_t witness = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t invertible_seen = 0;  // up to and including the witness
};

Residues decode(std::uint64_t index, std::size_t entries, std::uint64_t p) {
  Residues F(entries);
  for (std::size_t e = entries; e-- > 0;) {
    F[e] = index % p;
    index /= p;
  }
  return F;
}

IsoSearchResult run_search(const SearchProblem& prob, const FieldSpec& field, IsoSearchOptions options) {
  const std::size_t entries = prob.n * prob.n;
  std::uint64_t total = 1;
  for (std::size_t e = 0; e < entries; ++e) total *= prob.p;
  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t chunks = std::min<std::uint64_t>(total, std::uint64_t{workers} * 8);
  std::vector<ChunkResult> results(chunks);
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::atomic<std::uint64_t> next_chunk{0};

  auto worker = [&] {
    for (std::uint64_t c; (c = next_chunk.fetch_add(1)) < chunks;) {
      const std::uint64_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
      ChunkResult& out = results[c];
      for (std::uint64_t idx = lo; idx < hi && idx < best.load(); ++idx) {
        const Residues F = decode(idx, entries, prob.p);
        if (!invertible_mod(F, prob.n, prob.p)) continue;
        ++out.invertible_seen;
        if (prob.verifies(F)) {
          out.witness = idx;
          std::uint64_t cur = best.load();
          while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
          }
          break;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // Chunks before the first witness ran to completion, so their counts are exact.
  IsoSearchResult result;
  for (const auto& r : results) {
    result.examined += r.invertible_seen;
    if (r.witness != std::numeric_limits<std::uint64_t>::max()) {
      const Residues F = decode(r.witness, entries, prob.p);
      std::vector<Scalar> vals;
      for (auto v : F) vals.emplace_back(field, static_cast<long>(v));
      result.witness = IsoWitness{Matrix(field, prob.n, prob.n, std::move(vals)), WitnessRole::dendriform_iso};
      break;
    }
  }
  return result;
}

SearchProblem make_problem(const FieldSpec& f1, const FieldSpec& f2, std::size_t n1, std::size_t n2,
                           IsoSearchOptions options) {
  if (!(f1 == f2)) throw Error(ErrorCode::FieldMismatch, "structures over different fields");
  if (!f1.finite()) throw Error(ErrorCode::FieldNotFinite, "isomorphism search needs a prime field");
  if (n1 != n2) throw Error(ErrorCode::DimensionMismatch, "structures of different dimensions");
  if (n1 > options.max_dim) {
    throw Error(ErrorCode::DimensionCap, "dimension " + std::to_string(n1) + " exceeds the search cap " +
                                             std::to_string(options.max_dim));
  }
  return {n1, f1.p, {}};
}

}  // namespace

ValidationReport verify_dendriform_iso(const DendriformDi& d1, const DendriformDi& d2, const Matrix& F,
                                       ValidationOptions options) {
  require_iso_shape(d1.dim(), d2.dim(), F);
  require_invertible(F, "F");
  ReportBuilder rb("dendriform_iso", options);
  check_product(rb, "F(x<y)=F(x)<F(y)", d1.prec, d2.prec, F);
  check_product(rb, "F(x>y)=F(x)>F(y)", d1.succ, d2.succ, F);
  return std::move(rb).finish();
}

ValidationReport verify_dendriform_iso(const DendriformTri& d1, const DendriformTri& d2, const Matrix& F,
                                       ValidationOptions options) {
  require_iso_shape(d1.dim(), d2.dim(), F);
  require_invertible(F, "F");
  ReportBuilder rb("dendriform_iso", options);
  check_product(rb, "F(x<y)=F(x)<F(y)", d1.prec, d2.prec, F);
  check_product(rb, "F(x>y)=F(x)>F(y)", d1.succ, d2.succ, F);
  check_product(rb, "F(x.y)=F(x).F(y)", d1.dot, d2.dot, F);
  return std::move(rb).finish();
}

ValidationReport verify_operator_iso(const OOperator& op1, const OOperator& op2, const Matrix& g,
                                     ValidationOptions options) {
  if (!(op1.codomain() == op2.codomain())) throw Error(ErrorCode::DimensionMismatch, "operators into different algebras");
  require_iso_shape(op1.domain.dim, op2.domain.dim, g);
  require_invertible(g, "g");
  ReportBuilder rb("operator_iso", options);
  check_weights(rb, op1, op2);
  rb.absorb(check_domain_morphism(op1.domain, op1.domain_product, op2.domain, op2.domain_product, g, options));
  check_map_equation(rb, "a1=a2 g", op1.map, op2.map * g);
  return std::move(rb).finish();
}

ValidationReport verify_operator_equiv(const OOperator& op1, const OOperator& op2, const Matrix& f, const Matrix& g,
                                       ValidationOptions options) {
  if (!(op1.codomain() == op2.codomain())) throw Error(ErrorCode::DimensionMismatch, "operators into different algebras");
  require_iso_shape(op1.codomain().dim(), op1.codomain().dim(), f);
  require_invertible(f, "f");
  const auto mult = check_multiplicative(op1.codomain(), f, {.max_violations = 1});
  if (!mult.passed) throw Error(ErrorCode::NotMultiplicative, "f is not an algebra automorphism");
  require_iso_shape(op1.domain.dim, op2.domain.dim, g);
  require_invertible(g, "g");
  ReportBuilder rb("operator_equiv", options);
  check_weights(rb, op1, op2);
  const Bimodule twisted = twist_actions(op1.domain, invert(f));
  rb.absorb(check_domain_morphism(twisted, op1.domain_product, op2.domain, op2.domain_product, g, options));
  check_map_equation(rb, "f a1=a2 g", f * op1.map, op2.map * g);
  return std::move(rb).finish();
}

Intertwiner induced_intertwiner(const OOperator& op1, const OOperator& op2) {
  if (!invertible(op1.map)) throw Error(ErrorCode::Singular, "first operator is not invertible");
  Matrix g = invert(op2.map) * op1.map;
  auto report = verify_operator_iso(op1, op2, g);
  return {std::move(g), std::move(report)};
}

IsoSearchResult search_dendriform_iso_fp(const DendriformDi& d1, const DendriformDi& d2, IsoSearchOptions options) {
  SearchProblem prob = make_problem(d1.field(), d2.field(), d1.dim(), d2.dim(), options);
  prob.products.emplace_back(residues(d1.prec), residues(d2.prec));
  prob.products.emplace_back(residues(d1.succ), residues(d2.succ));
  return run_search(prob, d1.field(), options);
}

IsoSearchResult search_dendriform_iso_fp(const DendriformTri& d1, const DendriformTri& d2, IsoSearchOptions options) {
  SearchProblem prob = make_problem(d1.field(), d2.field(), d1.dim(), d2.dim(), options);
  prob.products.emplace_back(residues(d1.prec), residues(d2.prec));
  prob.products.emplace_back(residues(d1.succ), residues(d2.succ));
  prob.products.emplace_back(residues(d1.dot), residues(d2.dot));
  return run_search(prob, d1.field(), options);
}

}  // namespace dendrop
