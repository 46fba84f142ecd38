#include "dendrop/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string_view>
#include <thread>

#include "dendrop/constructions.hpp"

namespace dendrop {

namespace {

constexpr std::size_t kBatchLanes = 256;

using BatchKernel = std::function<void(kernels::Batch, std::uint8_t*)>;

void fill_batch(std::uint64_t first, std::size_t lanes, std::size_t entries, std::uint32_t p,
                std::vector<std::uint32_t>& soa) {
  std::fill(soa.begin(), soa.end(), 0u);
  for (std::size_t l = 0; l < lanes; ++l) {
    std::uint64_t idx = first + l;
    for (std::size_t e = entries; e-- > 0;) {
      soa[e * kBatchLanes + l] = static_cast<std::uint32_t>(idx % p);
      idx /= p;
    }
  }
}

// Indices in [0, total) accepted by the kernel, ascending.
std::vector<std::uint64_t> filter_candidates(std::uint64_t total, std::size_t entries, std::uint32_t p,
                                             const BatchKernel& kernel, unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, std::uint64_t{workers} * 4));
  std::vector<std::vector<std::uint64_t>> found(chunks);
  std::atomic<std::uint64_t> next{0};
  auto run = [&] {
    std::vector<std::uint32_t> soa(entries * kBatchLanes);
    std::vector<std::uint8_t> ok(kBatchLanes);
    for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
      const std::uint64_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
      for (std::uint64_t first = lo; first < hi; first += kBatchLanes) {
        const std::size_t lanes = static_cast<std::size_t>(std::min<std::uint64_t>(kBatchLanes, hi - first));
        fill_batch(first, lanes, entries, p, soa);
        kernel({soa.data(), kBatchLanes, lanes}, ok.data());
        for (std::size_t l = 0; l < lanes; ++l) {
          if (ok[l]) found[c].push_back(first + l);
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  std::vector<std::uint64_t> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  return out;
}

std::vector<Scalar> decode(std::uint64_t idx, std::size_t entries, const FieldSpec& field) {
  std::vector<Scalar> out(entries, Scalar(field));
  for (std::size_t e = entries; e-- > 0;) {
    out[e] = Scalar(field, static_cast<long>(idx % field.p));
    idx /= field.p;
  }
  return out;
}

StructureTensor tensor_from(std::span<const Scalar> entries, std::size_t n, const FieldSpec& field) {
  StructureTensor t(field, n);
  std::copy(entries.begin(), entries.end(), t.entries().begin());
  return t;
}

void check_budget(std::uint64_t candidates, const EnumerationOptions& options, const char* what) {
  if (candidates > options.budget) {
    throw Error(ErrorCode::BudgetExceeded, std::string(what) + ": " + std::to_string(candidates) +
                                               " candidates exceed the budget of " + std::to_string(options.budget));
  }
}

kernels::Isa isa_for(const EnumerationOptions& options, std::uint32_t p) {
  return options.isa ? kernels::effective_isa(*options.isa, p) : kernels::best_isa(p);
}

std::vector<std::uint32_t> residues_of(const DendriformDi& d) {
  std::vector<std::uint32_t> key;
  for (const auto& s : d.prec.entries()) key.push_back(s.residue());
  for (const auto& s : d.succ.entries()) key.push_back(s.residue());
  return key;
}

}  // namespace

std::uint64_t budget_from_env() {
  const char* raw = std::getenv("DENDROP_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultBudget;
  const std::string_view text(raw);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw Error(ErrorCode::SchemaError, "DENDROP_BUDGET must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t candidate_count(std::uint32_t p, std::size_t entries) {
  std::uint64_t total = 1;
  for (std::size_t e = 0; e < entries; ++e) {
    if (total > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    total *= p;
  }
  return total;
}

std::vector<Algebra> enumerate_associative_products(std::size_t n, std::uint32_t p, const EnumerationOptions& options) {
  const FieldSpec field = FieldSpec::prime(p);
  const std::size_t entries = n * n * n;
  const std::uint64_t total = candidate_count(p, entries);
  check_budget(total, options, "associative products");
  const auto isa = isa_for(options, p);
  const auto hits = filter_candidates(
      total, entries, p, [&](kernels::Batch b, std::uint8_t* ok) { kernels::associativity(isa, b, n, p, ok); },
      options.workers);
  std::vector<Algebra> out;
  out.reserve(hits.size());
  for (auto idx : hits) out.emplace_back(tensor_from(decode(idx, entries, field), n, field));
  return out;
}

std::vector<RotaBaxterOperator> enumerate_rb_operators(const Algebra& a, const Scalar& weight,
                                                       const EnumerationOptions& options) {
  const FieldSpec& field = a.field();
  if (!field.finite()) throw Error(ErrorCode::FieldNotFinite, "operator enumeration needs a prime field");
  if (!(weight.field() == field)) throw Error(ErrorCode::FieldMismatch, "weight field");
  const std::size_t n = a.dim();
  const std::uint32_t p = field.p;
  const std::uint64_t total = candidate_count(p, n * n);
  check_budget(total, options, "Rota-Baxter operators");
  std::vector<std::uint32_t> algebra;
  for (const auto& s : a.product.entries()) algebra.push_back(s.residue());
  const std::uint32_t w = weight.residue();
  const auto isa = isa_for(options, p);
  const auto hits = filter_candidates(
      total, n * n, p,
      [&](kernels::Batch b, std::uint8_t* ok) { kernels::rota_baxter(isa, b, n, p, algebra.data(), w, ok); },
      options.workers);
  std::vector<RotaBaxterOperator> out;
  out.reserve(hits.size());
  for (auto idx : hits) out.push_back({a, Matrix(field, n, n, decode(idx, n * n, field)), weight});
  return out;
}

std::vector<DendriformDi> enumerate_dendriform_di(std::size_t n, std::uint32_t p, const EnumerationOptions& options) {
  const FieldSpec field = FieldSpec::prime(p);
  const std::size_t n3 = n * n * n;
  const std::uint64_t total = candidate_count(p, 2 * n3);
  check_budget(total, options, "dendriform dialgebras");
  const auto isa = isa_for(options, p);
  const auto hits = filter_candidates(
      total, 2 * n3, p, [&](kernels::Batch b, std::uint8_t* ok) { kernels::dendriform_di(isa, b, n, p, ok); },
      options.workers);
  std::vector<DendriformDi> out;
  out.reserve(hits.size());
  for (auto idx : hits) {
    const auto entries = decode(idx, 2 * n3, field);
    const std::span<const Scalar> all(entries);
    out.emplace_back(tensor_from(all.first(n3), n, field), tensor_from(all.last(n3), n, field));
  }
  return out;
}

PhiImageResult phi_image_experiment(std::size_t n, std::uint32_t p, const EnumerationOptions& options) {
  const FieldSpec field = FieldSpec::prime(p);
  PhiImageResult result;
  result.all = enumerate_dendriform_di(n, p, options);

  std::set<std::vector<std::uint32_t>> all_keys;
  for (const auto& d : result.all) all_keys.insert(residues_of(d));

  std::map<std::vector<std::uint32_t>, RotaBaxterOperator> produced;
  const Scalar zero(field);
  for (const auto& a : enumerate_associative_products(n, p, options)) {
    for (auto& rb : enumerate_rb_operators(a, zero, options)) {
      const DendriformDi d = domain_dendriform_di(rb_module_reading(rb));
      auto key = residues_of(d);
      if (!validate_dendriform_di(d, {.max_violations = 0}).passed || !all_keys.contains(key)) {
        result.image_subset = false;
      }
      produced.try_emplace(std::move(key), std::move(rb));
    }
  }

  for (const auto& d : result.all) {
    const auto it = produced.find(residues_of(d));
    if (it != produced.end()) {
      result.image.push_back(d);
      result.image_witness.push_back(it->second);
    } else {
      result.missing.push_back(d);
    }
    try {
      const auto canon = canonical_operator_from_di(d);
      if (!same_products(domain_dendriform_di(canon.op), d)) ++result.round_trip_failures;
    } catch (const Error&) {
      ++result.round_trip_failures;
    }
  }
  return result;
}

}  // namespace dendrop
