// dendrop: command-line front end.
//
// Exit status: 0 when every requested check passes, 1 when a check fails
// (the report is still written), 2 on usage, parse or library errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dendrop/catalogue.hpp"
#include "dendrop/constructions.hpp"
#include "dendrop/document.hpp"
#include "dendrop/enumeration.hpp"
#include "dendrop/equivalence.hpp"

using namespace dendrop;

namespace {

Document load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

void write(const Document& doc, const std::string& path) {
  const std::string text = emit_document(doc) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

template <class T>
const T& expect(const Document& doc, const char* what) {
  if (const auto* p = std::get_if<T>(&doc.payload)) return *p;
  throw Error(ErrorCode::SchemaError, std::string("expected ") + what + ", got " + std::string(payload_kind(doc.payload)));
}

// A Rota-Baxter operator is read as the O-operator on its regular bimodule.
OOperator expect_operator(const Document& doc) {
  if (const auto* rb = std::get_if<RotaBaxterOperator>(&doc.payload)) return rb_as_o_operator(*rb);
  return expect<OOperator>(doc, "an operator");
}

int report_exit(const ValidationReport& r) { return r.passed ? 0 : 1; }

ValidationReport validate_item(const ItemValue& v) {
  return std::visit(
      [](const auto& x) -> ValidationReport {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Algebra>) return validate_associativity(x);
        else if constexpr (std::is_same_v<T, DendriformDi>) return validate_dendriform_di(x);
        else if constexpr (std::is_same_v<T, DendriformTri>) return validate_dendriform_tri(x);
        else if constexpr (std::is_same_v<T, RotaBaxterOperator>) return validate_rota_baxter(x);
        else if constexpr (std::is_same_v<T, OOperator>) return validate_o_operator(x);
        else throw Error(ErrorCode::SchemaError, "a bare matrix has nothing to validate");
      },
      v);
}

ValidationReport validate_payload(const Payload& p) {
  return std::visit(
      [](const auto& x) -> ValidationReport {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Bimodule>) return validate_bimodule(x);
        else if constexpr (std::is_same_v<T, BimoduleAlgebra>) return validate_bimodule_algebra(x);
        else if constexpr (std::is_same_v<T, ResultSet>) {
          ReportBuilder rb("result_set");
          for (const auto& item : x.items) rb.absorb(validate_item(item.value));
          return std::move(rb).finish();
        } else if constexpr (std::is_same_v<T, ValidationReport>) {
          throw Error(ErrorCode::SchemaError, "a report has nothing to validate");
        } else {
          return validate_item(ItemValue(x));
        }
      },
      p);
}

EnumerationOptions enumeration_options(std::uint64_t budget_flag) {
  EnumerationOptions options;
  options.budget = budget_flag ? budget_flag : budget_from_env();
  return options;
}

ResultSet enumerate(const std::string& what, std::size_t dim, std::uint32_t prime, const EnumerationOptions& options) {
  ResultSet rs;
  rs.label = what + " n=" + std::to_string(dim) + " p=" + std::to_string(prime);
  auto tag = [](const char* set) { return nlohmann::json{{"set", set}}; };
  if (what == "assoc") {
    for (auto& a : enumerate_associative_products(dim, prime, options)) rs.items.push_back({tag("assoc"), std::move(a)});
  } else if (what == "rb0") {
    rs.note = "weight-zero Rota-Baxter operators on every associative product";
    const Scalar zero(FieldSpec::prime(prime));
    for (const auto& a : enumerate_associative_products(dim, prime, options)) {
      for (auto& rb : enumerate_rb_operators(a, zero, options)) rs.items.push_back({tag("rb0"), std::move(rb)});
    }
  } else if (what == "dendriform-di") {
    for (auto& d : enumerate_dendriform_di(dim, prime, options)) rs.items.push_back({tag("dendriform_di"), std::move(d)});
  } else if (what == "phi-image") {
    rs.note = "finite-field analogue: dialgebras from weight-zero Rota-Baxter operators versus all dialgebras over F_p";
    auto r = phi_image_experiment(dim, prime, options);
    rs.counts["all"] = r.all.size();
    rs.counts["image"] = r.image.size();
    rs.counts["missing"] = r.missing.size();
    rs.counts["round_trip_failures"] = r.round_trip_failures;
    rs.counts["image_subset"] = r.image_subset ? 1 : 0;
    for (std::size_t i = 0; i < r.image.size(); ++i) {
      rs.items.push_back({tag("image"), r.image[i]});
      rs.items.push_back({nlohmann::json{{"set", "image_witness"}, {"for", i}}, r.image_witness[i]});
    }
    for (auto& d : r.missing) rs.items.push_back({tag("missing"), std::move(d)});
    rs.counts["items"] = rs.items.size();
    return rs;
  } else {
    throw CLI::ValidationError("--what", "expected assoc, rb0, dendriform-di or phi-image");
  }
  rs.counts["count"] = rs.items.size();
  return rs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with O-operators and dendriform di/trialgebras"};
  app.require_subcommand(1);
  int status = 0;

  std::string file, file2, out, report_out, mode, witness, f_file, g_file, what;
  bool search = false;
  std::size_t dim = 2;
  std::uint32_t prime = 2;
  std::uint64_t budget = 0;

  auto* validate = app.add_subcommand("validate", "Validate the structure in a document");
  validate->add_option("file", file, "Input document")->required();
  validate->add_option("--report", report_out, "Write the report here instead of stdout");
  validate->callback([&] {
    const Document doc = load(file);
    const auto r = validate_payload(doc.payload);
    write(make_document(doc.field, r), report_out);
    status = report_exit(r);
  });

  auto* construct = app.add_subcommand("construct", "Dendriform structure on the domain or range of an operator");
  construct->add_option("mode", mode, "domain | range")->required()->check(CLI::IsMember({"domain", "range"}));
  construct->add_option("operator", file, "Operator or Rota-Baxter document")->required();
  construct->add_option("-o,--output", out, "Output file");
  construct->callback([&] {
    const Document doc = load(file);
    const OOperator op = expect_operator(doc);
    const bool tri = op.kind == OperatorKind::algebra;
    if (mode == "domain") {
      write(tri ? make_document(doc.field, domain_dendriform_tri(op)) : make_document(doc.field, domain_dendriform_di(op)),
            out);
    } else if (!tri) {
      write(make_document(doc.field, range_dendriform_di(op)), out);
    } else if (invertible(op.map)) {
      write(make_document(doc.field, range_dendriform_tri(op)), out);
    } else {
      auto q = range_dendriform_quotient(op);
      ResultSet rs;
      rs.label = "range_quotient";
      rs.note = "trialgebra on the image of the operator; the matrix embeds the image basis into the codomain";
      rs.items.push_back({nlohmann::json{{"role", "structure"}}, std::move(q.structure)});
      rs.items.push_back({nlohmann::json{{"role", "embedding"}}, std::move(q.embedding)});
      write(make_document(doc.field, std::move(rs)), out);
    }
  });

  auto* canonical = app.add_subcommand("canonical", "Identity operator recovering a dendriform structure");
  canonical->add_option("dendriform", file, "Dendriform di- or trialgebra document")->required();
  canonical->add_option("-o,--output", out, "Output file");
  canonical->callback([&] {
    const Document doc = load(file);
    if (const auto* t = std::get_if<DendriformTri>(&doc.payload)) {
      write(make_document(doc.field, canonical_operator_from_tri(*t).op), out);
    } else {
      write(make_document(doc.field, canonical_operator_from_di(expect<DendriformDi>(doc, "a dendriform structure")).op),
            out);
    }
  });

  auto* split = app.add_subcommand("split-check", "Check that an algebra product is the sum of dendriform products");
  split->add_option("dendriform", file, "Dendriform document")->required();
  split->add_option("algebra", file2, "Algebra document")->required();
  split->callback([&] {
    const Document d = load(file), a = load(file2);
    const auto& alg = expect<Algebra>(a, "an algebra");
    const auto r = std::holds_alternative<DendriformTri>(d.payload)
                       ? check_splitting(std::get<DendriformTri>(d.payload), alg)
                       : check_splitting(expect<DendriformDi>(d, "a dendriform structure"), alg);
    write(make_document(d.field, r), "");
    status = report_exit(r);
  });

  auto* iso = app.add_subcommand("iso", "Verify or search for a dendriform isomorphism");
  iso->add_option("d1", file, "First dendriform document")->required();
  iso->add_option("d2", file2, "Second dendriform document")->required();
  auto* wopt = iso->add_option("--witness", witness, "Matrix document with the candidate F");
  iso->add_flag("--search-fp", search, "Exhaustive search over GL_n(F_p)")->excludes(wopt);
  iso->callback([&] {
    const Document d1 = load(file), d2 = load(file2);
    const bool tri = std::holds_alternative<DendriformTri>(d1.payload);
    if (!witness.empty()) {
      const Matrix F = expect<Matrix>(load(witness), "a matrix");
      const auto r = tri ? verify_dendriform_iso(std::get<DendriformTri>(d1.payload), expect<DendriformTri>(d2, "a trialgebra"), F)
                         : verify_dendriform_iso(expect<DendriformDi>(d1, "a dialgebra"), expect<DendriformDi>(d2, "a dialgebra"), F);
      write(make_document(d1.field, r), "");
      status = report_exit(r);
    } else if (search) {
      const auto r = tri ? search_dendriform_iso_fp(std::get<DendriformTri>(d1.payload), expect<DendriformTri>(d2, "a trialgebra"))
                         : search_dendriform_iso_fp(expect<DendriformDi>(d1, "a dialgebra"), expect<DendriformDi>(d2, "a dialgebra"));
      ResultSet rs;
      rs.label = "iso_search";
      rs.note = r.witness ? "first witness in row-major lexicographic order" : "not found";
      rs.counts["examined"] = r.examined;
      if (r.witness) rs.items.push_back({nlohmann::json{{"role", "witness"}}, r.witness->F});
      write(make_document(d1.field, std::move(rs)), "");
      status = r.witness ? 0 : 1;
    } else {
      throw CLI::ValidationError("iso", "give --witness F.json or --search-fp");
    }
  });

  auto* equiv = app.add_subcommand("equiv", "Verify an equivalence of operators");
  equiv->add_option("op1", file, "First operator document")->required();
  equiv->add_option("op2", file2, "Second operator document")->required();
  equiv->add_option("--f", f_file, "Matrix document: automorphism of the codomain")->required();
  equiv->add_option("--g", g_file, "Matrix document: isomorphism of the domains")->required();
  equiv->callback([&] {
    const Document a = load(file), b = load(file2);
    const auto r = verify_operator_equiv(expect_operator(a), expect_operator(b),
                                         expect<Matrix>(load(f_file), "a matrix"), expect<Matrix>(load(g_file), "a matrix"));
    write(make_document(a.field, r), "");
    status = report_exit(r);
  });

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Exhaustive enumeration over F_p");
  enumerate_cmd->add_option("--what", what, "assoc | rb0 | dendriform-di | phi-image")
      ->required()
      ->check(CLI::IsMember({"assoc", "rb0", "dendriform-di", "phi-image"}));
  enumerate_cmd->add_option("--dim", dim, "Dimension")->required()->check(CLI::Range(1, 3));
  enumerate_cmd->add_option("--prime", prime, "Prime p")->required();
  enumerate_cmd->add_option("--budget", budget, "Candidate budget (overrides DENDROP_BUDGET)")->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("-o,--output", out, "Output file");
  enumerate_cmd->callback([&] {
    const auto rs = enumerate(what, dim, prime, enumeration_options(budget));
    write(make_document(FieldSpec::prime(prime), rs), out);
    if (what == "phi-image") status = rs.counts.at("round_trip_failures") == 0 && rs.counts.at("image_subset") == 1 ? 0 : 1;
  });

  auto* catalogue = app.add_subcommand("catalogue", "Emit the built-in catalogue");
  catalogue->add_option("-o,--output", out, "Output file");
  catalogue->callback([&] { write(make_document(FieldSpec::rational(), catalogue_result_set()), out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
