#include "dendrop/document.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>
#include <utility>

namespace dendrop {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& reason) {
  throw Error(ErrorCode::SchemaError, (path.empty() ? std::string("document") : path) + ": " + reason);
}

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string join(const std::string& path, std::size_t index) { return path + "[" + std::to_string(index) + "]"; }

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
}

void require_keys(const json& j, const std::string& path, std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional = {}) {
  require_object(j, path);
  for (auto key : required) {
    if (!j.contains(key)) schema(join(path, key), "missing");
  }
  for (const auto& [key, value] : j.items()) {
    const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                       std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) schema(join(path, key), "unknown key");
  }
}

std::size_t read_size(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    schema(path, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::string read_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected a string");
  return j.get<std::string>();
}

Scalar read_scalar(const json& j, const FieldSpec& field, const std::string& path) {
  if (j.is_string()) return Scalar::parse(field, j.get_ref<const std::string&>());
  if (j.is_number_float()) schema(path, "floating-point numbers are not allowed; write the rational as a string");
  if (j.is_number_unsigned()) return Scalar(field, mpq_class(std::to_string(j.get<std::uint64_t>())));
  if (j.is_number_integer()) return Scalar(field, mpq_class(std::to_string(j.get<std::int64_t>())));
  schema(path, "expected a rational string or an integer");
}

std::vector<Scalar> read_scalars(const json& j, const FieldSpec& field, const std::string& path) {
  if (!j.is_array()) schema(path, "expected a list of scalars");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_scalar(j[i], field, join(path, i)));
  return out;
}

void check_field(const json& j, const FieldSpec& field, const std::string& path);

FieldSpec read_field(const json& j, const std::string& path) {
  require_object(j, path);
  const std::string kind = read_string(j.contains("kind") ? j["kind"] : json(), join(path, "kind"));
  if (kind == "rational") {
    require_keys(j, path, {"kind"});
    return FieldSpec::rational();
  }
  if (kind == "prime") {
    require_keys(j, path, {"kind", "p"});
    const std::size_t p = read_size(j["p"], join(path, "p"));
    return FieldSpec::prime(p);
  }
  schema(join(path, "kind"), "expected \"rational\" or \"prime\"");
}

void check_field(const json& j, const FieldSpec& field, const std::string& path) {
  if (!j.contains("field")) return;
  if (!(read_field(j["field"], join(path, "field")) == field)) {
    throw Error(ErrorCode::FieldMismatch, join(path, "field") + ": differs from the document field " + field.to_string());
  }
}

std::vector<std::string> read_basis(const json& j, std::size_t dim, const std::string& path) {
  if (!j.contains("basis")) return default_basis(dim);
  const json& b = j["basis"];
  const std::string bp = join(path, "basis");
  if (!b.is_array()) schema(bp, "expected a list of labels");
  if (b.size() != dim) schema(bp, "has " + std::to_string(b.size()) + " labels for dimension " + std::to_string(dim));
  std::vector<std::string> out;
  for (std::size_t i = 0; i < b.size(); ++i) out.push_back(read_string(b[i], join(bp, i)));
  return out;
}

std::string read_name(const json& j, const std::string& path) {
  return j.contains("name") ? read_string(j["name"], join(path, "name")) : std::string();
}

StructureTensor read_tensor(const json& j, std::size_t n, const FieldSpec& field, const std::string& path) {
  if (!j.is_array()) schema(path, "expected a list of structure constants");
  StructureTensor t(field, n);
  if (j.empty()) return t;
  if (j[0].is_object()) {
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < j.size(); ++e) {
      const std::string ep = join(path, e);
      require_keys(j[e], ep, {"i", "j", "k", "c"});
      const std::size_t i = read_size(j[e]["i"], join(ep, "i"));
      const std::size_t jj = read_size(j[e]["j"], join(ep, "j"));
      const std::size_t k = read_size(j[e]["k"], join(ep, "k"));
      if (i >= n || jj >= n || k >= n) schema(ep, "index out of range for dimension " + std::to_string(n));
      if (!seen.emplace(i, jj, k).second) schema(ep, "duplicate entry for (i,j,k)");
      t.at(i, jj, k) = read_scalar(j[e]["c"], field, join(ep, "c"));
    }
    return t;
  }
  // dense c[i][j][k]
  if (j.size() != n) schema(path, "dense tensor needs " + std::to_string(n) + " slices");
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != n) schema(join(path, i), "expected " + std::to_string(n) + " rows");
    for (std::size_t jj = 0; jj < n; ++jj) {
      const auto v = read_scalars(row[jj], field, join(join(path, i), jj));
      if (v.size() != n) schema(join(join(path, i), jj), "expected " + std::to_string(n) + " entries");
      for (std::size_t k = 0; k < n; ++k) t.at(i, jj, k) = v[k];
    }
  }
  return t;
}

Matrix read_matrix(const json& j, std::size_t rows, std::size_t cols, const FieldSpec& field,
                   const std::string& path) {
  if (!j.is_array()) schema(path, "expected a row-major list of scalars");
  std::vector<Scalar> entries;
  if (!j.empty() && j[0].is_array()) {
    if (j.size() != rows) schema(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    for (std::size_t r = 0; r < rows; ++r) {
      auto row = read_scalars(j[r], field, join(path, r));
      if (row.size() != cols) schema(join(path, r), "expected " + std::to_string(cols) + " entries");
      entries.insert(entries.end(), row.begin(), row.end());
    }
  } else {
    entries = read_scalars(j, field, path);
    if (entries.size() != rows * cols) {
      schema(path, "dimension mismatch: " + std::to_string(entries.size()) + " entries for a " + std::to_string(rows) +
                       "x" + std::to_string(cols) + " matrix");
    }
  }
  return Matrix(field, rows, cols, std::move(entries));
}

std::string expect_kind(const json& j, const std::string& path) {
  require_object(j, path);
  if (!j.contains("kind")) schema(join(path, "kind"), "missing");
  return read_string(j["kind"], join(path, "kind"));
}

Algebra read_algebra(const json& j, const FieldSpec& field, const std::string& path) {
  require_keys(j, path, {"kind", "dim", "product"}, {"basis", "name", "field"});
  check_field(j, field, path);
  const std::size_t n = read_size(j["dim"], join(path, "dim"));
  Algebra a(read_tensor(j["product"], n, field, join(path, "product")), read_name(j, path));
  a.basis = read_basis(j, n, path);
  return a;
}

Algebra read_algebra_payload(const json& j, const FieldSpec& field, const std::string& path) {
  if (expect_kind(j, path) != "algebra") schema(join(path, "kind"), "expected \"algebra\"");
  return read_algebra(j, field, path);
}

std::vector<Matrix> read_actions(const json& j, std::size_t count, std::size_t m, const FieldSpec& field,
                                 const std::string& path) {
  if (!j.is_array() || j.size() != count) {
    schema(path, "expected " + std::to_string(count) + " matrices, one per algebra basis element");
  }
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(read_matrix(j[i], m, m, field, join(path, i)));
  return out;
}

Bimodule read_bimodule_fields(const json& j, const FieldSpec& field, const std::string& path) {
  Algebra over = read_algebra_payload(j["over"], field, join(path, "over"));
  const std::size_t m = read_size(j["dim"], join(path, "dim"));
  auto left = read_actions(j["left_action"], over.dim(), m, field, join(path, "left_action"));
  auto right = read_actions(j["right_action"], over.dim(), m, field, join(path, "right_action"));
  Bimodule v(std::move(over), m, std::move(left), std::move(right));
  v.basis = read_basis(j, m, path);
  return v;
}

Bimodule read_bimodule(const json& j, const FieldSpec& field, const std::string& path) {
  require_keys(j, path, {"kind", "over", "dim", "left_action", "right_action"}, {"basis", "field"});
  check_field(j, field, path);
  return read_bimodule_fields(j, field, path);
}

BimoduleAlgebra read_bimodule_algebra(const json& j, const FieldSpec& field, const std::string& path) {
  require_keys(j, path, {"kind", "over", "dim", "left_action", "right_action", "product"}, {"basis", "field"});
  check_field(j, field, path);
  Bimodule base = read_bimodule_fields(j, field, path);
  StructureTensor prod = read_tensor(j["product"], base.dim, field, join(path, "product"));
  return {std::move(base), std::move(prod)};
}

OOperator read_operator(const json& j, const FieldSpec& field, const std::string& path) {
  const std::string kind = read_string(j.contains("operator_kind") ? j["operator_kind"] : json(),
                                       join(path, "operator_kind"));
  const json& dom = j.contains("domain") ? j["domain"] : json();
  const std::string dp = join(path, "domain");
  if (kind == "module") {
    require_keys(j, path, {"kind", "operator_kind", "domain", "matrix"}, {"field"});
    check_field(j, field, path);
    if (expect_kind(dom, dp) != "bimodule") schema(join(dp, "kind"), "a module operator needs a \"bimodule\" domain");
    Bimodule v = read_bimodule(dom, field, dp);
    Matrix map = read_matrix(j["matrix"], v.over.dim(), v.dim, field, join(path, "matrix"));
    return make_module_operator(std::move(v), std::move(map));
  }
  if (kind == "algebra") {
    require_keys(j, path, {"kind", "operator_kind", "domain", "matrix", "weight"}, {"field"});
    check_field(j, field, path);
    if (expect_kind(dom, dp) != "bimodule_algebra") {
      schema(join(dp, "kind"), "an algebra operator needs a \"bimodule_algebra\" domain");
    }
    BimoduleAlgebra r = read_bimodule_algebra(dom, field, dp);
    Matrix map = read_matrix(j["matrix"], r.base.over.dim(), r.dim(), field, join(path, "matrix"));
    Scalar w = read_scalar(j["weight"], field, join(path, "weight"));
    return make_algebra_operator(std::move(r), std::move(map), std::move(w));
  }
  schema(join(path, "operator_kind"), "expected \"module\" or \"algebra\"");
}

DendriformDi read_di(const json& j, const FieldSpec& field, const std::string& path) {
  require_keys(j, path, {"kind", "dim", "prec", "succ"}, {"basis", "name", "field"});
  check_field(j, field, path);
  const std::size_t n = read_size(j["dim"], join(path, "dim"));
  DendriformDi d(read_tensor(j["prec"], n, field, join(path, "prec")),
                 read_tensor(j["succ"], n, field, join(path, "succ")), read_name(j, path));
  d.basis = read_basis(j, n, path);
  return d;
}

DendriformTri read_tri(const json& j, const FieldSpec& field, const std::string& path) {
  require_keys(j, path, {"kind", "dim", "prec", "succ", "dot"}, {"basis", "name", "field"});
  check_field(j, field, path);
  const std::size_t n = read_size(j["dim"], join(path, "dim"));
  DendriformTri t(read_tensor(j["prec"], n, field, join(path, "prec")),
                  read_tensor(j["succ"], n, field, join(path, "succ")),
                  read_tensor(j["dot"], n, field, join(path, "dot")), read_name(j, path));
  t.basis = read_basis(j, n, path);
  return t;
}

ValidationReport read_report(const json& j, const FieldSpec& field, const std::string& path) {
  require_keys(j, path, {"kind", "passed", "structure_kind", "violation_count", "violations"}, {"field"});
  check_field(j, field, path);
  ValidationReport r;
  if (!j["passed"].is_boolean()) schema(join(path, "passed"), "expected a boolean");
  r.passed = j["passed"].get<bool>();
  r.structure_kind = read_string(j["structure_kind"], join(path, "structure_kind"));
  r.violation_count = read_size(j["violation_count"], join(path, "violation_count"));
  const json& vs = j["violations"];
  const std::string vp = join(path, "violations");
  if (!vs.is_array()) schema(vp, "expected a list");
  for (std::size_t e = 0; e < vs.size(); ++e) {
    const std::string ep = join(vp, e);
    require_keys(vs[e], ep, {"axiom", "indices", "lhs", "rhs"});
    Violation v;
    v.axiom = read_string(vs[e]["axiom"], join(ep, "axiom"));
    if (!vs[e]["indices"].is_array()) schema(join(ep, "indices"), "expected a list");
    for (std::size_t k = 0; k < vs[e]["indices"].size(); ++k) {
      v.indices.push_back(read_size(vs[e]["indices"][k], join(join(ep, "indices"), k)));
    }
    v.lhs = read_scalars(vs[e]["lhs"], field, join(ep, "lhs"));
    v.rhs = read_scalars(vs[e]["rhs"], field, join(ep, "rhs"));
    r.violations.push_back(std::move(v));
  }
  return r;
}

Matrix read_matrix_payload(const json& j, const FieldSpec& field, const std::string& path) {
  require_keys(j, path, {"kind", "rows", "cols", "entries"}, {"field"});
  check_field(j, field, path);
  return read_matrix(j["entries"], read_size(j["rows"], join(path, "rows")), read_size(j["cols"], join(path, "cols")),
                     field, join(path, "entries"));
}

RotaBaxterOperator read_rota_baxter(const json& j, const FieldSpec& field, const std::string& path) {
  require_keys(j, path, {"kind", "algebra", "matrix", "weight"}, {"field"});
  check_field(j, field, path);
  Algebra a = read_algebra_payload(j["algebra"], field, join(path, "algebra"));
  Matrix m = read_matrix(j["matrix"], a.dim(), a.dim(), field, join(path, "matrix"));
  return {std::move(a), std::move(m), read_scalar(j["weight"], field, join(path, "weight"))};
}

ItemValue read_item_value(const json& j, const FieldSpec& field, const std::string& path) {
  const std::string kind = expect_kind(j, path);
  if (kind == "algebra") return read_algebra(j, field, path);
  if (kind == "dendriform_di") return read_di(j, field, path);
  if (kind == "dendriform_tri") return read_tri(j, field, path);
  if (kind == "rota_baxter") return read_rota_baxter(j, field, path);
  if (kind == "operator") return read_operator(j, field, path);
  if (kind == "matrix") return read_matrix_payload(j, field, path);
  schema(join(path, "kind"), "\"" + kind + "\" cannot appear inside a result set");
}

ResultSet read_result_set(const json& j, const FieldSpec& field, const std::string& path) {
  require_keys(j, path, {"kind", "label", "items"}, {"note", "counts", "field"});
  check_field(j, field, path);
  ResultSet rs;
  rs.label = read_string(j["label"], join(path, "label"));
  if (j.contains("note")) rs.note = read_string(j["note"], join(path, "note"));
  if (j.contains("counts")) {
    const std::string cp = join(path, "counts");
    require_object(j["counts"], cp);
    for (const auto& [key, value] : j["counts"].items()) rs.counts[key] = read_size(value, join(cp, key));
  }
  const json& items = j["items"];
  const std::string ip = join(path, "items");
  if (!items.is_array()) schema(ip, "expected a list");
  for (std::size_t e = 0; e < items.size(); ++e) {
    const std::string ep = join(ip, e);
    require_keys(items[e], ep, {"value"}, {"annotations"});
    ResultItem item{json::object(), read_item_value(items[e]["value"], field, join(ep, "value"))};
    if (items[e].contains("annotations")) {
      require_object(items[e]["annotations"], join(ep, "annotations"));
      item.annotations = items[e]["annotations"];
    }
    rs.items.push_back(std::move(item));
  }
  return rs;
}

Payload read_payload(const json& j, const FieldSpec& field) {
  const std::string path = "payload";
  const std::string kind = expect_kind(j, path);
  if (kind == "algebra") return read_algebra(j, field, path);
  if (kind == "bimodule") return read_bimodule(j, field, path);
  if (kind == "bimodule_algebra") return read_bimodule_algebra(j, field, path);
  if (kind == "operator") return read_operator(j, field, path);
  if (kind == "dendriform_di") return read_di(j, field, path);
  if (kind == "dendriform_tri") return read_tri(j, field, path);
  if (kind == "report") return read_report(j, field, path);
  if (kind == "result_set") return read_result_set(j, field, path);
  if (kind == "matrix") return read_matrix_payload(j, field, path);
  if (kind == "rota_baxter") return read_rota_baxter(j, field, path);
  schema(join(path, "kind"), "unknown payload kind \"" + kind + "\"");
}

// ---------------------------------------------------------------------------
// Emission

json emit_scalars(std::span<const Scalar> v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

json emit_tensor(const StructureTensor& t) {
  json out = json::array();
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!t.at(i, j, k).is_zero()) out.push_back({{"i", i}, {"j", j}, {"k", k}, {"c", t.at(i, j, k).to_string()}});
      }
  return out;
}

void put_name(json& j, const std::string& name) {
  if (!name.empty()) j["name"] = name;
}

json emit(const Algebra& a) {
  json j{{"kind", "algebra"}, {"dim", a.dim()}, {"basis", a.basis}, {"product", emit_tensor(a.product)}};
  put_name(j, a.name);
  return j;
}

json emit_actions(const std::vector<Matrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(emit_scalars(m.entries()));
  return out;
}

json emit(const Bimodule& v) {
  return {{"kind", "bimodule"},         {"over", emit(v.over)},
          {"dim", v.dim},               {"basis", v.basis},
          {"left_action", emit_actions(v.left)}, {"right_action", emit_actions(v.right)}};
}

json emit(const BimoduleAlgebra& r) {
  json j = emit(r.base);
  j["kind"] = "bimodule_algebra";
  j["product"] = emit_tensor(r.product);
  return j;
}

json emit(const OOperator& op) {
  json j{{"kind", "operator"}, {"operator_kind", std::string(to_string(op.kind))},
         {"matrix", emit_scalars(op.map.entries())}};
  if (op.kind == OperatorKind::algebra) {
    j["domain"] = emit(op.domain_algebra());
    j["weight"] = op.weight->to_string();
  } else {
    j["domain"] = emit(op.domain);
  }
  return j;
}

json emit(const DendriformDi& d) {
  json j{{"kind", "dendriform_di"}, {"dim", d.dim()}, {"basis", d.basis},
         {"prec", emit_tensor(d.prec)}, {"succ", emit_tensor(d.succ)}};
  put_name(j, d.name);
  return j;
}

json emit(const DendriformTri& t) {
  json j{{"kind", "dendriform_tri"}, {"dim", t.dim()}, {"basis", t.basis}, {"prec", emit_tensor(t.prec)},
         {"succ", emit_tensor(t.succ)}, {"dot", emit_tensor(t.dot)}};
  put_name(j, t.name);
  return j;
}

json emit(const ValidationReport& r) {
  json vs = json::array();
  for (const auto& v : r.violations) {
    vs.push_back({{"axiom", v.axiom}, {"indices", v.indices}, {"lhs", emit_scalars(v.lhs)}, {"rhs", emit_scalars(v.rhs)}});
  }
  return {{"kind", "report"},
          {"passed", r.passed},
          {"structure_kind", r.structure_kind},
          {"violation_count", r.violation_count},
          {"violations", vs}};
}

json emit(const Matrix& m) {
  return {{"kind", "matrix"}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", emit_scalars(m.entries())}};
}

json emit(const RotaBaxterOperator& rb) {
  return {{"kind", "rota_baxter"},
          {"algebra", emit(rb.algebra)},
          {"matrix", emit_scalars(rb.map.entries())},
          {"weight", rb.weight.to_string()}};
}

json emit(const ResultSet& rs) {
  json items = json::array();
  for (const auto& item : rs.items) {
    items.push_back({{"annotations", item.annotations}, {"value", std::visit([](const auto& v) { return emit(v); }, item.value)}});
  }
  json counts = json::object();
  for (const auto& [k, v] : rs.counts) counts[k] = v;
  return {{"kind", "result_set"}, {"label", rs.label}, {"note", rs.note}, {"counts", counts}, {"items", items}};
}

json emit_field(const FieldSpec& f) {
  if (f.finite()) return {{"kind", "prime"}, {"p", f.p}};
  return {{"kind", "rational"}};
}

}  // namespace

std::string_view payload_kind(const Payload& payload) {
  static constexpr std::string_view kinds[] = {"algebra",        "bimodule", "bimodule_algebra", "operator",
                                               "dendriform_di",  "dendriform_tri", "report",     "result_set",
                                               "matrix",         "rota_baxter"};
  return kinds[payload.index()];
}

Document parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, "at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  require_keys(root, "", {"schema_version", "field", "payload"});
  Document doc;
  doc.schema_version = read_string(root["schema_version"], "schema_version");
  if (doc.schema_version != kSchemaVersion) {
    schema("schema_version", "unsupported version \"" + doc.schema_version + "\"");
  }
  doc.field = read_field(root["field"], "field");
  doc.payload = read_payload(root["payload"], doc.field);
  return doc;
}

std::string emit_document(const Document& doc) {
  const json root{{"schema_version", doc.schema_version},
                  {"field", emit_field(doc.field)},
                  {"payload", std::visit([](const auto& p) { return emit(p); }, doc.payload)}};
  return root.dump();
}

Document make_document(FieldSpec field, Payload payload) {
  return {std::string(kSchemaVersion), field, std::move(payload)};
}

}  // namespace dendrop
