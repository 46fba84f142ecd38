#include "dendrop/catalogue.hpp"

#include <algorithm>

namespace dendrop {

namespace {

struct Term {
  std::size_t i, j, k;
  const char* c;
};

DendriformDi dialgebra(const std::string& name, std::initializer_list<Term> prec, std::initializer_list<Term> succ) {
  const FieldSpec q = FieldSpec::rational();
  StructureTensor p(q, 2), s(q, 2);
  for (const auto& t : prec) p.at(t.i, t.j, t.k) = Scalar::parse(q, t.c);
  for (const auto& t : succ) s.at(t.i, t.j, t.k) = Scalar::parse(q, t.c);
  return DendriformDi(std::move(p), std::move(s), name);
}

std::vector<CatalogueEntry> build() {
  // Indices are 0-based: (1,1,0) reads e2 . e2 = c e1.
  std::vector<CatalogueEntry> out;
  auto add = [&](const std::string& name, std::initializer_list<Term> prec, std::initializer_list<Term> succ,
                 std::string note = {}) {
    const bool corrected = !note.empty();
    out.push_back({name, dialgebra(name, prec, succ), corrected, std::move(note)});
  };
  add("rb-1", {}, {});
  add("rb-2", {{1, 1, 0, "1/2"}}, {{1, 1, 0, "1/2"}});
  add("rb-3", {{1, 0, 1, "1"}}, {{0, 0, 0, "1"}, {0, 1, 1, "1"}});
  add("rb-4", {{1, 1, 0, "1"}}, {});
  add("rb-5", {{0, 0, 0, "1"}, {1, 0, 1, "1"}}, {{0, 1, 1, "1"}});
  add("rb-6", {}, {{1, 1, 0, "1"}});
  add("extra-1", {{0, 0, 0, "1"}}, {{1, 1, 1, "1"}});
  add("extra-2", {{0, 0, 0, "1"}, {0, 1, 1, "1"}, {1, 0, 1, "1"}}, {},
      "printed e2>e1=e2 read as e2<e1=e2; the printed reading violates (x<y)<z=x<(y*z)");
  add("extra-3", {{0, 1, 1, "-1"}}, {{0, 0, 0, "1"}, {0, 1, 1, "1"}});
  add("extra-4", {{0, 0, 1, "1"}}, {{0, 0, 1, "-1"}},
      "printed e1<e1=e2, e1<e1=-e2 read as e1<e1=e2, e1>e1=-e2");
  add("extra-5", {{0, 0, 1, "1/3"}}, {{0, 0, 1, "2/3"}});
  return out;
}

}  // namespace

std::vector<CatalogueEntry> builtin_catalogue() { return build(); }

const CatalogueEntry& catalogue_entry(const std::string& name) {
  static const std::vector<CatalogueEntry> entries = build();
  const auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.name == name; });
  if (it == entries.end()) throw Error(ErrorCode::SchemaError, "no catalogue entry named '" + name + "'");
  return *it;
}

ResultSet catalogue_result_set() {
  ResultSet rs;
  rs.label = "catalogue";
  rs.note = "two-dimensional dendriform dialgebras over Q; rb-* come from weight-zero Rota-Baxter operators";
  const auto entries = build();
  rs.counts["entries"] = entries.size();
  for (const auto& e : entries) {
    nlohmann::json ann{{"name", e.name}, {"typo_corrected", e.typo_corrected}};
    if (!e.note.empty()) ann["note"] = e.note;
    rs.items.push_back({std::move(ann), e.dialgebra});
  }
  return rs;
}

}  // namespace dendrop
