#pragma once

// JSON document format for every object the library handles.
//
//   {"schema_version":"1","field":{"kind":"rational"} | {"kind":"prime","p":3},
//    "payload":{"kind":"algebra", ...}}
//
// Scalars are strings ("1/2", "-3") or integers, never floats. Structure
// constants are sparse lists of {"i","j","k","c"} with 0-based indices; a
// dense n x n x n nested list is accepted on input. Matrices are flat
// row-major lists (nested rows accepted on input). Emission is canonical:
// sorted keys, no whitespace, sparse tensors sorted by (i,j,k), scalars in
// lowest terms.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dendrop/operators.hpp"

namespace dendrop {

inline constexpr std::string_view kSchemaVersion = "1";

using ItemValue = std::variant<Algebra, DendriformDi, DendriformTri, RotaBaxterOperator, OOperator, Matrix>;

struct ResultItem {
  nlohmann::json annotations = nlohmann::json::object();  // e.g. {"name":"rb-2","typo_corrected":true}
  ItemValue value;

  friend bool operator==(const ResultItem&, const ResultItem&) = default;
};

struct ResultSet {
  std::string label;
  std::string note;
  std::map<std::string, std::uint64_t> counts;
  std::vector<ResultItem> items;

  friend bool operator==(const ResultSet&, const ResultSet&) = default;
};

using Payload = std::variant<Algebra, Bimodule, BimoduleAlgebra, OOperator, DendriformDi, DendriformTri,
                             ValidationReport, ResultSet, Matrix, RotaBaxterOperator>;

struct Document {
  std::string schema_version{kSchemaVersion};
  FieldSpec field;
  Payload payload;

  friend bool operator==(const Document&, const Document&) = default;
};

/// The "kind" string of a payload.
std::string_view payload_kind(const Payload& payload);

/// SyntaxError (with byte offset) for malformed JSON, SchemaError naming the
/// offending key for structural problems, BadRational for bad scalars,
/// FieldMismatch when a nested "field" disagrees with the document's.
Document parse_document(std::string_view text);

/// Canonical compact serialization; parse_document(emit_document(d)) == d.
std::string emit_document(const Document& doc);

/// Wraps a payload with the given field.
Document make_document(FieldSpec field, Payload payload);

}  // namespace dendrop
