#pragma once

// The eleven two-dimensional dendriform dialgebras over Q used as reference
// fixtures: six that arise from weight-zero Rota-Baxter operators (rb-1..rb-6)
// and five further ones (extra-1..extra-5). Products not listed are zero.

#include <string>
#include <vector>

#include "dendrop/document.hpp"

namespace dendrop {

struct CatalogueEntry {
  std::string name;
  DendriformDi dialgebra;
  bool typo_corrected = false;
  std::string note;  // the correction applied, empty otherwise
};

std::vector<CatalogueEntry> builtin_catalogue();

/// Looks an entry up by name; SchemaError if there is none.
const CatalogueEntry& catalogue_entry(const std::string& name);

/// The catalogue as a result set (annotations: name, typo_corrected, note).
ResultSet catalogue_result_set();

}  // namespace dendrop
