#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxgrowth/coxeter_matrix.hpp"

namespace coxgrowth {

struct CatalogEntry {
  std::string name;
  std::string description;
  CoxeterMatrix matrix;
  /// Canonical display of W(t).
  std::optional<std::string> growth;
  /// Sphere sizes for lengths 0..spheres.size()-1.
  std::vector<std::size_t> spheres;
};

/// Named systems spanning the finite, affine, hyperbolic and right-angled
/// regimes. Names are unique.
const std::vector<CatalogEntry>& catalog();

/// nullptr when no entry has this name.
const CatalogEntry* find_catalog_entry(const std::string& name);

}  // namespace coxgrowth
