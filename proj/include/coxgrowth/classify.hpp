#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxgrowth/coxeter_matrix.hpp"

namespace coxgrowth {

enum class FiniteFamily { A, B, D, E, F, H, I2 };

/// One irreducible finite component of a parabolic subgroup.
struct FiniteComponent {
  FiniteFamily family;
  int rank;
  /// m for I2(m); the rank for every other family.
  int parameter;
  SubsetMask generators;

  /// "A3", "E6", "I2(5)", ...
  std::string label() const;
  int positive_roots() const;
  std::uint64_t group_order() const;
};

/// Finiteness verdict for W_T. Components and longest_length are only
/// meaningful when `finite` is set.
struct FiniteTypeInfo {
  bool finite = false;
  std::vector<FiniteComponent> components;
  int longest_length = 0;
  std::uint64_t order = 0;

  /// e.g. "A2 x A1", "1" for the trivial group, "infinite".
  std::string label() const;
};

/// Matches the diagram of T against the finite-type catalog
/// (A_n, B_n, D_n, E6-8, F4, H3, H4, I2(m)) component by component.
FiniteTypeInfo classify(const CoxeterMatrix& m, SubsetMask t);

/// Convenience: classify(m, t).finite.
bool is_spherical(const CoxeterMatrix& m, SubsetMask t);

/// All spherical T in increasing mask order. Always contains ∅ and the
/// singletons.
std::vector<SubsetMask> spherical_subsets(const CoxeterMatrix& m);

/// Catalog diagram of a finite irreducible type as a standalone matrix;
/// the generator numbering follows the usual Bourbaki-style path layout.
CoxeterMatrix finite_type_matrix(FiniteFamily family, int rank, int parameter = 0);

}  // namespace coxgrowth
