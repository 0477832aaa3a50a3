#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxgrowth/coxeter_matrix.hpp"
#include "coxgrowth/word_oracle.hpp"

namespace coxgrowth {

/// Descent tolerance for the floating-point representation.
inline constexpr double kGeometricTolerance = 1e-8;

struct GeometricElement {
  /// The word along which BFS first reached this element (reduced).
  Word word;
  SubsetMask descents;
  /// Column-major matrix of w acting on the root basis.
  std::vector<double> matrix;
};

/// Sphere-by-sphere enumeration in the Tits geometric representation,
/// σ_s(v) = v - 2B(α_s,v)α_s with B(α_s,α_t) = -cos(π/m_st) (and -1 for ∞).
/// s is a descent of w iff w(α_s) has all coordinates <= 0.
struct GeometricEnumeration {
  std::vector<std::vector<GeometricElement>> spheres;
  std::vector<std::size_t> sphere_sizes() const;
};

GeometricEnumeration geometric_enumerate(const CoxeterMatrix& m, int horizon,
                                         double tol = kGeometricTolerance);

struct CrossCheckReport {
  std::vector<std::size_t> rewriting_sizes;
  std::vector<std::size_t> geometric_sizes;
  std::size_t descent_mismatches = 0;
  std::vector<std::string> failures;
  bool passed() const noexcept { return failures.empty(); }
};

/// Compares sphere sizes and, element by element, lengths and descent sets
/// of the rewriting oracle against the geometric representation.
CrossCheckReport cross_check_oracles(const ElementTable& table, int horizon,
                                     double tol = kGeometricTolerance);

}  // namespace coxgrowth
