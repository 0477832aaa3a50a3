#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxgrowth/classify.hpp"
#include "coxgrowth/coxeter_matrix.hpp"
#include "coxgrowth/ratfunc.hpp"

namespace coxgrowth {

/// Internal inconsistency, e.g. a finite type whose recursion divisor
/// vanishes. Always indicates a bug upstream (usually in classification).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// W_T(t) for every T ⊆ S, computed by recursion on |T|.
///
/// For infinite W_T the alternating sum of 1/W_T' over all T' ⊆ T vanishes,
/// which determines 1/W_T from the proper subsets. For finite W_T with longest
/// element of length m the same sum equals t^m/W_T(t), which gives
///   W_T = (t^m - (-1)^|T|) / Σ_{T'⊊T} (-1)^|T'| / W_T'.
/// The finished table is immutable.
class GrowthTable {
 public:
  /// Fills every entry, subsets taken by increasing popcount.
  explicit GrowthTable(const CoxeterMatrix& m);
  /// Fills entries on demand in the given request order (dependencies are
  /// pulled in recursively). Entries not reachable from `order` stay empty.
  GrowthTable(const CoxeterMatrix& m, const std::vector<SubsetMask>& order);

  const CoxeterMatrix& matrix() const noexcept { return matrix_; }
  const RationalFunction& series(SubsetMask t) const;
  const RationalFunction& reciprocal(SubsetMask t) const;
  const FiniteTypeInfo& info(SubsetMask t) const;
  bool contains(SubsetMask t) const { return entries_.count(t.bits) != 0; }

  const RationalFunction& full_series() const { return series(matrix_.full_mask()); }
  const std::vector<SubsetMask>& spherical() const noexcept { return spherical_; }

 private:
  struct Entry {
    FiniteTypeInfo info;
    RationalFunction series;
    RationalFunction reciprocal;
  };
  const Entry& entry(SubsetMask t) const;
  void compute(SubsetMask t);

  CoxeterMatrix matrix_;
  std::map<std::uint32_t, Entry> entries_;
  std::vector<SubsetMask> spherical_;
};

/// W_T(t) alone (builds the entries below T).
RationalFunction growth_series(const CoxeterMatrix& m, SubsetMask t);

/// χ_T = Σ_{T ⊆ U ∈ 𝒮} (-1)^|U|.
long chi_coefficient(const CoxeterMatrix& m, SubsetMask t);
long chi_coefficient(const std::vector<SubsetMask>& spherical, SubsetMask t);

/// The link complex L_T: its simplices are the spherical U ⊋ T, with
/// vertices T∪{u} and dimension |U|-|T|-1.
struct NerveLink {
  SubsetMask base;
  std::vector<int> vertices;
  std::vector<SubsetMask> simplices;
  std::vector<int> dimensions;

  long euler_characteristic() const;
};

/// Builds L_T from its vertex set: a set of vertices spans a simplex iff its
/// union with T is spherical.
NerveLink nerve_link(const CoxeterMatrix& m, SubsetMask t);

enum class Verdict { holds, fails, not_applicable };
std::string to_string(Verdict v);

struct IdentityReport {
  int which = 0;
  Verdict verdict = Verdict::not_applicable;
  /// Set for the identity the recursion itself used on the full set S.
  bool by_construction = false;
  std::optional<RationalFunction> lhs;
  std::optional<RationalFunction> rhs;
  std::string note;
};

/// Assembles both sides of one of the four recurrence identities:
///  1. Σ_{T⊆S} (-1)^|T| / W_T = 0                   (W infinite)
///  2. Σ_{T⊆S} (-1)^|T| / W_T = t^m / W(t)           (W finite)
///  3. Σ_{T∈𝒮} (-1)^|T| χ_T / W_T = 1 / W(t)
///  4. Σ_{T∈𝒮} (-1)^|T| / W_T = 1 / W(1/t)
IdentityReport verify_identity(const GrowthTable& table, int which);

}  // namespace coxgrowth
