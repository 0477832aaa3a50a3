#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxgrowth/coxeter_matrix.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/ratfunc.hpp"
#include "coxgrowth/word_oracle.hpp"

namespace coxgrowth {

// Simplices are pure combinatorics. In every complex built from a chamber
// model Y, a simplex of type T is determined by a coset uW_T (u shortest)
// together with a simplex of Y of that type:
//   coxeter  Y = Δ,   one face Δ_T per proper T, dim |S|-|T|-1
//   davis    Y = D,   chains T = T0 ⊊ T1 ⊊ ... ⊊ Tk of spherical sets, dim k
//   tits     Y = Δ^f, one face Δ_T per spherical T, dim |S|-|T|-1
// For the Tits non-complex we only track "spherical type"; faces whose
// closure meets removed simplices are still counted, which is all the
// Euler characteristic bookkeeping needs.
enum class ComplexKind { coxeter, davis, tits };

std::string to_string(ComplexKind k);
/// Throws std::invalid_argument on unknown names.
ComplexKind parse_complex_kind(const std::string& name);

struct SimplexRecord {
  ComplexKind kind;
  /// Index into the ElementTable of the shortest element u of the coset.
  std::int32_t representative;
  /// S(σ).
  SubsetMask type;
  /// Davis: the chain T0 ⊊ ... ⊊ Tk. Otherwise the single entry {type}.
  std::vector<SubsetMask> chain;
  int dim;
  /// ℓ(σ) = ℓ(u), or for tits L(σ) = ℓ(u) + m_T.
  int length_value;
};

/// Simplex types available in one chamber, each with its dimension.
struct ChamberSimplex {
  std::vector<SubsetMask> chain;
  int dim;
  SubsetMask type() const { return chain.front(); }
};
std::vector<ChamberSimplex> chamber_simplices(const CoxeterMatrix& m, ComplexKind kind);

/// Every simplex with length_value <= n, each exactly once, sorted by
/// (length_value, type, representative, chain). The table must reach
/// length n (or be exhausted). Davis requires infinite W.
std::vector<SimplexRecord> enumerate_simplices(const ElementTable& table, ComplexKind kind, int n);

/// c_k = Σ_{length_value = k} (-1)^dim for k <= n.
SeriesTruncation chi_t_truncated(const std::vector<SimplexRecord>& records, int n);
/// Builds the ball itself.
SeriesTruncation chi_t_truncated(const CoxeterMatrix& m, ComplexKind kind, int n);

struct TypeCensus {
  ComplexKind kind;
  SubsetMask type;
  SeriesTruncation census;
  /// Series of the closed form: coxeter (-1)^{|S|-|T|-1} W/W_T;
  /// davis (-1)^|T| χ_T W/W_T; tits (-1)^{|S|-|T|-1} W(t)/W_T(1/t).
  SeriesTruncation closed_form;
  bool agrees() const { return census == closed_form; }
};

/// Types valid for `kind`: proper subsets (coxeter), spherical subsets
/// (davis, tits).
std::vector<SubsetMask> valid_types(const CoxeterMatrix& m, ComplexKind kind);

TypeCensus chi_t_by_type(const std::vector<SimplexRecord>& records, const GrowthTable& growth,
                         ComplexKind kind, SubsetMask t, int n);

/// Σ_{σ<D, S(σ)=T} (-1)^dim σ, counted over chains starting at T.
long davis_inner_sum(const CoxeterMatrix& m, SubsetMask t);

struct LemmaReport {
  std::size_t chambers = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::string> counterexamples;
  bool passed() const noexcept { return counterexamples.empty(); }
};

/// For each w with ℓ(w) <= n and each simplex σ of the chamber wY checks
///   ℓ(σ) < ℓ(w)  <=>  S(σ) ∩ In(w) ≠ ∅,
/// with ℓ(σ) found by brute force as the shortest element of wW_{S(σ)}.
LemmaReport check_lemma6(const ElementTable& table, ComplexKind kind, int n);

/// χ(Y^A) for the union of panels Y^A = ∪_{s∈A} Y_s of the chamber model,
/// by direct simplex count.
long panel_union_euler(const CoxeterMatrix& m, ComplexKind kind, SubsetMask a);

struct LocalSumReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool passed() const noexcept { return failures.empty(); }
};

/// For each w with ℓ(w) <= n evaluates Σ_{T⊆In(w)} (-1)^{|S|-|T|-1}
/// directly and checks it is 0 unless w = 1, where it is (-1)^{|S|-1}.
LocalSumReport local_sum_check(const ElementTable& table, int n);

}  // namespace coxgrowth
