#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxgrowth/coxeter_matrix.hpp"

namespace coxgrowth {

/// Raised when a brute-force computation would exceed its resource cap.
class OracleHorizonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultBraidClassCap = 1'000'000;

/// A word in the generators. Each char holds a 0-based generator index.
struct Word {
  std::string letters;

  Word() = default;
  explicit Word(std::string l) : letters(std::move(l)) {}
  /// From 0-based indices.
  static Word from_indices(const std::vector<int>& idx);
  /// From 1-based digits such as "121" (rank <= 9 only).
  static Word from_digits(std::string_view digits);

  int length() const noexcept { return static_cast<int>(letters.size()); }
  int operator[](std::size_t i) const { return static_cast<unsigned char>(letters[i]); }
  Word appended(int s) const;
  /// 1-based rendering: "121" for rank <= 9, dot-separated otherwise, "e" for
  /// the identity.
  std::string to_string(int rank = 9) const;

  auto operator<=>(const Word&) const = default;
};

/// ShortLex-least reduced word of a group element; its letter count is ℓ(w).
struct NormalFormWord {
  Word word;
  int length() const noexcept { return word.length(); }
  auto operator<=>(const NormalFormWord&) const = default;
};

/// All words reachable from a reduced word by braid moves, sorted.
/// Throws OracleHorizonError once more than `cap` words are found.
std::vector<Word> braid_class(const CoxeterMatrix& m, const Word& reduced,
                              std::size_t cap = kDefaultBraidClassCap);

/// Tits' criterion: reduced iff no braid-equivalent word has two equal
/// adjacent letters.
bool is_reduced(const CoxeterMatrix& m, const Word& w,
                std::size_t cap = kDefaultBraidClassCap);

/// Smallest member of braid_class(reduced).
NormalFormWord normal_form(const CoxeterMatrix& m, const Word& reduced,
                           std::size_t cap = kDefaultBraidClassCap);

/// In(w): generators s with some reduced expression of w ending in s.
SubsetMask right_descents(const CoxeterMatrix& m, const NormalFormWord& w,
                          std::size_t cap = kDefaultBraidClassCap);

struct OracleElement {
  NormalFormWord normal_form;
  SubsetMask descents;
  int length() const noexcept { return normal_form.length(); }
};

/// The ball of radius `horizon` in W, with the Cayley graph restricted to it.
class ElementTable {
 public:
  static constexpr std::int32_t kBeyondHorizon = -1;

  const CoxeterMatrix& matrix() const noexcept { return matrix_; }
  int horizon() const noexcept { return horizon_; }
  /// True when a sphere came out empty, i.e. the whole (finite) group is here.
  bool exhausted() const noexcept { return exhausted_; }

  std::size_t size() const noexcept { return elements_.size(); }
  const OracleElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<OracleElement>& elements() const noexcept { return elements_; }

  /// Index of w*s, or kBeyondHorizon.
  std::int32_t neighbor(std::size_t i, int s) const {
    return neighbors_[i * static_cast<std::size_t>(matrix_.rank()) + static_cast<std::size_t>(s)];
  }

  /// Sphere sizes for lengths 0..horizon (trailing zeros once exhausted).
  std::vector<std::size_t> sphere_sizes() const;
  /// Element indices of length k, in generation order.
  std::pair<std::size_t, std::size_t> sphere_range(int k) const;

  /// Index of the element represented by any reduced word in the ball, or -1.
  std::int32_t find(const Word& reduced) const;

 private:
  friend ElementTable bfs_enumerate(const CoxeterMatrix&, int, std::size_t);
  CoxeterMatrix matrix_;
  int horizon_ = 0;
  bool exhausted_ = false;
  std::vector<OracleElement> elements_;
  std::vector<std::size_t> sphere_start_;
  std::vector<std::int32_t> neighbors_;
  std::unordered_map<std::string, std::int32_t> word_index_;
};

/// Breadth-first enumeration of all elements with ℓ(w) <= horizon. Sphere
/// k+1 is the set of normal forms of w*s with w in sphere k and s not in
/// In(w). Stops early if a sphere is empty.
ElementTable bfs_enumerate(const CoxeterMatrix& m, int horizon,
                           std::size_t cap = kDefaultBraidClassCap);

/// Result of checking coset structure for W_T on an enumerated ball.
struct CosetReport {
  SubsetMask subset;
  std::size_t complete_cosets = 0;
  /// Cosets touching the horizon boundary; not checked.
  std::size_t skipped_incomplete = 0;
  /// Distinct length profiles ℓ(w)-ℓ(u) (as histograms) seen on complete
  /// cosets.
  std::vector<std::vector<std::size_t>> profiles;
  std::vector<std::string> failures;
  bool passed() const noexcept { return failures.empty(); }
};

/// Partitions the ball into right cosets wW_T (components of the T-edges of
/// the Cayley graph) and, on every coset lying entirely inside the ball,
/// checks that there is a unique shortest element u and that
/// ℓ(w) = ℓ(u) + ℓ_T(u^{-1}w), with ℓ_T measured as distance along T-edges.
CosetReport coset_decomposition_check(const ElementTable& table, SubsetMask t);

/// For each element index, the index of the shortest element of its T-coset
/// as seen inside the ball (union of T-edge components).
std::vector<std::int32_t> coset_minima(const ElementTable& table, SubsetMask t);

}  // namespace coxgrowth
