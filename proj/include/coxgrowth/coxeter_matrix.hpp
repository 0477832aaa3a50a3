#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coxgrowth {

/// Largest supported number of generators. Subsets of S are stored as
/// machine-word bitmasks, so every subset family is enumerable outright.
inline constexpr int kMaxRank = 16;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Order m_st of a product of two generators. Infinity is a distinct state,
/// never an integer value, so it cannot leak into arithmetic.
class EdgeOrder {
 public:
  constexpr EdgeOrder() = default;
  static constexpr EdgeOrder finite(std::uint32_t m) { return EdgeOrder(m); }
  static constexpr EdgeOrder infinity() {
    EdgeOrder e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }
  /// Throws std::logic_error on infinity.
  std::uint32_t value() const;

  /// True for m >= 3 or infinity (an edge of the Coxeter diagram).
  constexpr bool is_edge() const noexcept { return infinite_ || value_ >= 3; }

  constexpr bool operator==(const EdgeOrder&) const = default;

  std::string to_string() const;

 private:
  constexpr explicit EdgeOrder(std::uint32_t m) : value_(m) {}
  std::uint32_t value_ = 1;
  bool infinite_ = false;
};

/// A subset T of the generating set, as a bitmask over 0-based indices.
struct SubsetMask {
  std::uint32_t bits = 0;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t b) : bits(b) {}

  static constexpr SubsetMask full(int rank) {
    return SubsetMask(rank >= 32 ? ~0u : ((1u << rank) - 1u));
  }
  static constexpr SubsetMask singleton(int i) { return SubsetMask(1u << i); }

  constexpr bool contains(int i) const noexcept { return (bits >> i) & 1u; }
  constexpr int size() const noexcept { return std::popcount(bits); }
  constexpr bool empty() const noexcept { return bits == 0; }
  constexpr bool is_subset_of(SubsetMask o) const noexcept {
    return (bits & ~o.bits) == 0;
  }
  constexpr bool intersects(SubsetMask o) const noexcept {
    return (bits & o.bits) != 0;
  }
  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits | o.bits); }
  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits & o.bits); }
  constexpr SubsetMask without(SubsetMask o) const { return SubsetMask(bits & ~o.bits); }
  constexpr auto operator<=>(const SubsetMask&) const = default;

  /// Generator indices in increasing order.
  std::vector<int> elements() const;
  /// 1-based rendering such as "{1,3}".
  std::string to_string() const;
};

/// (-1)^k for an integer k.
constexpr int sign_power(int k) { return (k % 2 == 0) ? 1 : -1; }

/// A Coxeter system (W,S) given by its symmetric matrix of orders.
///
/// Rank 0 is permitted only as the sentinel for the trivial group W_∅ (see
/// restrict()); the file parser always produces rank >= 1.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  /// Every off-diagonal pair starts at order 2.
  explicit CoxeterMatrix(int rank);
  /// Builds from a full row-major table; validates symmetry and entries.
  CoxeterMatrix(int rank, std::vector<EdgeOrder> orders);

  int rank() const noexcept { return rank_; }
  SubsetMask full_mask() const noexcept { return SubsetMask::full(rank_); }

  EdgeOrder order(int i, int j) const { return orders_[index(i, j)]; }
  /// Sets m_ij = m_ji; rejects i == j and entries below 2.
  void set_order(int i, int j, EdgeOrder m);

  bool operator==(const CoxeterMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(rank_) +
           static_cast<std::size_t>(j);
  }
  int rank_ = 0;
  std::vector<EdgeOrder> orders_;
};

/// The parabolic subsystem on T together with the map back to parent indices.
struct Restriction {
  CoxeterMatrix matrix;
  std::vector<int> parent_index;
};

/// Parses the `.cox` text format: a `rank N` line, then `m I J K` lines
/// with 1-based indices; `#` starts a comment. Omitted pairs default to 2.
CoxeterMatrix parse_coxeter_file(std::string_view text);

/// Reads and parses a `.cox` file from disk.
CoxeterMatrix load_coxeter_file(const std::string& path);

/// Canonical text: `rank`, then `m` lines in lexicographic order, K=2 omitted.
std::string serialize(const CoxeterMatrix& m);

Restriction restrict(const CoxeterMatrix& m, SubsetMask t);

/// Connected components of the diagram on T (edges where m_st >= 3 or ∞),
/// ordered by least element.
std::vector<SubsetMask> diagram_components(const CoxeterMatrix& m, SubsetMask t);

/// All submasks of `t`, in increasing numeric order.
std::vector<SubsetMask> submasks(SubsetMask t);

}  // namespace coxgrowth
