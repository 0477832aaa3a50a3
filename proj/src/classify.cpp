#include "coxgrowth/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxgrowth {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= static_cast<std::uint64_t>(k);
  return r;
}

// Label of the edge {i,j}: 0 for no edge, the order otherwise. Callers never
// pass infinite entries (those are rejected before matching).
int edge_label(const CoxeterMatrix& m, int i, int j) {
  EdgeOrder e = m.order(i, j);
  return e.is_edge() ? static_cast<int>(e.value()) : 0;
}

// Per-vertex signature: degree plus sorted incident labels.
std::vector<std::vector<int>> signatures(const CoxeterMatrix& m) {
  const int n = m.rank();
  std::vector<std::vector<int>> sig(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && edge_label(m, i, j) != 0) sig[i].push_back(edge_label(m, i, j));
    }
    std::sort(sig[i].begin(), sig[i].end());
  }
  return sig;
}

bool extend_isomorphism(const CoxeterMatrix& a, const CoxeterMatrix& b,
                        const std::vector<std::vector<int>>& sa,
                        const std::vector<std::vector<int>>& sb,
                        std::vector<int>& map, std::vector<bool>& used, int next) {
  const int n = a.rank();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand] || sa[next] != sb[cand]) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      ok = edge_label(a, next, prev) == edge_label(b, cand, map[prev]);
    }
    if (!ok) continue;
    map[next] = cand;
    used[cand] = true;
    if (extend_isomorphism(a, b, sa, sb, map, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

// Labeled-graph isomorphism: signature multiset prefilter, then backtracking.
bool isomorphic(const CoxeterMatrix& a, const CoxeterMatrix& b) {
  if (a.rank() != b.rank()) return false;
  auto sa = signatures(a);
  auto sb = signatures(b);
  auto ma = sa, mb = sb;
  std::sort(ma.begin(), ma.end());
  std::sort(mb.begin(), mb.end());
  if (ma != mb) return false;
  std::vector<int> map(a.rank(), -1);
  std::vector<bool> used(a.rank(), false);
  return extend_isomorphism(a, b, sa, sb, map, used, 0);
}

struct Candidate {
  FiniteFamily family;
  int parameter;
};

std::vector<Candidate> candidates_for_rank(int n, int dihedral_order) {
  std::vector<Candidate> out{{FiniteFamily::A, n}};
  if (n >= 2) out.push_back({FiniteFamily::B, n});
  if (n >= 4) out.push_back({FiniteFamily::D, n});
  if (n >= 6 && n <= 8) out.push_back({FiniteFamily::E, n});
  if (n == 4) out.push_back({FiniteFamily::F, 4});
  if (n == 3 || n == 4) out.push_back({FiniteFamily::H, n});
  if (n == 2 && dihedral_order >= 5) out.push_back({FiniteFamily::I2, dihedral_order});
  return out;
}

}  // namespace

std::string FiniteComponent::label() const {
  switch (family) {
    case FiniteFamily::A: return "A" + std::to_string(rank);
    case FiniteFamily::B: return "B" + std::to_string(rank);
    case FiniteFamily::D: return "D" + std::to_string(rank);
    case FiniteFamily::E: return "E" + std::to_string(rank);
    case FiniteFamily::F: return "F4";
    case FiniteFamily::H: return "H" + std::to_string(rank);
    case FiniteFamily::I2: return "I2(" + std::to_string(parameter) + ")";
  }
  return "?";
}

int FiniteComponent::positive_roots() const {
  switch (family) {
    case FiniteFamily::A: return rank * (rank + 1) / 2;
    case FiniteFamily::B: return rank * rank;
    case FiniteFamily::D: return rank * (rank - 1);
    case FiniteFamily::E: return rank == 6 ? 36 : rank == 7 ? 63 : 120;
    case FiniteFamily::F: return 24;
    case FiniteFamily::H: return rank == 3 ? 15 : 60;
    case FiniteFamily::I2: return parameter;
  }
  return 0;
}

std::uint64_t FiniteComponent::group_order() const {
  switch (family) {
    case FiniteFamily::A: return factorial(rank + 1);
    case FiniteFamily::B: return (std::uint64_t{1} << rank) * factorial(rank);
    case FiniteFamily::D: return (std::uint64_t{1} << (rank - 1)) * factorial(rank);
    case FiniteFamily::E: return rank == 6 ? 51840ull : rank == 7 ? 2903040ull : 696729600ull;
    case FiniteFamily::F: return 1152;
    case FiniteFamily::H: return rank == 3 ? 120 : 14400;
    case FiniteFamily::I2: return 2ull * static_cast<std::uint64_t>(parameter);
  }
  return 0;
}

std::string FiniteTypeInfo::label() const {
  if (!finite) return "infinite";
  if (components.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += " x ";
    s += components[i].label();
  }
  return s;
}

CoxeterMatrix finite_type_matrix(FiniteFamily family, int rank, int parameter) {
  CoxeterMatrix m(rank);
  auto path = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) m.set_order(i, i + 1, EdgeOrder::finite(3));
  };
  switch (family) {
    case FiniteFamily::A:
      path(rank);
      break;
    case FiniteFamily::B:
      path(rank);
      m.set_order(rank - 2, rank - 1, EdgeOrder::finite(4));
      break;
    case FiniteFamily::D:
      path(rank - 1);
      m.set_order(rank - 3, rank - 1, EdgeOrder::finite(3));
      break;
    case FiniteFamily::E:
      path(rank - 1);
      m.set_order(2, rank - 1, EdgeOrder::finite(3));
      break;
    case FiniteFamily::F:
      path(4);
      m.set_order(1, 2, EdgeOrder::finite(4));
      break;
    case FiniteFamily::H:
      path(rank);
      m.set_order(0, 1, EdgeOrder::finite(5));
      break;
    case FiniteFamily::I2:
      m.set_order(0, 1, EdgeOrder::finite(static_cast<std::uint32_t>(parameter)));
      break;
  }
  return m;
}

FiniteTypeInfo classify(const CoxeterMatrix& m, SubsetMask t) {
  FiniteTypeInfo info;
  info.finite = true;
  info.order = 1;
  for (SubsetMask comp : diagram_components(m, t)) {
    Restriction r = restrict(m, comp);
    const int n = r.matrix.rank();
    int dihedral = 0;
    bool has_infinity = false;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        EdgeOrder e = r.matrix.order(i, j);
        if (e.is_infinite()) has_infinity = true;
        else if (n == 2) dihedral = static_cast<int>(e.value());
      }
    }
    std::optional<FiniteComponent> match;
    if (!has_infinity) {
      for (const Candidate& c : candidates_for_rank(n, dihedral)) {
        if (isomorphic(r.matrix, finite_type_matrix(c.family, n, c.parameter))) {
          match = FiniteComponent{c.family, n, c.parameter, comp};
          break;
        }
      }
    }
    if (!match) {
      return FiniteTypeInfo{};
    }
    info.longest_length += match->positive_roots();
    info.order *= match->group_order();
    info.components.push_back(*match);
  }
  return info;
}

bool is_spherical(const CoxeterMatrix& m, SubsetMask t) { return classify(m, t).finite; }

std::vector<SubsetMask> spherical_subsets(const CoxeterMatrix& m) {
  std::vector<SubsetMask> out;
  for (SubsetMask t : submasks(m.full_mask())) {
    if (is_spherical(m, t)) out.push_back(t);
  }
  return out;
}

}  // namespace coxgrowth
