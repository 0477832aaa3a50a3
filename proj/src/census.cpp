#include "coxgrowth/census.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "coxgrowth/classify.hpp"

namespace coxgrowth {

std::string to_string(ComplexKind k) {
  switch (k) {
    case ComplexKind::coxeter: return "coxeter";
    case ComplexKind::davis: return "davis";
    case ComplexKind::tits: return "tits";
  }
  return "?";
}

ComplexKind parse_complex_kind(const std::string& name) {
  if (name == "coxeter") return ComplexKind::coxeter;
  if (name == "davis") return ComplexKind::davis;
  if (name == "tits") return ComplexKind::tits;
  throw std::invalid_argument("unknown complex kind `" + name + "`");
}

namespace {

void extend_chains(const std::vector<SubsetMask>& spherical, std::vector<SubsetMask>& chain,
                   std::vector<ChamberSimplex>& out) {
  out.push_back(ChamberSimplex{chain, static_cast<int>(chain.size()) - 1});
  for (SubsetMask u : spherical) {
    if (chain.back().is_subset_of(u) && u != chain.back()) {
      chain.push_back(u);
      extend_chains(spherical, chain, out);
      chain.pop_back();
    }
  }
}

std::vector<ChamberSimplex> chains_from(const std::vector<SubsetMask>& spherical, SubsetMask t) {
  std::vector<ChamberSimplex> out;
  std::vector<SubsetMask> chain{t};
  extend_chains(spherical, chain, out);
  return out;
}

void require_davis_allowed(const CoxeterMatrix& m) {
  if (is_spherical(m, m.full_mask())) {
    throw std::invalid_argument(
        "the Davis complex census is only defined here for infinite W");
  }
}

void require_reach(const ElementTable& table, int n) {
  if (n > table.horizon() && !table.exhausted()) {
    throw std::invalid_argument("element table horizon " + std::to_string(table.horizon()) +
                                " does not reach length " + std::to_string(n));
  }
}

}  // namespace

std::vector<SubsetMask> valid_types(const CoxeterMatrix& m, ComplexKind kind) {
  if (kind == ComplexKind::coxeter) {
    std::vector<SubsetMask> out;
    for (SubsetMask t : submasks(m.full_mask())) {
      if (t != m.full_mask()) out.push_back(t);
    }
    return out;
  }
  return spherical_subsets(m);
}

std::vector<ChamberSimplex> chamber_simplices(const CoxeterMatrix& m, ComplexKind kind) {
  const int rank = m.rank();
  std::vector<ChamberSimplex> out;
  if (kind == ComplexKind::davis) {
    auto spherical = spherical_subsets(m);
    for (SubsetMask t : spherical) {
      auto c = chains_from(spherical, t);
      out.insert(out.end(), c.begin(), c.end());
    }
    return out;
  }
  for (SubsetMask t : valid_types(m, kind)) {
    out.push_back(ChamberSimplex{{t}, rank - t.size() - 1});
  }
  return out;
}

std::vector<SimplexRecord> enumerate_simplices(const ElementTable& table, ComplexKind kind, int n) {
  const CoxeterMatrix& m = table.matrix();
  if (kind == ComplexKind::davis) require_davis_allowed(m);
  require_reach(table, n);

  auto simplices = chamber_simplices(m, kind);
  std::vector<SimplexRecord> records;
  std::map<std::uint32_t, std::vector<std::int32_t>> minima;
  std::map<std::uint32_t, int> longest;
  for (const auto& cs : simplices) {
    SubsetMask t = cs.type();
    if (!minima.count(t.bits)) {
      minima.emplace(t.bits, coset_minima(table, t));
      if (kind == ComplexKind::tits) longest.emplace(t.bits, classify(m, t).longest_length);
    }
    const auto& mins = minima.at(t.bits);
    const int shift = kind == ComplexKind::tits ? longest.at(t.bits) : 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (mins[i] != static_cast<std::int32_t>(i)) continue;
      const int value = table[i].length() + shift;
      if (value > n) continue;
      records.push_back(SimplexRecord{kind, static_cast<std::int32_t>(i), t, cs.chain, cs.dim, value});
    }
  }
  std::sort(records.begin(), records.end(), [](const SimplexRecord& a, const SimplexRecord& b) {
    if (a.length_value != b.length_value) return a.length_value < b.length_value;
    if (a.type != b.type) return a.type < b.type;
    if (a.representative != b.representative) return a.representative < b.representative;
    return a.chain < b.chain;
  });
  return records;
}

SeriesTruncation chi_t_truncated(const std::vector<SimplexRecord>& records, int n) {
  SeriesTruncation s{std::vector<mpz_class>(static_cast<std::size_t>(n) + 1)};
  for (const auto& r : records) {
    if (r.length_value <= n) s.coefficients[static_cast<std::size_t>(r.length_value)] += sign_power(r.dim);
  }
  return s;
}

SeriesTruncation chi_t_truncated(const CoxeterMatrix& m, ComplexKind kind, int n) {
  ElementTable table = bfs_enumerate(m, n);
  return chi_t_truncated(enumerate_simplices(table, kind, n), n);
}

long davis_inner_sum(const CoxeterMatrix& m, SubsetMask t) {
  long sum = 0;
  for (const auto& c : chains_from(spherical_subsets(m), t)) sum += sign_power(c.dim);
  return sum;
}

TypeCensus chi_t_by_type(const std::vector<SimplexRecord>& records, const GrowthTable& growth,
                         ComplexKind kind, SubsetMask t, int n) {
  const CoxeterMatrix& m = growth.matrix();
  const int rank = m.rank();
  TypeCensus out{kind, t, SeriesTruncation{std::vector<mpz_class>(static_cast<std::size_t>(n) + 1)}, {}};
  for (const auto& r : records) {
    if (r.type == t && r.length_value <= n) {
      out.census.coefficients[static_cast<std::size_t>(r.length_value)] += sign_power(r.dim);
    }
  }

  const RationalFunction& w = growth.full_series();
  RationalFunction closed;
  switch (kind) {
    case ComplexKind::coxeter:
      closed = RationalFunction::constant(sign_power(rank - t.size() - 1)) * w * growth.reciprocal(t);
      break;
    case ComplexKind::davis:
      closed = RationalFunction::constant(sign_power(t.size()) *
                                          chi_coefficient(growth.spherical(), t)) *
               w * growth.reciprocal(t);
      break;
    case ComplexKind::tits:
      closed = RationalFunction::constant(sign_power(rank - t.size() - 1)) * w /
               substitute_t_inverse(growth.series(t));
      break;
  }
  out.closed_form = series_expand(closed, n);
  return out;
}

LemmaReport check_lemma6(const ElementTable& table, ComplexKind kind, int n) {
  if (kind == ComplexKind::tits) {
    throw std::invalid_argument("the panel-union lemma concerns the coxeter and davis complexes");
  }
  const CoxeterMatrix& m = table.matrix();
  if (kind == ComplexKind::davis) require_davis_allowed(m);
  require_reach(table, n);

  LemmaReport report;
  auto simplices = chamber_simplices(m, kind);
  std::map<std::uint32_t, std::vector<std::int32_t>> minima;
  for (const auto& cs : simplices) {
    if (!minima.count(cs.type().bits)) minima.emplace(cs.type().bits, coset_minima(table, cs.type()));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    const OracleElement& w = table[i];
    if (w.length() > n) continue;
    ++report.chambers;
    for (const auto& cs : simplices) {
      const auto u = static_cast<std::size_t>(minima.at(cs.type().bits)[i]);
      const bool shorter = table[u].length() < w.length();
      const bool in_panel_union = cs.type().intersects(w.descents);
      ++report.pairs_checked;
      if (shorter != in_panel_union) {
        std::string chain;
        for (SubsetMask c : cs.chain) chain += c.to_string();
        report.counterexamples.push_back("w=" + w.normal_form.word.to_string(m.rank()) +
                                         " simplex " + chain);
      }
    }
  }
  return report;
}

long panel_union_euler(const CoxeterMatrix& m, ComplexKind kind, SubsetMask a) {
  if (kind == ComplexKind::tits) {
    throw std::invalid_argument("panel unions are computed for the coxeter and davis chambers");
  }
  long chi = 0;
  for (const auto& cs : chamber_simplices(m, kind)) {
    // σ lies in the panel Y_s iff s ∈ S(σ).
    if (cs.type().intersects(a)) chi += sign_power(cs.dim);
  }
  return chi;
}

LocalSumReport local_sum_check(const ElementTable& table, int n) {
  require_reach(table, n);
  const int rank = table.matrix().rank();
  LocalSumReport report;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const OracleElement& w = table[i];
    if (w.length() > n) continue;
    long sum = 0;
    for (SubsetMask t : submasks(w.descents)) sum += sign_power(rank - t.size() - 1);
    const long expected = w.length() == 0 ? sign_power(rank - 1) : 0;
    ++report.checked;
    if (sum != expected) {
      report.failures.push_back("w=" + w.normal_form.word.to_string(rank) + " local sum " +
                                std::to_string(sum) + ", expected " + std::to_string(expected));
    }
  }
  return report;
}

}  // namespace coxgrowth
