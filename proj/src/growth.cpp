#include "coxgrowth/growth.hpp"

#include <algorithm>

namespace coxgrowth {

namespace {

RationalFunction signed_reciprocal(const RationalFunction& r, int sign) {
  return sign > 0 ? r : -r;
}

}  // namespace

GrowthTable::GrowthTable(const CoxeterMatrix& m) : matrix_(m) {
  auto all = submasks(m.full_mask());
  std::stable_sort(all.begin(), all.end(),
                   [](SubsetMask a, SubsetMask b) { return a.size() < b.size(); });
  for (SubsetMask t : all) compute(t);
  spherical_ = spherical_subsets(m);
}

GrowthTable::GrowthTable(const CoxeterMatrix& m, const std::vector<SubsetMask>& order)
    : matrix_(m) {
  for (SubsetMask t : order) compute(t);
  spherical_ = spherical_subsets(m);
}

void GrowthTable::compute(SubsetMask t) {
  if (entries_.count(t.bits)) return;
  Entry e;
  e.info = classify(matrix_, t);
  if (t.empty()) {
    e.series = RationalFunction::constant(1);
    e.reciprocal = e.series;
    entries_.emplace(t.bits, std::move(e));
    return;
  }

  // Σ over proper subsets of (-1)^|T'| / W_T'.
  RationalFunction proper_sum;
  for (SubsetMask sub : submasks(t)) {
    if (sub == t) continue;
    compute(sub);
    proper_sum += signed_reciprocal(entries_.at(sub.bits).reciprocal, sign_power(sub.size()));
  }

  const int top_sign = sign_power(t.size());
  if (!e.info.finite) {
    // (-1)^|T| / W_T = -proper_sum
    e.reciprocal = top_sign > 0 ? -proper_sum : proper_sum;
    if (e.reciprocal.is_zero()) {
      throw InvariantViolation("1/W_T vanishes for infinite T = " + t.to_string());
    }
    e.series = e.reciprocal.reciprocal();
  } else {
    if (proper_sum.is_zero()) {
      throw InvariantViolation("recursion divisor vanishes for finite T = " + t.to_string());
    }
    IntPolynomial top = IntPolynomial::monomial(1, e.info.longest_length) -
                        IntPolynomial::constant(top_sign);
    e.series = RationalFunction(top) / proper_sum;
    if (!e.series.is_polynomial() || e.series.numerator().degree() != e.info.longest_length) {
      throw InvariantViolation("W_T for finite T = " + t.to_string() +
                               " is not a polynomial of degree " +
                               std::to_string(e.info.longest_length));
    }
    e.reciprocal = e.series.reciprocal();
  }
  entries_.emplace(t.bits, std::move(e));
}

const GrowthTable::Entry& GrowthTable::entry(SubsetMask t) const {
  auto it = entries_.find(t.bits);
  if (it == entries_.end()) throw std::out_of_range("no growth entry for " + t.to_string());
  return it->second;
}

const RationalFunction& GrowthTable::series(SubsetMask t) const { return entry(t).series; }
const RationalFunction& GrowthTable::reciprocal(SubsetMask t) const { return entry(t).reciprocal; }
const FiniteTypeInfo& GrowthTable::info(SubsetMask t) const { return entry(t).info; }

RationalFunction growth_series(const CoxeterMatrix& m, SubsetMask t) {
  return GrowthTable(m, {t}).series(t);
}

long chi_coefficient(const std::vector<SubsetMask>& spherical, SubsetMask t) {
  long chi = 0;
  for (SubsetMask u : spherical) {
    if (t.is_subset_of(u)) chi += sign_power(u.size());
  }
  return chi;
}

long chi_coefficient(const CoxeterMatrix& m, SubsetMask t) {
  return chi_coefficient(spherical_subsets(m), t);
}

long NerveLink::euler_characteristic() const {
  long chi = 0;
  for (int d : dimensions) chi += sign_power(d);
  return chi;
}

NerveLink nerve_link(const CoxeterMatrix& m, SubsetMask t) {
  NerveLink link;
  link.base = t;
  for (int u = 0; u < m.rank(); ++u) {
    if (!t.contains(u) && is_spherical(m, t | SubsetMask::singleton(u))) link.vertices.push_back(u);
  }
  const std::size_t nv = link.vertices.size();
  for (std::uint32_t pick = 1; pick < (1u << nv); ++pick) {
    SubsetMask u = t;
    for (std::size_t i = 0; i < nv; ++i) {
      if ((pick >> i) & 1u) u = u | SubsetMask::singleton(link.vertices[i]);
    }
    if (is_spherical(m, u)) {
      link.simplices.push_back(u);
      link.dimensions.push_back(u.size() - t.size() - 1);
    }
  }
  return link;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

IdentityReport verify_identity(const GrowthTable& table, int which) {
  const CoxeterMatrix& m = table.matrix();
  const SubsetMask full = m.full_mask();
  const FiniteTypeInfo& whole = table.info(full);
  IdentityReport r;
  r.which = which;

  auto alternating_sum = [&](const std::vector<SubsetMask>& family) {
    RationalFunction sum;
    for (SubsetMask t : family) sum += signed_reciprocal(table.reciprocal(t), sign_power(t.size()));
    return sum;
  };

  switch (which) {
    case 1:
      if (whole.finite) {
        r.note = "requires infinite W";
        return r;
      }
      r.lhs = alternating_sum(submasks(full));
      r.rhs = RationalFunction();
      r.by_construction = true;
      break;
    case 2:
      if (!whole.finite) {
        r.note = "requires finite W";
        return r;
      }
      r.lhs = alternating_sum(submasks(full));
      r.rhs = RationalFunction(IntPolynomial::monomial(1, whole.longest_length)) / table.full_series();
      r.by_construction = true;
      break;
    case 3: {
      RationalFunction sum;
      for (SubsetMask t : table.spherical()) {
        long coeff = sign_power(t.size()) * chi_coefficient(table.spherical(), t);
        sum += RationalFunction::constant(coeff) * table.reciprocal(t);
      }
      r.lhs = sum;
      r.rhs = table.reciprocal(full);
      break;
    }
    case 4:
      r.lhs = alternating_sum(table.spherical());
      r.rhs = substitute_t_inverse(table.full_series()).reciprocal();
      break;
    default:
      throw std::invalid_argument("identity must be 1, 2, 3 or 4");
  }
  r.verdict = (*r.lhs == *r.rhs) ? Verdict::holds : Verdict::fails;
  return r;
}

}  // namespace coxgrowth
