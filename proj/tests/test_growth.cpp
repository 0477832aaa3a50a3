#include <doctest.h>

#include "coxgrowth/catalog.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/word_oracle.hpp"
#include "test_support.hpp"

using namespace coxgrowth;

namespace {

using RF = RationalFunction;
using P = IntPolynomial;

CoxeterMatrix named(const char* name) {
  const CatalogEntry* e = find_catalog_entry(name);
  REQUIRE(e != nullptr);
  return e->matrix;
}

}  // namespace

TEST_CASE("growth: examples") {
  CHECK(growth_series(parse_coxeter_file("rank 1"), SubsetMask(1)) == RF(P{1, 1}));
  CHECK(growth_series(parse_coxeter_file("rank 2\nm 1 2 3"), SubsetMask(3)) == RF(P{1, 2, 2, 1}));
  CHECK(growth_series(parse_coxeter_file("rank 2\nm 1 2 inf"), SubsetMask(3)) == RF(P{1, 1}, P{1, -1}));
  CHECK(growth_series(parse_coxeter_file("rank 2"), SubsetMask(3)) == RF(P{1, 2, 1}));
  CHECK(growth_series(named("A3"), SubsetMask(7)) == RF(P{1, 3, 5, 6, 5, 3, 1}));
  CHECK(growth_series(named("free-product-3"), SubsetMask(7)) == RF(P{1, 1}, P{1, -2}));
  CHECK(growth_series(named("A2"), SubsetMask()) == RF::constant(1));
}

TEST_CASE("growth: catalog growth strings") {
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.name);
    GrowthTable g(e.matrix);
    if (e.growth) CHECK(g.full_series().to_string() == *e.growth);
  }
}

TEST_CASE("property: series coefficients match the rewriting oracle") {
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.name);
    GrowthTable g(e.matrix);
    ElementTable t = bfs_enumerate(e.matrix, 9);
    SeriesTruncation s = series_expand(g.full_series(), 9);
    auto sizes = t.sphere_sizes();
    for (int k = 0; k <= 9; ++k) {
      std::size_t expected = k < static_cast<int>(sizes.size()) ? sizes[static_cast<std::size_t>(k)] : 0;
      CHECK(s.coefficients[static_cast<std::size_t>(k)] == static_cast<unsigned long>(expected));
    }
  }
}

TEST_CASE("property: request order does not change the table") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    CoxeterMatrix m = testing::random_matrix(rng, 1 + static_cast<int>(rng() % 5));
    GrowthTable base(m);
    std::vector<SubsetMask> order = submasks(m.full_mask());
    std::shuffle(order.begin(), order.end(), rng);
    GrowthTable lazy(m, order);
    for (SubsetMask t : submasks(m.full_mask())) {
      REQUIRE(lazy.contains(t));
      CHECK(lazy.series(t) == base.series(t));
    }
  }
}

TEST_CASE("property: relabeling generators leaves W(t) unchanged") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    CoxeterMatrix m = testing::random_matrix(rng, 1 + static_cast<int>(rng() % 5));
    CoxeterMatrix r = testing::relabel(m, testing::random_permutation(rng, m.rank()));
    CHECK(GrowthTable(m).full_series() == GrowthTable(r).full_series());
  }
}

TEST_CASE("property: finite W_T is a polynomial with degree m_T and W_T(1) = |W_T|") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    CoxeterMatrix m = testing::random_matrix(rng, 1 + static_cast<int>(rng() % 5));
    GrowthTable g(m);
    for (SubsetMask t : g.spherical()) {
      const RF& w = g.series(t);
      CHECK(w.is_polynomial());
      CHECK(w.numerator().degree() == g.info(t).longest_length);
      CHECK(w.evaluate(1) == mpq_class(static_cast<unsigned long>(g.info(t).order)));
      // Palindromic: t^m W(1/t) = W(t).
      CHECK(w.numerator().reversed() == w.numerator());
    }
  }
}

TEST_CASE("chi: examples") {
  CoxeterMatrix dinf = parse_coxeter_file("rank 2\nm 1 2 inf");
  CHECK(chi_coefficient(dinf, SubsetMask()) == -1);
  CHECK(chi_coefficient(dinf, SubsetMask(1)) == -1);
  CHECK(chi_coefficient(dinf, SubsetMask(2)) == -1);
  CoxeterMatrix a2 = parse_coxeter_file("rank 2\nm 1 2 3");
  CHECK(chi_coefficient(a2, SubsetMask()) == 0);
  CHECK(chi_coefficient(a2, SubsetMask(3)) == 1);
}

TEST_CASE("property: chi_T = 1 - chi(L_T)") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    CoxeterMatrix m = testing::random_matrix(rng, 1 + static_cast<int>(rng() % 6));
    for (SubsetMask t : spherical_subsets(m)) {
      NerveLink link = nerve_link(m, t);
      const long sign = sign_power(t.size());
      CHECK(chi_coefficient(m, t) == sign * (1 - link.euler_characteristic()));
    }
  }
}

TEST_CASE("identities hold across the catalog") {
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.name);
    GrowthTable g(e.matrix);
    const bool finite = g.info(e.matrix.full_mask()).finite;
    for (int which = 1; which <= 4; ++which) {
      CAPTURE(which);
      IdentityReport r = verify_identity(g, which);
      if ((which == 1 && finite) || (which == 2 && !finite)) {
        CHECK(r.verdict == Verdict::not_applicable);
      } else {
        CHECK(r.verdict == Verdict::holds);
        REQUIRE(r.lhs.has_value());
        CHECK(*r.lhs == *r.rhs);
      }
    }
  }
}

TEST_CASE("property: identities hold on random systems") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    CoxeterMatrix m = testing::random_matrix(rng, 1 + static_cast<int>(rng() % 5));
    GrowthTable g(m);
    for (int which = 1; which <= 4; ++which) {
      CHECK(verify_identity(g, which).verdict != Verdict::fails);
    }
  }
}

TEST_CASE("identity 4 for a finite group reduces to t^m / W(t)") {
  GrowthTable g(named("B3"));
  IdentityReport r = verify_identity(g, 4);
  CHECK(r.verdict == Verdict::holds);
  CHECK(*r.rhs == RF(P::monomial(1, 9)) / g.full_series());
}

TEST_CASE("verify_identity rejects unknown identities") {
  GrowthTable g(named("A2"));
  CHECK_THROWS_AS(verify_identity(g, 5), std::invalid_argument);
}
