#include <doctest.h>

#include "coxgrowth/catalog.hpp"
#include "coxgrowth/census.hpp"
#include "coxgrowth/classify.hpp"
#include "test_support.hpp"

using namespace coxgrowth;

namespace {

CoxeterMatrix named(const char* name) {
  const CatalogEntry* e = find_catalog_entry(name);
  REQUIRE(e != nullptr);
  return e->matrix;
}

std::vector<mpz_class> ints(std::initializer_list<long> v) {
  return std::vector<mpz_class>(v.begin(), v.end());
}

std::vector<ComplexKind> kinds_for(const CoxeterMatrix& m) {
  if (is_spherical(m, m.full_mask())) return {ComplexKind::coxeter, ComplexKind::tits};
  return {ComplexKind::coxeter, ComplexKind::davis, ComplexKind::tits};
}

// The series every complex should produce: the constant (-1)^{|S|-1} for
// tits, 1 for the contractible complexes of infinite W, and 1 + (-1)^{|S|-1}t^m
// for the finite Coxeter complex.
std::vector<mpz_class> expected_total(const CoxeterMatrix& m, ComplexKind kind, int n) {
  std::vector<mpz_class> out(static_cast<std::size_t>(n) + 1);
  FiniteTypeInfo info = classify(m, m.full_mask());
  const int rank = m.rank();
  if (kind == ComplexKind::tits) {
    out[0] = sign_power(rank - 1);
  } else if (!info.finite) {
    out[0] = 1;
  } else {
    out[0] = 1;
    if (info.longest_length <= n) out[static_cast<std::size_t>(info.longest_length)] += sign_power(rank - 1);
  }
  return out;
}

}  // namespace

TEST_CASE("complex kind names") {
  CHECK(parse_complex_kind("coxeter") == ComplexKind::coxeter);
  CHECK(parse_complex_kind("davis") == ComplexKind::davis);
  CHECK(parse_complex_kind("tits") == ComplexKind::tits);
  CHECK(to_string(ComplexKind::davis) == "davis");
  CHECK_THROWS_AS(parse_complex_kind("nerve"), std::invalid_argument);
}

TEST_CASE("census: A2 coxeter complex is a hexagon") {
  CoxeterMatrix a2 = named("A2");
  ElementTable t = bfs_enumerate(a2, 3);
  auto records = enumerate_simplices(t, ComplexKind::coxeter, 3);
  CHECK(records.size() == 12);
  int vertices = 0, edges = 0;
  for (const auto& r : records) (r.dim == 0 ? vertices : edges) += 1;
  CHECK(vertices == 6);
  CHECK(edges == 6);
  CHECK(chi_t_truncated(records, 3).coefficients == ints({1, 0, 0, -1}));
}

TEST_CASE("census: length zero sees one chamber") {
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.name);
    ElementTable t = bfs_enumerate(e.matrix, 0);
    auto records = enumerate_simplices(t, ComplexKind::coxeter, 0);
    CHECK(records.size() == (std::size_t{1} << e.matrix.rank()) - 1);
  }
}

TEST_CASE("census: infinite dihedral Davis complex to length 2") {
  // Subdivided line: chambers 1, s, t, st, ts each contribute a central
  // vertex, plus vertices and edges of type {s} and {t} at the panels.
  CoxeterMatrix dinf = named("inf-dihedral");
  ElementTable t = bfs_enumerate(dinf, 2);
  auto records = enumerate_simplices(t, ComplexKind::davis, 2);
  CHECK(records.size() == 21);
  CHECK(chi_t_truncated(records, 2).coefficients == ints({1, 0, 0}));
}

TEST_CASE("census: Davis needs infinite W") {
  ElementTable t = bfs_enumerate(named("A2"), 3);
  CHECK_THROWS_AS(enumerate_simplices(t, ComplexKind::davis, 3), std::invalid_argument);
}

TEST_CASE("census: table must reach the requested length") {
  ElementTable t = bfs_enumerate(named("tilde-A2"), 3);
  CHECK_THROWS_AS(enumerate_simplices(t, ComplexKind::coxeter, 5), std::invalid_argument);
}

TEST_CASE("census: totals across the catalog") {
  const int n = 8;
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.name);
    for (ComplexKind kind : kinds_for(e.matrix)) {
      CAPTURE(to_string(kind));
      CHECK(chi_t_truncated(e.matrix, kind, n).coefficients == expected_total(e.matrix, kind, n));
    }
  }
}

TEST_CASE("census: per-type counts match the closed forms across the catalog") {
  const int n = 8;
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.name);
    GrowthTable g(e.matrix);
    ElementTable table = bfs_enumerate(e.matrix, n);
    for (ComplexKind kind : kinds_for(e.matrix)) {
      CAPTURE(to_string(kind));
      auto records = enumerate_simplices(table, kind, n);
      SeriesTruncation sum{std::vector<mpz_class>(n + 1)};
      for (SubsetMask t : valid_types(e.matrix, kind)) {
        CAPTURE(t.to_string());
        TypeCensus tc = chi_t_by_type(records, g, kind, t, n);
        CHECK(tc.agrees());
        for (int k = 0; k <= n; ++k) sum.coefficients[k] += tc.census.coefficients[k];
      }
      CHECK(sum == chi_t_truncated(records, n));
    }
  }
}

TEST_CASE("property: per-type counts match the closed forms on random systems") {
  std::mt19937 rng(61);
  const int n = 6;
  for (int trial = 0; trial < 25; ++trial) {
    CoxeterMatrix m = testing::random_matrix(rng, 2 + static_cast<int>(rng() % 3));
    GrowthTable g(m);
    ElementTable table = bfs_enumerate(m, n);
    for (ComplexKind kind : kinds_for(m)) {
      auto records = enumerate_simplices(table, kind, n);
      for (SubsetMask t : valid_types(m, kind)) CHECK(chi_t_by_type(records, g, kind, t, n).agrees());
      CHECK(chi_t_truncated(records, n).coefficients == expected_total(m, kind, n));
    }
  }
}

TEST_CASE("property: truncations are prefixes of longer truncations") {
  for (const char* name : {"tilde-A2", "triangle-244", "right-angled-4"}) {
    CoxeterMatrix m = named(name);
    for (ComplexKind kind : kinds_for(m)) {
      auto shorter = chi_t_truncated(m, kind, 4).coefficients;
      auto longer = chi_t_truncated(m, kind, 7).coefficients;
      CHECK(std::equal(shorter.begin(), shorter.end(), longer.begin()));
    }
  }
}

TEST_CASE("property: Davis inner sum is (-1)^|T| chi_T = 1 - chi(L_T)") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    CoxeterMatrix m = testing::random_matrix(rng, 1 + static_cast<int>(rng() % 6));
    for (SubsetMask t : spherical_subsets(m)) {
      CHECK(davis_inner_sum(m, t) == 1 - nerve_link(m, t).euler_characteristic());
      CHECK(davis_inner_sum(m, t) == sign_power(t.size()) * chi_coefficient(m, t));
    }
  }
}

TEST_CASE("property: panel union lemma holds on the enumerated ball") {
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.name);
    ElementTable table = bfs_enumerate(e.matrix, 6);
    for (ComplexKind kind : kinds_for(e.matrix)) {
      if (kind == ComplexKind::tits) continue;
      LemmaReport r = check_lemma6(table, kind, 6);
      CHECK(r.passed());
      CHECK(r.chambers > 0);
    }
  }
  CHECK_THROWS_AS(check_lemma6(bfs_enumerate(named("A2"), 3), ComplexKind::tits, 3),
                  std::invalid_argument);
}

TEST_CASE("property: panel unions of the simplex chamber") {
  // Fewer than |S| facets of a simplex form a ball; all of them a sphere.
  std::mt19937 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    CoxeterMatrix m = testing::random_matrix(rng, 1 + static_cast<int>(rng() % 6));
    for (SubsetMask a : submasks(m.full_mask())) {
      long expected = a.empty() ? 0 : 1;
      if (a == m.full_mask()) expected = 1 + sign_power(m.rank());
      CHECK(panel_union_euler(m, ComplexKind::coxeter, a) == expected);
    }
  }
}

TEST_CASE("property: panel unions of the Davis chamber follow the nerve") {
  // K^A retracts onto the full subcomplex of the nerve spanned by A.
  std::mt19937 rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    CoxeterMatrix m = testing::random_matrix(rng, 1 + static_cast<int>(rng() % 6));
    auto spherical = spherical_subsets(m);
    for (SubsetMask a : submasks(m.full_mask())) {
      long expected = 0;
      for (SubsetMask t : spherical) {
        if (!t.empty() && t.is_subset_of(a)) expected -= sign_power(t.size());
      }
      CHECK(panel_union_euler(m, ComplexKind::davis, a) == expected);
    }
  }
}

TEST_CASE("property: local sums over descent sets") {
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.name);
    ElementTable table = bfs_enumerate(e.matrix, 7);
    LocalSumReport r = local_sum_check(table, 7);
    CHECK(r.passed());
    CHECK(r.checked == table.size());
  }
}
