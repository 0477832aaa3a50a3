#include <doctest.h>

#include "coxgrowth/classify.hpp"
#include "coxgrowth/geometric_oracle.hpp"
#include "coxgrowth/word_oracle.hpp"
#include "test_support.hpp"

using namespace coxgrowth;

namespace {

CoxeterMatrix tilde_a2() {
  return parse_coxeter_file("rank 3\nm 1 2 3\nm 2 3 3\nm 1 3 3");
}

struct OracleCount {
  std::size_t order = 0;
  int max_length = 0;
  bool palindromic = true;
};

OracleCount summarize(const std::vector<std::size_t>& sizes) {
  OracleCount c;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    c.order += sizes[k];
    if (sizes[k] != 0) c.max_length = static_cast<int>(k);
  }
  for (int k = 0; k <= c.max_length; ++k) {
    c.palindromic = c.palindromic && sizes[static_cast<std::size_t>(k)] ==
                                         sizes[static_cast<std::size_t>(c.max_length - k)];
  }
  return c;
}

}  // namespace

TEST_CASE("classify: examples") {
  CoxeterMatrix a2 = parse_coxeter_file("rank 2\nm 1 2 3");
  FiniteTypeInfo empty = classify(a2, SubsetMask());
  CHECK(empty.finite);
  CHECK(empty.longest_length == 0);
  CHECK(empty.order == 1);

  FiniteTypeInfo full = classify(a2, a2.full_mask());
  CHECK(full.finite);
  CHECK(full.longest_length == 3);
  CHECK(full.label() == "A2");

  CHECK_FALSE(classify(tilde_a2(), SubsetMask(0b111)).finite);
  CHECK(classify(tilde_a2(), SubsetMask(0b011)).label() == "A2");

  CHECK(classify(parse_coxeter_file("rank 3\nm 1 2 5\nm 2 3 3"), SubsetMask(0b111)).longest_length == 15);
  CHECK(classify(parse_coxeter_file("rank 3\nm 1 2 3\nm 2 3 4"), SubsetMask(0b111)).longest_length == 9);
  CHECK(classify(parse_coxeter_file("rank 3\nm 1 2 3\nm 2 3 3"), SubsetMask(0b111)).longest_length == 6);
}

TEST_CASE("classify: I2(3) and I2(4) normalize to A2 and B2") {
  CHECK(classify(parse_coxeter_file("rank 2\nm 1 2 3"), SubsetMask(3)).label() == "A2");
  CHECK(classify(parse_coxeter_file("rank 2\nm 1 2 4"), SubsetMask(3)).label() == "B2");
  CHECK(classify(parse_coxeter_file("rank 2\nm 1 2 6"), SubsetMask(3)).label() == "I2(6)");
  CHECK(classify(parse_coxeter_file("rank 3\nm 1 2 3"), SubsetMask(7)).label() == "A2 x A1");
}

TEST_CASE("classify: non-catalog shapes are infinite") {
  // Ã3 (4-cycle), B̃2 = (2,4,4), a branched tree with a 4-edge, H5-like path.
  CHECK_FALSE(is_spherical(parse_coxeter_file("rank 4\nm 1 2 3\nm 2 3 3\nm 3 4 3\nm 1 4 3"), SubsetMask(15)));
  CHECK_FALSE(is_spherical(parse_coxeter_file("rank 3\nm 2 3 4\nm 1 3 4"), SubsetMask(7)));
  CHECK_FALSE(is_spherical(parse_coxeter_file("rank 4\nm 1 2 3\nm 2 3 3\nm 2 4 4"), SubsetMask(15)));
  CHECK_FALSE(is_spherical(parse_coxeter_file("rank 5\nm 1 2 5\nm 2 3 3\nm 3 4 3\nm 4 5 3"), SubsetMask(31)));
  CHECK_FALSE(is_spherical(parse_coxeter_file("rank 3\nm 1 2 4\nm 2 3 4"), SubsetMask(7)));
  // E9 = Ẽ8.
  CoxeterMatrix e9 = finite_type_matrix(FiniteFamily::E, 9);
  CHECK_FALSE(is_spherical(e9, e9.full_mask()));
}

TEST_CASE("classify: catalog diagrams recognized after relabeling") {
  std::mt19937 rng(5);
  struct Case { FiniteFamily f; int rank; int param; const char* label; };
  const Case cases[] = {{FiniteFamily::A, 6, 0, "A6"}, {FiniteFamily::B, 5, 0, "B5"},
                        {FiniteFamily::D, 6, 0, "D6"}, {FiniteFamily::E, 6, 0, "E6"},
                        {FiniteFamily::E, 7, 0, "E7"}, {FiniteFamily::E, 8, 0, "E8"},
                        {FiniteFamily::F, 4, 0, "F4"}, {FiniteFamily::H, 4, 0, "H4"},
                        {FiniteFamily::I2, 2, 9, "I2(9)"}, {FiniteFamily::D, 4, 0, "D4"}};
  for (const Case& c : cases) {
    CoxeterMatrix m = finite_type_matrix(c.f, c.rank, c.param);
    for (int trial = 0; trial < 5; ++trial) {
      CoxeterMatrix r = testing::relabel(m, testing::random_permutation(rng, m.rank()));
      CHECK(classify(r, r.full_mask()).label() == c.label);
    }
  }
}

TEST_CASE("spherical_subsets: examples") {
  CoxeterMatrix dinf = parse_coxeter_file("rank 2\nm 1 2 inf");
  CHECK(spherical_subsets(dinf) == std::vector<SubsetMask>{SubsetMask(0), SubsetMask(1), SubsetMask(2)});
  CHECK(spherical_subsets(parse_coxeter_file("rank 2\nm 1 2 3")).size() == 4);
  auto s = spherical_subsets(tilde_a2());
  CHECK(s.size() == 7);
  CHECK(std::find(s.begin(), s.end(), SubsetMask(7)) == s.end());
}

TEST_CASE("property: spherical subsets are downward closed and contain singletons") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    CoxeterMatrix m = testing::random_matrix(rng, 1 + static_cast<int>(rng() % 6));
    auto s = spherical_subsets(m);
    auto has = [&](SubsetMask t) { return std::find(s.begin(), s.end(), t) != s.end(); };
    CHECK(has(SubsetMask()));
    for (int i = 0; i < m.rank(); ++i) CHECK(has(SubsetMask::singleton(i)));
    for (SubsetMask t : s) {
      for (SubsetMask sub : submasks(t)) CHECK(has(sub));
    }
  }
}

// Braid-rewriting BFS reaches these comfortably.
TEST_CASE("catalog orders and longest lengths: rewriting oracle") {
  struct Case { FiniteFamily f; int rank; int param; };
  const Case cases[] = {{FiniteFamily::A, 1, 0}, {FiniteFamily::A, 2, 0}, {FiniteFamily::A, 3, 0},
                        {FiniteFamily::A, 4, 0}, {FiniteFamily::B, 2, 0}, {FiniteFamily::B, 3, 0},
                        {FiniteFamily::B, 4, 0}, {FiniteFamily::D, 4, 0}, {FiniteFamily::H, 3, 0},
                        {FiniteFamily::I2, 2, 5}, {FiniteFamily::I2, 2, 8}, {FiniteFamily::I2, 2, 12}};
  for (const Case& c : cases) {
    CoxeterMatrix m = finite_type_matrix(c.f, c.rank, c.param);
    FiniteTypeInfo info = classify(m, m.full_mask());
    CAPTURE(info.label());
    ElementTable t = bfs_enumerate(m, info.longest_length + 1);
    CHECK(t.exhausted());
    OracleCount oc = summarize(t.sphere_sizes());
    CHECK(oc.order == info.order);
    CHECK(oc.max_length == info.longest_length);
    CHECK(oc.palindromic);
  }
}

// Orders up to 1e5 beyond rewriting reach, through the numeric representation.
TEST_CASE("catalog orders and longest lengths: geometric oracle") {
  struct Case { FiniteFamily f; int rank; int param; };
  const Case cases[] = {{FiniteFamily::A, 5, 0}, {FiniteFamily::A, 6, 0}, {FiniteFamily::A, 7, 0},
                        {FiniteFamily::B, 5, 0}, {FiniteFamily::B, 6, 0}, {FiniteFamily::D, 5, 0},
                        {FiniteFamily::D, 6, 0}, {FiniteFamily::E, 6, 0}, {FiniteFamily::F, 4, 0},
                        {FiniteFamily::H, 4, 0}};
  for (const Case& c : cases) {
    CoxeterMatrix m = finite_type_matrix(c.f, c.rank, c.param);
    FiniteTypeInfo info = classify(m, m.full_mask());
    CAPTURE(info.label());
    REQUIRE(info.order <= 100000);
    GeometricEnumeration g = geometric_enumerate(m, info.longest_length + 1);
    OracleCount oc = summarize(g.sphere_sizes());
    CHECK(g.spheres.back().empty());
    CHECK(oc.order == info.order);
    CHECK(oc.max_length == info.longest_length);
    CHECK(oc.palindromic);
  }
}

TEST_CASE("property: random rank-3 systems agree with the rewriting oracle") {
  std::mt19937 rng(23);
  int finite_seen = 0, infinite_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    CoxeterMatrix m = testing::random_matrix(rng, 3);
    FiniteTypeInfo info = classify(m, m.full_mask());
    if (info.finite) {
      ++finite_seen;
      ElementTable t = bfs_enumerate(m, info.longest_length + 1);
      OracleCount oc = summarize(t.sphere_sizes());
      CHECK(t.exhausted());
      CHECK(oc.order == info.order);
      CHECK(oc.max_length == info.longest_length);
      CHECK(oc.palindromic);
    } else {
      ++infinite_seen;
      ElementTable t = bfs_enumerate(m, 12);
      for (std::size_t size : t.sphere_sizes()) CHECK(size > 0);
    }
  }
  CHECK(finite_seen > 0);
  CHECK(infinite_seen > 0);
}
