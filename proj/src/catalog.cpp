#include "coxgrowth/catalog.hpp"

#include <initializer_list>
#include <tuple>

namespace coxgrowth {

namespace {

using Pair = std::tuple<int, int, unsigned>;
constexpr unsigned kInf = 0;

// 1-based pairs; kInf marks m = ∞.
CoxeterMatrix make(int rank, std::initializer_list<Pair> pairs) {
  CoxeterMatrix m(rank);
  for (auto [i, j, k] : pairs) {
    m.set_order(i - 1, j - 1, k == kInf ? EdgeOrder::infinity() : EdgeOrder::finite(k));
  }
  return m;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> c;
  auto add = [&](std::string name, std::string desc, CoxeterMatrix m,
                 std::optional<std::string> growth, std::vector<std::size_t> spheres) {
    c.push_back(CatalogEntry{std::move(name), std::move(desc), std::move(m), std::move(growth),
                             std::move(spheres)});
  };

  add("A1", "order 2", make(1, {}), "(1 + t) / (1)", {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  add("A1xA1", "Klein four-group", make(2, {}), "(1 + 2*t + t^2) / (1)",
      {1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0});
  add("A2", "symmetric group S3", make(2, {{1, 2, 3}}), "(1 + 2*t + 2*t^2 + t^3) / (1)",
      {1, 2, 2, 1, 0, 0, 0, 0, 0, 0, 0});
  add("A3", "symmetric group S4", make(3, {{1, 2, 3}, {2, 3, 3}}),
      "(1 + 3*t + 5*t^2 + 6*t^3 + 5*t^4 + 3*t^5 + t^6) / (1)",
      {1, 3, 5, 6, 5, 3, 1, 0, 0, 0, 0});
  add("B2", "dihedral of order 8", make(2, {{1, 2, 4}}),
      "(1 + 2*t + 2*t^2 + 2*t^3 + t^4) / (1)", {1, 2, 2, 2, 1, 0, 0, 0, 0, 0, 0});
  add("B3", "hyperoctahedral group of order 48", make(3, {{1, 2, 3}, {2, 3, 4}}),
      "(1 + 3*t + 5*t^2 + 7*t^3 + 8*t^4 + 8*t^5 + 7*t^6 + 5*t^7 + 3*t^8 + t^9) / (1)",
      {1, 3, 5, 7, 8, 8, 7, 5, 3, 1, 0});
  add("H3", "icosahedral group of order 120", make(3, {{1, 2, 5}, {2, 3, 3}}),
      "(1 + 3*t + 5*t^2 + 7*t^3 + 9*t^4 + 11*t^5 + 12*t^6 + 12*t^7 + 12*t^8 + 12*t^9 + "
      "11*t^10 + 9*t^11 + 7*t^12 + 5*t^13 + 3*t^14 + t^15) / (1)",
      {1, 3, 5, 7, 9, 11, 12, 12, 12, 12, 11});
  for (unsigned m = 5; m <= 8; ++m) {
    std::string g = "(1";
    std::vector<std::size_t> spheres{1};
    for (unsigned k = 1; k < m; ++k) {
      g += " + 2*t";
      if (k > 1) g += "^" + std::to_string(k);
      spheres.push_back(2);
    }
    g += " + t^" + std::to_string(m) + ") / (1)";
    spheres.push_back(1);
    spheres.resize(11, 0);
    add("I2(" + std::to_string(m) + ")", "dihedral of order " + std::to_string(2 * m),
        make(2, {{1, 2, m}}), g, spheres);
  }
  add("inf-dihedral", "infinite dihedral group", make(2, {{1, 2, kInf}}), "(1 + t) / (1 - t)",
      {1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2});
  add("tilde-A2", "affine triangle group (3,3,3)", make(3, {{1, 2, 3}, {2, 3, 3}, {1, 3, 3}}),
      "(1 + t + t^2) / (1 - 2*t + t^2)", {1, 3, 6, 9, 12, 15, 18, 21, 24, 27, 30});
  add("triangle-244", "affine triangle group (2,4,4)", make(3, {{2, 3, 4}, {1, 3, 4}}),
      "(1 + 2*t + 2*t^2 + 2*t^3 + t^4) / (1 - t - t^3 + t^4)",
      {1, 3, 5, 8, 11, 13, 16, 19, 21, 24, 27});
  add("triangle-237", "hyperbolic triangle group (2,3,7)", make(3, {{2, 3, 3}, {1, 3, 7}}),
      "(1 + 4*t + 8*t^2 + 11*t^3 + 12*t^4 + 12*t^5 + 12*t^6 + 11*t^7 + 8*t^8 + 4*t^9 + t^10) / "
      "(1 + t - t^3 - t^4 - t^5 - t^6 - t^7 + t^9 + t^10)",
      {1, 3, 5, 7, 9, 12, 16, 20, 24, 28, 33});
  add("free-product-3", "right-angled free product Z2*Z2*Z2",
      make(3, {{1, 2, kInf}, {2, 3, kInf}, {1, 3, kInf}}), "(1 + t) / (1 - 2*t)",
      {1, 3, 6, 12, 24, 48, 96, 192, 384, 768, 1536});
  add("right-angled-4", "right-angled square: (Z2xZ2)*(Z2xZ2)",
      make(4, {{1, 2, kInf}, {2, 3, kInf}, {3, 4, kInf}, {1, 4, kInf}}),
      "(1 + 2*t + t^2) / (1 - 2*t - t^2)", {1, 4, 10, 24, 58, 140, 338, 816, 1970});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace coxgrowth
