#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "coxgrowth/coxeter_matrix.hpp"
#include "coxgrowth/ratfunc.hpp"

#include <doctest.h>

namespace doctest {

template <>
struct StringMaker<coxgrowth::RationalFunction> {
  static String convert(const coxgrowth::RationalFunction& r) { return r.to_string().c_str(); }
};

template <>
struct StringMaker<coxgrowth::SeriesTruncation> {
  static String convert(const coxgrowth::SeriesTruncation& s) { return s.to_string().c_str(); }
};

template <>
struct StringMaker<std::vector<mpz_class>> {
  static String convert(const std::vector<mpz_class>& v) {
    return coxgrowth::SeriesTruncation{v}.to_string().c_str();
  }
};

}  // namespace doctest

namespace coxgrowth::testing {

// Random Coxeter matrix with orders drawn from {2,3,4,5,6,inf}.
inline CoxeterMatrix random_matrix(std::mt19937& rng, int rank) {
  static const unsigned choices[] = {2, 2, 2, 3, 3, 4, 5, 6, 0};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(choices) - 1);
  CoxeterMatrix m(rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      unsigned k = choices[pick(rng)];
      m.set_order(i, j, k == 0 ? EdgeOrder::infinity() : EdgeOrder::finite(k));
    }
  }
  return m;
}

// Generator i of the result is generator perm[i] of m.
inline CoxeterMatrix relabel(const CoxeterMatrix& m, const std::vector<int>& perm) {
  CoxeterMatrix r(m.rank());
  for (int i = 0; i < m.rank(); ++i) {
    for (int j = i + 1; j < m.rank(); ++j) r.set_order(i, j, m.order(perm[i], perm[j]));
  }
  return r;
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace coxgrowth::testing
