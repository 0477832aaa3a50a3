#include "coxgrowth/geometric_oracle.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace coxgrowth {

namespace {

std::vector<double> bilinear_form(const CoxeterMatrix& m) {
  const int n = m.rank();
  std::vector<double> b(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      EdgeOrder e = m.order(i, j);
      b[static_cast<std::size_t>(i * n + j)] =
          e.is_infinite() ? -1.0 : -std::cos(std::numbers::pi / static_cast<double>(e.value()));
    }
  }
  return b;
}

SubsetMask descents_of(const std::vector<double>& mat, int n, double tol) {
  SubsetMask d;
  for (int s = 0; s < n; ++s) {
    bool nonpositive = true;
    for (int i = 0; i < n && nonpositive; ++i) {
      nonpositive = mat[static_cast<std::size_t>(s * n + i)] <= tol;
    }
    if (nonpositive) d = d | SubsetMask::singleton(s);
  }
  return d;
}

std::vector<long long> quantize(const std::vector<double>& mat) {
  std::vector<long long> key(mat.size());
  for (std::size_t i = 0; i < mat.size(); ++i) key[i] = std::llround(mat[i] * 1e5);
  return key;
}

}  // namespace

std::vector<std::size_t> GeometricEnumeration::sphere_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& s : spheres) out.push_back(s.size());
  return out;
}

GeometricEnumeration geometric_enumerate(const CoxeterMatrix& m, int horizon, double tol) {
  const int n = m.rank();
  const auto b = bilinear_form(m);
  GeometricEnumeration out;

  GeometricElement identity;
  identity.matrix.assign(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i) identity.matrix[static_cast<std::size_t>(i * n + i)] = 1.0;
  out.spheres.push_back({identity});

  for (int k = 0; k < horizon; ++k) {
    std::map<std::vector<long long>, std::size_t> seen;
    std::vector<GeometricElement> next;
    for (const auto& w : out.spheres.back()) {
      for (int s = 0; s < n; ++s) {
        if (w.descents.contains(s)) continue;
        GeometricElement ws;
        ws.word = w.word.appended(s);
        ws.matrix.resize(w.matrix.size());
        // column j of W·σ_s is W α_j - 2B(s,j) W α_s
        for (int j = 0; j < n; ++j) {
          const double c = 2.0 * b[static_cast<std::size_t>(s * n + j)];
          for (int i = 0; i < n; ++i) {
            ws.matrix[static_cast<std::size_t>(j * n + i)] =
                w.matrix[static_cast<std::size_t>(j * n + i)] - c * w.matrix[static_cast<std::size_t>(s * n + i)];
          }
        }
        if (seen.emplace(quantize(ws.matrix), next.size()).second) {
          ws.descents = descents_of(ws.matrix, n, tol);
          next.push_back(std::move(ws));
        }
      }
    }
    out.spheres.push_back(std::move(next));
  }
  return out;
}

CrossCheckReport cross_check_oracles(const ElementTable& table, int horizon, double tol) {
  CrossCheckReport report;
  const int rank = table.matrix().rank();
  if (horizon > table.horizon()) {
    report.failures.push_back("rewriting table horizon " + std::to_string(table.horizon()) +
                              " is below the requested " + std::to_string(horizon));
    return report;
  }
  auto geo = geometric_enumerate(table.matrix(), horizon, tol);
  report.geometric_sizes = geo.sphere_sizes();
  auto all = table.sphere_sizes();
  report.rewriting_sizes.assign(all.begin(), all.begin() + horizon + 1);
  if (report.geometric_sizes != report.rewriting_sizes) {
    report.failures.push_back("sphere sizes differ");
  }
  std::set<std::int32_t> hit;
  for (std::size_t k = 0; k < geo.spheres.size(); ++k) {
    for (const auto& g : geo.spheres[k]) {
      std::int32_t idx = table.find(g.word);
      if (idx < 0) {
        report.failures.push_back("word " + g.word.to_string(rank) + " unknown to rewriting oracle");
        continue;
      }
      const auto& e = table[static_cast<std::size_t>(idx)];
      if (static_cast<std::size_t>(e.length()) != k) {
        report.failures.push_back("length mismatch at " + g.word.to_string(rank));
      }
      if (e.descents != g.descents) {
        ++report.descent_mismatches;
        report.failures.push_back("descent mismatch at " + g.word.to_string(rank) + ": " +
                                  e.descents.to_string() + " vs " + g.descents.to_string());
      }
      if (!hit.insert(idx).second) {
        report.failures.push_back("two geometric elements map to " + e.normal_form.word.to_string(rank));
      }
    }
  }
  return report;
}

}  // namespace coxgrowth
