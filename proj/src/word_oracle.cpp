#include "coxgrowth/word_oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <unordered_set>

namespace coxgrowth {

Word Word::from_indices(const std::vector<int>& idx) {
  std::string s;
  s.reserve(idx.size());
  for (int i : idx) s.push_back(static_cast<char>(i));
  return Word(std::move(s));
}

Word Word::from_digits(std::string_view digits) {
  std::string s;
  for (char c : digits) {
    if (c < '1' || c > '9') throw std::invalid_argument("word digits must be 1..9");
    s.push_back(static_cast<char>(c - '1'));
  }
  return Word(std::move(s));
}

Word Word::appended(int s) const {
  Word w = *this;
  w.letters.push_back(static_cast<char>(s));
  return w;
}

std::string Word::to_string(int rank) const {
  if (letters.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (rank > 9 && i) out += ".";
    out += std::to_string((*this)[i] + 1);
  }
  return out;
}

namespace {

// Calls visit(w') for each word obtained from w by one braid move.
template <typename Visit>
void for_each_braid_move(const CoxeterMatrix& m, const std::string& w, Visit&& visit) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const int s = static_cast<unsigned char>(w[i]);
    const int t = static_cast<unsigned char>(w[i + 1]);
    if (s == t) continue;
    EdgeOrder e = m.order(s, t);
    if (e.is_infinite()) continue;
    const std::size_t len = e.value();
    if (i + len > n) continue;
    bool alternating = true;
    for (std::size_t k = 2; k < len && alternating; ++k) {
      alternating = w[i + k] == w[i + k - 2];
    }
    if (!alternating) continue;
    std::string moved = w;
    for (std::size_t k = 0; k < len; ++k) moved[i + k] = (k % 2 == 0) ? w[i + 1] : w[i];
    visit(std::move(moved));
  }
}

std::unordered_set<std::string> closure(const CoxeterMatrix& m, const std::string& start,
                                        std::size_t cap) {
  std::unordered_set<std::string> seen{start};
  std::deque<std::string> queue{start};
  while (!queue.empty()) {
    std::string w = std::move(queue.front());
    queue.pop_front();
    for_each_braid_move(m, w, [&](std::string&& moved) {
      if (seen.insert(moved).second) {
        if (seen.size() > cap) {
          throw OracleHorizonError("braid class exceeds " + std::to_string(cap) + " words");
        }
        queue.push_back(std::move(moved));
      }
    });
  }
  return seen;
}

}  // namespace

std::vector<Word> braid_class(const CoxeterMatrix& m, const Word& reduced, std::size_t cap) {
  auto set = closure(m, reduced.letters, cap);
  std::vector<Word> out;
  out.reserve(set.size());
  for (const auto& s : set) out.emplace_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_reduced(const CoxeterMatrix& m, const Word& w, std::size_t cap) {
  for (const auto& s : closure(m, w.letters, cap)) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == s[i + 1]) return false;
    }
  }
  return true;
}

NormalFormWord normal_form(const CoxeterMatrix& m, const Word& reduced, std::size_t cap) {
  auto set = closure(m, reduced.letters, cap);
  return NormalFormWord{Word(*std::min_element(set.begin(), set.end()))};
}

SubsetMask right_descents(const CoxeterMatrix& m, const NormalFormWord& w, std::size_t cap) {
  SubsetMask d;
  if (w.length() == 0) return d;
  for (const auto& s : closure(m, w.word.letters, cap)) {
    d = d | SubsetMask::singleton(static_cast<unsigned char>(s.back()));
  }
  return d;
}

std::vector<std::size_t> ElementTable::sphere_sizes() const {
  std::vector<std::size_t> sizes;
  for (int k = 0; k <= horizon_; ++k) {
    auto [b, e] = sphere_range(k);
    sizes.push_back(e - b);
  }
  return sizes;
}

std::pair<std::size_t, std::size_t> ElementTable::sphere_range(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) + 1 >= sphere_start_.size()) {
    return {elements_.size(), elements_.size()};
  }
  return {sphere_start_[static_cast<std::size_t>(k)], sphere_start_[static_cast<std::size_t>(k) + 1]};
}

std::int32_t ElementTable::find(const Word& reduced) const {
  auto it = word_index_.find(reduced.letters);
  return it == word_index_.end() ? -1 : it->second;
}

ElementTable bfs_enumerate(const CoxeterMatrix& m, int horizon, std::size_t cap) {
  if (horizon < 0) throw std::invalid_argument("bfs_enumerate: negative horizon");
  ElementTable table;
  table.matrix_ = m;
  table.horizon_ = horizon;
  const auto rank = static_cast<std::size_t>(m.rank());

  table.elements_.push_back(OracleElement{NormalFormWord{}, SubsetMask{}});
  table.word_index_.emplace(std::string(), 0);
  table.neighbors_.assign(rank, ElementTable::kBeyondHorizon);
  table.sphere_start_ = {0, 1};

  for (int k = 0; k < horizon; ++k) {
    const std::size_t begin = table.sphere_start_[static_cast<std::size_t>(k)];
    const std::size_t end = table.sphere_start_[static_cast<std::size_t>(k) + 1];
    for (std::size_t i = begin; i < end; ++i) {
      for (int s = 0; s < m.rank(); ++s) {
        if (table.elements_[i].descents.contains(s)) continue;
        std::string cand = table.elements_[i].normal_form.word.letters;
        cand.push_back(static_cast<char>(s));
        std::int32_t target;
        if (auto it = table.word_index_.find(cand); it != table.word_index_.end()) {
          target = it->second;
        } else {
          // New element: its whole braid class maps to one index.
          auto cls = closure(m, cand, cap);
          target = static_cast<std::int32_t>(table.elements_.size());
          OracleElement e;
          e.normal_form.word = Word(*std::min_element(cls.begin(), cls.end()));
          for (const auto& w : cls) {
            e.descents = e.descents | SubsetMask::singleton(static_cast<unsigned char>(w.back()));
            table.word_index_.emplace(w, target);
          }
          table.elements_.push_back(std::move(e));
          table.neighbors_.resize(table.neighbors_.size() + rank, ElementTable::kBeyondHorizon);
        }
        table.neighbors_[i * rank + static_cast<std::size_t>(s)] = target;
        table.neighbors_[static_cast<std::size_t>(target) * rank + static_cast<std::size_t>(s)] =
            static_cast<std::int32_t>(i);
      }
    }
    table.sphere_start_.push_back(table.elements_.size());
    if (table.sphere_start_.back() == end) {
      table.exhausted_ = true;
      break;
    }
  }
  return table;
}

namespace {

// Connected components of the T-edge subgraph; returns component id per
// element.
std::vector<std::int32_t> t_components(const ElementTable& table, SubsetMask t) {
  const std::size_t n = table.size();
  std::vector<std::int32_t> comp(n, -1);
  std::int32_t next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (comp[root] != -1) continue;
    comp[root] = next;
    stack.assign(1, root);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (int s : t.elements()) {
        std::int32_t u = table.neighbor(v, s);
        if (u >= 0 && comp[static_cast<std::size_t>(u)] == -1) {
          comp[static_cast<std::size_t>(u)] = next;
          stack.push_back(static_cast<std::size_t>(u));
        }
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace

std::vector<std::int32_t> coset_minima(const ElementTable& table, SubsetMask t) {
  auto comp = t_components(table, t);
  std::unordered_map<std::int32_t, std::int32_t> best;
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto [it, inserted] = best.emplace(comp[i], static_cast<std::int32_t>(i));
    if (!inserted && table[i].length() < table[static_cast<std::size_t>(it->second)].length()) {
      it->second = static_cast<std::int32_t>(i);
    }
  }
  std::vector<std::int32_t> out(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) out[i] = best[comp[i]];
  return out;
}

CosetReport coset_decomposition_check(const ElementTable& table, SubsetMask t) {
  CosetReport report;
  report.subset = t;
  auto comp = t_components(table, t);
  std::int32_t ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(ncomp));
  for (std::size_t i = 0; i < table.size(); ++i) members[static_cast<std::size_t>(comp[i])].push_back(i);

  const int rank = table.matrix().rank();
  for (const auto& coset : members) {
    bool complete = std::all_of(coset.begin(), coset.end(), [&](std::size_t v) {
      for (int s : t.elements()) {
        if (table.neighbor(v, s) < 0) return false;
      }
      return true;
    });
    if (!complete) {
      ++report.skipped_incomplete;
      continue;
    }
    ++report.complete_cosets;

    int min_len = std::numeric_limits<int>::max();
    for (std::size_t v : coset) min_len = std::min(min_len, table[v].length());
    std::vector<std::size_t> shortest;
    for (std::size_t v : coset) {
      if (table[v].length() == min_len) shortest.push_back(v);
    }
    if (shortest.size() != 1) {
      report.failures.push_back("coset of " + table[coset.front()].normal_form.word.to_string(rank) +
                                " has " + std::to_string(shortest.size()) + " shortest elements");
      continue;
    }

    // Distance from u along T-edges is the W_T-length of u^{-1}w.
    std::unordered_map<std::size_t, int> dist{{shortest.front(), 0}};
    std::deque<std::size_t> queue{shortest.front()};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (int s : t.elements()) {
        auto u = static_cast<std::size_t>(table.neighbor(v, s));
        if (dist.emplace(u, dist[v] + 1).second) queue.push_back(u);
      }
    }
    std::vector<std::size_t> profile;
    for (std::size_t v : coset) {
      const int d = dist.at(v);
      if (table[v].length() != min_len + d) {
        report.failures.push_back("length not additive at " +
                                  table[v].normal_form.word.to_string(rank));
      }
      if (profile.size() <= static_cast<std::size_t>(d)) profile.resize(static_cast<std::size_t>(d) + 1);
      ++profile[static_cast<std::size_t>(d)];
    }
    if (std::find(report.profiles.begin(), report.profiles.end(), profile) == report.profiles.end()) {
      report.profiles.push_back(std::move(profile));
    }
  }
  return report;
}

}  // namespace coxgrowth
