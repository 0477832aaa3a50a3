#include "coxgrowth/coxeter_matrix.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

namespace coxgrowth {

std::uint32_t EdgeOrder::value() const {
  if (infinite_) {
    throw std::logic_error("EdgeOrder::value() called on infinity");
  }
  return value_;
}

std::string EdgeOrder::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  for (std::uint32_t b = bits; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

std::string SubsetMask::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : elements()) {
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

CoxeterMatrix::CoxeterMatrix(int rank) : rank_(rank) {
  if (rank < 0 || rank > kMaxRank) {
    throw std::invalid_argument("rank must lie in 0.." + std::to_string(kMaxRank));
  }
  orders_.assign(static_cast<std::size_t>(rank) * static_cast<std::size_t>(rank),
                 EdgeOrder::finite(2));
  for (int i = 0; i < rank; ++i) orders_[index(i, i)] = EdgeOrder::finite(1);
}

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<EdgeOrder> orders)
    : CoxeterMatrix(rank) {
  if (orders.size() != orders_.size()) {
    throw std::invalid_argument("order table has wrong size");
  }
  for (int i = 0; i < rank; ++i) {
    if (orders[index(i, i)] != EdgeOrder::finite(1)) {
      throw std::invalid_argument("diagonal entries must be 1");
    }
    for (int j = i + 1; j < rank; ++j) {
      if (orders[index(i, j)] != orders[index(j, i)]) {
        throw std::invalid_argument("order table is not symmetric");
      }
      set_order(i, j, orders[index(i, j)]);
    }
  }
}

void CoxeterMatrix::set_order(int i, int j, EdgeOrder m) {
  if (i < 0 || j < 0 || i >= rank_ || j >= rank_ || i == j) {
    throw std::out_of_range("set_order: bad generator pair");
  }
  if (m.is_finite() && m.value() < 2) {
    throw std::invalid_argument("off-diagonal orders must be >= 2");
  }
  orders_[index(i, j)] = m;
  orders_[index(j, i)] = m;
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    if (end > pos) words.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return words;
}

bool parse_uint(std::string_view s, std::uint32_t& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

CoxeterMatrix parse_coxeter_file(std::string_view text) {
  CoxeterMatrix result;
  bool have_rank = false;
  std::map<std::pair<int, int>, EdgeOrder> seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto words = split_words(line);
    if (words.empty()) continue;

    if (words[0] == "rank") {
      if (have_rank) throw ParseError(line_no, "duplicate rank directive");
      std::uint32_t n = 0;
      if (words.size() != 2 || !parse_uint(words[1], n)) {
        throw ParseError(line_no, "expected `rank N`");
      }
      if (n < 1 || n > static_cast<std::uint32_t>(kMaxRank)) {
        throw ParseError(line_no, "rank must lie in 1.." + std::to_string(kMaxRank));
      }
      result = CoxeterMatrix(static_cast<int>(n));
      have_rank = true;
    } else if (words[0] == "m") {
      if (!have_rank) throw ParseError(line_no, "`m` before `rank`");
      std::uint32_t i = 0, j = 0;
      if (words.size() != 4 || !parse_uint(words[1], i) || !parse_uint(words[2], j)) {
        throw ParseError(line_no, "expected `m I J K`");
      }
      const auto rank = static_cast<std::uint32_t>(result.rank());
      if (i < 1 || j < 1 || i > rank || j > rank) {
        throw ParseError(line_no, "generator index out of range 1.." + std::to_string(rank));
      }
      if (i >= j) throw ParseError(line_no, "indices must satisfy I < J");
      EdgeOrder m;
      std::uint32_t k = 0;
      if (words[3] == "inf") {
        m = EdgeOrder::infinity();
      } else if (parse_uint(words[3], k)) {
        if (k < 2) throw ParseError(line_no, "order must be >= 2 or inf");
        m = EdgeOrder::finite(k);
      } else {
        throw ParseError(line_no, "bad order `" + std::string(words[3]) + "`");
      }
      auto key = std::make_pair(static_cast<int>(i), static_cast<int>(j));
      if (auto it = seen.find(key); it != seen.end() && it->second != m) {
        throw ParseError(line_no, "contradictory duplicate for pair " +
                                      std::to_string(i) + " " + std::to_string(j));
      }
      seen[key] = m;
      result.set_order(static_cast<int>(i) - 1, static_cast<int>(j) - 1, m);
    } else {
      throw ParseError(line_no, "unknown directive `" + std::string(words[0]) + "`");
    }
  }
  if (!have_rank) throw ParseError(line_no, "missing `rank` directive");
  return result;
}

CoxeterMatrix load_coxeter_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_coxeter_file(buf.str());
}

std::string serialize(const CoxeterMatrix& m) {
  std::ostringstream out;
  out << "rank " << m.rank() << "\n";
  for (int i = 0; i < m.rank(); ++i) {
    for (int j = i + 1; j < m.rank(); ++j) {
      EdgeOrder e = m.order(i, j);
      if (e == EdgeOrder::finite(2)) continue;
      out << "m " << i + 1 << " " << j + 1 << " " << e.to_string() << "\n";
    }
  }
  return out.str();
}

Restriction restrict(const CoxeterMatrix& m, SubsetMask t) {
  Restriction r;
  r.parent_index = t.elements();
  const int n = static_cast<int>(r.parent_index.size());
  r.matrix = CoxeterMatrix(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      r.matrix.set_order(a, b, m.order(r.parent_index[a], r.parent_index[b]));
    }
  }
  return r;
}

std::vector<SubsetMask> diagram_components(const CoxeterMatrix& m, SubsetMask t) {
  std::vector<SubsetMask> comps;
  SubsetMask remaining = t;
  while (!remaining.empty()) {
    int seed = std::countr_zero(remaining.bits);
    SubsetMask comp = SubsetMask::singleton(seed);
    std::vector<int> stack{seed};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : remaining.elements()) {
        if (!comp.contains(u) && m.order(v, u).is_edge()) {
          comp = comp | SubsetMask::singleton(u);
          stack.push_back(u);
        }
      }
    }
    comps.push_back(comp);
    remaining = remaining.without(comp);
  }
  return comps;
}

std::vector<SubsetMask> submasks(SubsetMask t) {
  std::vector<SubsetMask> out;
  std::uint32_t s = 0;
  do {
    out.emplace_back(s);
    s = (s - t.bits) & t.bits;
  } while (s != 0);
  return out;
}

}  // namespace coxgrowth
