#include "symbol.hpp"

#include <algorithm>
#include <sstream>

namespace symfin {

namespace {

// Core of the B-rule on a raw part list that may carry trailing zero parts.
Symbol symbol_from_padded(const std::vector<int>& parts) {
  const int l = static_cast<int>(parts.size());
  std::vector<long long> odds, evens;
  long long prev = -1;
  for (int k = 1; k <= l; ++k) {
    const long long s = l - k + parts[k - 1];
    if (k > 1 && s >= prev)
      throw internal_error("symbol: shifted sequence not strictly decreasing");
    prev = s;
    (s % 2 != 0 ? odds : evens).push_back(s);
  }
  std::sort(odds.begin(), odds.end());
  std::sort(evens.begin(), evens.end());
  Symbol sym;
  for (size_t i = 0; i < odds.size(); ++i) sym.top.push_back((odds[i] - 1) / 2 - i);
  for (size_t i = 0; i < evens.size(); ++i) sym.bottom.push_back(evens[i] / 2 - i);
  for (size_t i = 1; i < sym.top.size(); ++i)
    if (sym.top[i] < sym.top[i - 1]) throw internal_error("symbol: top row not increasing");
  for (size_t i = 1; i < sym.bottom.size(); ++i)
    if (sym.bottom[i] < sym.bottom[i - 1]) throw internal_error("symbol: bottom row not increasing");
  return sym;
}

std::vector<int> padded_parts(const Partition& p, int extra_zeros) {
  std::vector<int> parts = p.parts();
  parts.insert(parts.end(), extra_zeros, 0);
  return parts;
}

}  // namespace

Symbol symbol_b(const Partition& p) {
  if (p.empty()) throw invalid_input("symbol_b: partition must be non-empty");
  return symbol_from_padded(p.parts());
}

Symbol symbol_c(const Partition& p) {
  if (p.empty()) throw invalid_input("symbol_c: partition must be non-empty");
  if (p.length() % 2 == 0) {
    Symbol sym = symbol_from_padded(p.parts());
    sym.top.insert(sym.top.begin(), 0);
    return sym;
  }
  Symbol sym = symbol_from_padded(padded_parts(p, 1));
  if (sym.bottom.empty() || sym.bottom.front() != 0)
    throw internal_error("symbol_c: first bottom entry is not 0");
  sym.bottom.erase(sym.bottom.begin());
  return sym;
}

Symbol symbol_d(const Partition& p) {
  if (p.empty()) throw invalid_input("symbol_d: partition must be non-empty");
  Symbol sym = symbol_from_padded(padded_parts(p, 1));
  if (sym.bottom.size() < 2 || sym.bottom[0] != 0 || sym.bottom[1] != 0)
    throw internal_error("symbol_d: first two bottom entries are not 0");
  sym.bottom.erase(sym.bottom.begin(), sym.bottom.begin() + 2);
  return sym;
}

Symbol component_symbol(const Partition& p, Family f) {
  if (p.empty()) return Symbol{};
  switch (f) {
    case Family::B: return symbol_b(p);
    case Family::C: return symbol_c(p);
    case Family::D: return symbol_d(p);
  }
  return Symbol{};
}

Symbol symbol_via_rows(const Partition& p, Family f) {
  if (p.empty()) return Symbol{};
  const int t = (f == Family::B) ? -1 : (f == Family::C) ? 0 : 1;
  const std::vector<int> rows = diagram_rows(p);
  // Accumulate right-aligned runs; entry 0 is the rightmost column.
  std::vector<long long> top, bottom;
  auto bump = [](std::vector<long long>& row, long long len) {
    if (static_cast<long long>(row.size()) < len) row.resize(len, 0);
    for (long long j = 0; j < len; ++j) row[j] += 1;
  };
  for (int i = 1; i <= static_cast<int>(rows.size()); ++i) {
    const int n = rows[i - 1];
    const bool row_odd = n % 2 != 0;
    const bool phase_even = (i + t + 1) % 2 == 0;
    if (row_odd && phase_even) bump(top, (n + 1) / 2);
    else if (!row_odd && !phase_even) bump(top, n / 2);
    else if (!row_odd && phase_even) bump(bottom, n / 2);
    else bump(bottom, (n - 1) / 2);
  }
  Symbol sym;
  sym.top.assign(top.rbegin(), top.rend());
  sym.bottom.assign(bottom.rbegin(), bottom.rend());
  return sym;
}

Symbol add_symbols(const Symbol& a, const Symbol& b) {
  auto add_rows = [](const std::vector<long long>& x, const std::vector<long long>& y) {
    const size_t n = std::max(x.size(), y.size());
    std::vector<long long> out(n, 0);
    for (size_t i = 0; i < x.size(); ++i) out[n - x.size() + i] += x[i];
    for (size_t i = 0; i < y.size(); ++i) out[n - y.size() + i] += y[i];
    return out;
  };
  return Symbol{add_rows(a.top, b.top), add_rows(a.bottom, b.bottom)};
}

bool symbols_equal(const Symbol& a, const Symbol& b) {
  auto rows_equal = [](const std::vector<long long>& x, const std::vector<long long>& y) {
    const size_t n = std::max(x.size(), y.size());
    for (size_t i = 0; i < n; ++i) {
      const long long xv = i < n - x.size() ? 0 : x[i - (n - x.size())];
      const long long yv = i < n - y.size() ? 0 : y[i - (n - y.size())];
      if (xv != yv) return false;
    }
    return true;
  };
  return rows_equal(a.top, b.top) && rows_equal(a.bottom, b.bottom);
}

Symbol canonical_symbol(const Symbol& s) {
  Symbol out = s;
  auto strip = [](std::vector<long long>& row) {
    size_t i = 0;
    while (i < row.size() && row[i] == 0) ++i;
    row.erase(row.begin(), row.begin() + i);
  };
  strip(out.top);
  strip(out.bottom);
  return out;
}

Symbol pair_symbol(const RigidPair& p) {
  const Symbol s1 = component_symbol(p.first, component_family(p.theory.family, p.first.total()));
  const Symbol s2 = component_symbol(p.second, component_family(p.theory.family, p.second.total()));
  return add_symbols(s1, s2);
}

std::string symbol_pretty(const Symbol& s) {
  auto cell = [](long long v) { return std::to_string(v); };
  std::ostringstream topline, botline;
  topline << "( ";
  botline << "(   ";
  const size_t n = std::max(s.top.size(), s.bottom.size());
  for (size_t i = 0; i < n; ++i) {
    if (i < s.top.size()) topline << cell(s.top[i]) << "   ";
    if (i < s.bottom.size()) botline << cell(s.bottom[i]) << "   ";
  }
  std::string t = topline.str(), b = botline.str();
  const size_t w = std::max(t.size(), b.size());
  t.resize(w, ' ');
  b.resize(w, ' ');
  return t + ")\n" + b + ")";
}

}  // namespace symfin
