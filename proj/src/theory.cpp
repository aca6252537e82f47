#include "theory.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>

namespace symfin {

char family_letter(Family f) {
  switch (f) {
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

std::optional<Family> family_from_letter(char c) {
  switch (c) {
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    default: return std::nullopt;
  }
}

bool is_theory_partition(const Partition& p, Family f) {
  const int bad_parity = (f == Family::C) ? 1 : 0;  // parity whose parts pair up
  int prev = -1;
  for (int v : p.parts()) {
    if (v == prev) continue;
    prev = v;
    if (v % 2 == bad_parity && p.multiplicity(v) % 2 != 0) return false;
  }
  return true;
}

static bool all_ones(const Partition& p) {
  return !p.empty() && p.largest() == 1;
}

bool is_rigid(const Partition& p, Family f, GapRule rule) {
  if (!is_theory_partition(p, f))
    throw invalid_input("is_rigid: " + to_string(p) + " is not a valid " +
                        std::string(1, family_letter(f)) + "-type partition");
  if (p.empty()) return true;
  if (all_ones(p)) return true;  // zero orbit
  if (!has_no_gaps(p, rule)) return false;
  const int frozen_parity = (f == Family::C) ? 0 : 1;
  int prev = -1;
  for (int v : p.parts()) {
    if (v == prev) continue;
    prev = v;
    if (v % 2 == frozen_parity && p.multiplicity(v) == 2) return false;
  }
  return true;
}

std::vector<Partition> enumerate_partitions(long long total) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(long long, int)> rec = [&](long long rest, int cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int next = static_cast<int>(std::min<long long>(cap, rest)); next >= 1; --next) {
      cur.push_back(next);
      rec(rest - next, next);
      cur.pop_back();
    }
  };
  if (total >= 0) rec(total, static_cast<int>(total));
  return out;  // the recursion emits lex-decreasing order already
}

std::vector<Partition> enumerate_rigid(long long total, Family f, GapRule rule) {
  static std::mutex mu;
  static std::map<std::tuple<long long, Family, GapRule>, std::vector<Partition>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({total, f, rule});
    if (it != cache.end()) return it->second;
  }
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(total))
    if (is_theory_partition(p, f) && is_rigid(p, f, rule)) out.push_back(std::move(p));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_tuple(total, f, rule), std::move(out)).first->second;
}

Family component_family(Family theory_family, long long component_total) {
  switch (theory_family) {
    case Family::B: return component_total % 2 == 1 ? Family::B : Family::D;
    case Family::C: return Family::C;
    case Family::D: return Family::D;
  }
  return Family::B;
}

void validate_pair(const RigidPair& p, GapRule rule) {
  const long long want = p.theory.total();
  if (p.theory.rank < 1) throw invalid_input("pair: rank must be >= 1");
  const long long t1 = p.first.total(), t2 = p.second.total();
  if (t1 + t2 != want)
    throw invalid_input("pair: component totals " + std::to_string(t1) + "+" +
                        std::to_string(t2) + " do not sum to " + std::to_string(want));
  if (p.theory.family == Family::B) {
    if (t1 % 2 == t2 % 2)
      throw invalid_input("pair: B theory needs one odd-total and one even-total component");
  } else {
    if (t1 % 2 != 0 || t2 % 2 != 0)
      throw invalid_input("pair: C/D theory components must have even totals");
  }
  const Family f1 = component_family(p.theory.family, t1);
  const Family f2 = component_family(p.theory.family, t2);
  if (!is_theory_partition(p.first, f1))
    throw invalid_input("pair: first component " + to_string(p.first) +
                        " violates the parity-multiplicity rule");
  if (!is_theory_partition(p.second, f2))
    throw invalid_input("pair: second component " + to_string(p.second) +
                        " violates the parity-multiplicity rule");
  if (!is_rigid(p.first, f1, rule))
    throw invalid_input("pair: first component " + to_string(p.first) + " is not rigid");
  if (!is_rigid(p.second, f2, rule))
    throw invalid_input("pair: second component " + to_string(p.second) + " is not rigid");
}

std::vector<RigidPair> enumerate_rigid_pairs(const TheoryKind& kind, GapRule rule) {
  std::vector<RigidPair> out;
  const long long total = kind.total();
  for (long long t1 = 0; t1 <= total; ++t1) {
    const long long t2 = total - t1;
    if (kind.family == Family::B) {
      if (t1 % 2 == t2 % 2) continue;
    } else {
      if (t1 % 2 != 0) continue;
    }
    const auto firsts = enumerate_rigid(t1, component_family(kind.family, t1), rule);
    const auto seconds = enumerate_rigid(t2, component_family(kind.family, t2), rule);
    for (const auto& a : firsts)
      for (const auto& b : seconds) out.push_back(RigidPair{a, b, kind});
  }
  return out;
}

static StructureReport report_on_rows(const std::vector<int>& rows, Family f) {
  StructureReport r;
  const int n = static_cast<int>(rows.size());
  if (n == 0) return StructureReport{true, true, true};
  if (f == Family::B || f == Family::D) {
    const int want = (f == Family::B) ? 1 : 0;
    r.first_rows_ok = rows[0] % 2 == want;
    r.pairwise_ok = true;
    for (int i = 1; i + 1 < n; i += 2)
      if (rows[i] % 2 != rows[i + 1] % 2) r.pairwise_ok = false;
    r.shortest_ok = (n % 2 != 0) || (rows[n - 1] % 2 == 0);
  } else {
    r.first_rows_ok = (n < 2) || (rows[0] % 2 == rows[1] % 2);
    r.pairwise_ok = true;
    for (int i = 2; i + 1 < n; i += 2)
      if (rows[i] % 2 != rows[i + 1] % 2) r.pairwise_ok = false;
    r.shortest_ok = (n % 2 == 0) || (rows[n - 1] % 2 == 0);
  }
  return r;
}

StructureReport structure_report(const Partition& p, Family f, Orientation o) {
  const Partition q = (o == Orientation::Columns) ? transpose(p) : p;
  return report_on_rows(q.parts(), f);
}

std::vector<int> diagram_rows(const Partition& p) { return transpose(p).parts(); }

Partition from_diagram_rows(std::vector<int> rows) {
  std::erase(rows, 0);
  std::sort(rows.begin(), rows.end(), std::greater<>());
  return transpose(Partition(std::move(rows)));
}

std::vector<RowUnit> pairwise_units(const std::vector<int>& rows, Family cf) {
  std::vector<RowUnit> units;
  const int n = static_cast<int>(rows.size());
  int start = (cf == Family::C) ? 0 : 1;
  if (start == 1 && n > 0) units.push_back(RowUnit{0, -1});
  for (int i = start; i < n; i += 2) {
    if (i + 1 < n)
      units.push_back(RowUnit{i, i + 1});
    else
      units.push_back(RowUnit{i, -1});
  }
  return units;
}

}  // namespace symfin
