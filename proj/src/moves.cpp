#include "moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace symfin {

std::string move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::See1: return "See1";
    case MoveKind::See2: return "See2";
    case MoveKind::Se2: return "Se2";
    case MoveKind::Ie2: return "Ie2";
    case MoveKind::Seo2: return "Seo2";
    case MoveKind::SType: return "S";
    case MoveKind::DType: return "D";
    case MoveKind::TE: return "TE";
    case MoveKind::TO: return "TO";
    case MoveKind::IType: return "I";
  }
  return "?";
}

std::string MoveDescriptor::label() const {
  switch (kind) {
    case MoveKind::SType: {
      std::ostringstream os;
      os << 'S' << parity;
      for (int d : pos) os << d;
      return os.str();
    }
    case MoveKind::DType: {
      std::ostringstream os;
      os << 'D' << parity << d_source << d_target;
      return os.str();
    }
    default:
      return move_kind_name(kind);
  }
}

namespace {

std::optional<RigidPair> rebuild(const RigidPair& base, std::vector<int> rows1,
                                 std::vector<int> rows2) {
  for (int r : rows1)
    if (r < 0) return std::nullopt;
  for (int r : rows2)
    if (r < 0) return std::nullopt;
  Partition p1, p2;
  try {
    p1 = from_diagram_rows(std::move(rows1));
    p2 = from_diagram_rows(std::move(rows2));
  } catch (const invalid_input&) {
    return std::nullopt;
  }
  RigidPair out{p1, p2, base.theory};
  try {
    validate_pair(out);
  } catch (const invalid_input&) {
    return std::nullopt;
  }
  return out;
}

// Role of a row inside the component's pairwise units: 'f' shorter row of a
// complete unit, 's' longer row, 'l' lone. Returns the unit index via out.
char row_role(const std::vector<int>& rows, Family cf, int idx0, int* unit_out = nullptr) {
  const auto units = pairwise_units(rows, cf);
  for (size_t u = 0; u < units.size(); ++u) {
    if (units[u].upper == idx0) {
      if (unit_out) *unit_out = static_cast<int>(u);
      return units[u].paired() ? 's' : 'l';
    }
    if (units[u].lower == idx0) {
      if (unit_out) *unit_out = static_cast<int>(u);
      return 'f';
    }
  }
  return '?';
}

Family first_cf(const RigidPair& p) {
  return component_family(p.theory.family, p.first.total());
}
Family second_cf(const RigidPair& p) {
  return component_family(p.theory.family, p.second.total());
}

int find_row_index(const std::vector<int>& rows, int length) {
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i] == length) return static_cast<int>(i);
  return -1;
}

MoveOutcome make_outcome(MoveDescriptor desc, MoveSite site, const RigidPair& before,
                         RigidPair result) {
  MoveOutcome out;
  out.desc = std::move(desc);
  out.site = std::move(site);
  out.before = before;
  out.result = std::move(result);
  out.symbol_preserved = symbols_equal(pair_symbol(before), pair_symbol(out.result));
  out.fingerprint_preserved = pair_fingerprint(before) == pair_fingerprint(out.result);
  return out;
}

}  // namespace

std::optional<RigidPair> swap_rows(const RigidPair& p, int row_first, int delta_first,
                                   int row_second, int delta_second) {
  if (delta_first + delta_second != 0) return std::nullopt;
  std::vector<int> r1 = diagram_rows(p.first);
  std::vector<int> r2 = diagram_rows(p.second);
  if (row_first < 1 || row_first > static_cast<int>(r1.size())) return std::nullopt;
  if (row_second < 1 || row_second > static_cast<int>(r2.size())) return std::nullopt;
  const int x = r1[row_first - 1];
  const int y = r2[row_second - 1];
  r1.erase(r1.begin() + (row_first - 1));
  r2.erase(r2.begin() + (row_second - 1));
  if (x + delta_first < 0 || y + delta_second < 0) return std::nullopt;
  // A row shrunk to nothing simply disappears.
  if (x + delta_first > 0) r2.push_back(x + delta_first);
  if (y + delta_second > 0) r1.push_back(y + delta_second);
  return rebuild(p, std::move(r1), std::move(r2));
}

std::optional<RigidPair> transfer_rows(const RigidPair& p, bool from_first,
                                       const std::vector<int>& rows_idx) {
  std::vector<int> src = diagram_rows(from_first ? p.first : p.second);
  std::vector<int> dst = diagram_rows(from_first ? p.second : p.first);
  std::vector<int> sorted = rows_idx;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  for (int idx : sorted) {
    if (idx < 1 || idx > static_cast<int>(src.size())) return std::nullopt;
    dst.push_back(src[idx - 1]);
    src.erase(src.begin() + (idx - 1));
  }
  if (from_first) return rebuild(p, std::move(src), std::move(dst));
  return rebuild(p, std::move(dst), std::move(src));
}

std::optional<RigidPair> interchange_blocks(const RigidPair& p,
                                            const std::vector<int>& rows_first_idx,
                                            const std::vector<int>& rows_second_idx) {
  std::vector<int> r1 = diagram_rows(p.first);
  std::vector<int> r2 = diagram_rows(p.second);
  std::vector<int> move1, move2;
  for (int idx : rows_first_idx) {
    if (idx < 1 || idx > static_cast<int>(r1.size())) return std::nullopt;
    move1.push_back(r1[idx - 1]);
  }
  for (int idx : rows_second_idx) {
    if (idx < 1 || idx > static_cast<int>(r2.size())) return std::nullopt;
    move2.push_back(r2[idx - 1]);
  }
  auto erase_all = [](std::vector<int>& rows, std::vector<int> idxs) {
    std::sort(idxs.begin(), idxs.end(), std::greater<>());
    for (int idx : idxs) rows.erase(rows.begin() + (idx - 1));
  };
  erase_all(r1, rows_first_idx);
  erase_all(r2, rows_second_idx);
  r1.insert(r1.end(), move2.begin(), move2.end());
  r2.insert(r2.end(), move1.begin(), move1.end());
  return rebuild(p, std::move(r1), std::move(r2));
}

namespace {

struct NamedPattern {
  char source_role;  // role both taken rows must have ('f' or 's')
  int unit_parity;   // 0 even, 1 odd: parity of both units' rows
};

std::optional<NamedPattern> named_pattern(MoveKind which) {
  switch (which) {
    case MoveKind::See1: return NamedPattern{'s', 0};
    case MoveKind::See2: return NamedPattern{'f', 0};
    case MoveKind::Se2: return NamedPattern{'s', 1};
    case MoveKind::Ie2: return NamedPattern{'f', 1};
    default: return std::nullopt;
  }
}

}  // namespace

std::optional<MoveOutcome> apply_named_example(const RigidPair& p, MoveKind which,
                                               int unit_first, int unit_second) {
  const std::vector<int> r1 = diagram_rows(p.first);
  const std::vector<int> r2 = diagram_rows(p.second);
  const auto u1 = pairwise_units(r1, first_cf(p));
  const auto u2 = pairwise_units(r2, second_cf(p));
  if (unit_first < 0 || unit_first >= static_cast<int>(u1.size())) return std::nullopt;
  if (unit_second < 0 || unit_second >= static_cast<int>(u2.size())) return std::nullopt;
  const RowUnit a = u1[unit_first];
  const RowUnit b = u2[unit_second];

  int i1 = -1, i2 = -1, d1 = 0, d2 = 0;
  if (which == MoveKind::Seo2) {
    // An even row of lambda' gains a box while a row of an odd
    // lambda''-unit loses one. The even row sits in an even unit (opposite
    // role to the odd-side row) or is a lone boundary row; the shrinking
    // row may disappear entirely.
    if (!b.paired()) return std::nullopt;
    if (r2[b.upper] % 2 == 0 || r2[b.lower] % 2 == 0) return std::nullopt;
    std::vector<int> candidates;
    if (a.paired()) {
      if (r1[a.upper] % 2 != 0 || r1[a.lower] % 2 != 0) return std::nullopt;
      candidates = {a.lower, a.upper};
    } else {
      if (r1[a.upper] % 2 != 0) return std::nullopt;
      candidates = {a.upper};
    }
    d1 = +1;
    d2 = -1;
    for (int c1 : candidates) {
      for (int c2 : {b.upper, b.lower}) {
        if (a.paired() && (c1 == a.lower) == (c2 == b.lower)) continue;  // opposite roles
        if (r2[c2] == r1[c1] + 1) continue;  // identity swap
        auto trial = swap_rows(p, c1 + 1, d1, c2 + 1, d2);
        if (!trial || !symbols_equal(pair_symbol(p), pair_symbol(*trial))) continue;
        i1 = c1;
        i2 = c2;
        break;
      }
      if (i1 >= 0) break;
    }
    if (i1 < 0) return std::nullopt;
  } else {
    if (!a.paired() || !b.paired()) return std::nullopt;
    const auto pat = named_pattern(which);
    if (!pat) return std::nullopt;
    if (r1[a.upper] % 2 != pat->unit_parity || r1[a.lower] % 2 != pat->unit_parity)
      return std::nullopt;
    if (r2[b.upper] % 2 != pat->unit_parity || r2[b.lower] % 2 != pat->unit_parity)
      return std::nullopt;
    i1 = pat->source_role == 'f' ? a.lower : a.upper;
    i2 = pat->source_role == 'f' ? b.lower : b.upper;
    if (r2[i2] == r1[i1]) return std::nullopt;  // identity swap
  }
  auto moved = swap_rows(p, i1 + 1, d1, i2 + 1, d2);
  if (!moved) return std::nullopt;
  if (!symbols_equal(pair_symbol(p), pair_symbol(*moved))) return std::nullopt;

  MoveDescriptor desc;
  desc.kind = which;
  MoveSite site;
  site.take_first = {i1 + 1};
  site.take_second = {i2 + 1};
  site.delta_first = d1;
  site.delta_second = d2;
  site.land_first = {find_row_index(diagram_rows(moved->first), r2[i2] + d2) + 1};
  site.land_second = {find_row_index(diagram_rows(moved->second), r1[i1] + d1) + 1};
  return make_outcome(desc, site, p, *moved);
}

std::vector<MoveOutcome> enumerate_named_moves(const RigidPair& p, MoveKind which) {
  std::vector<MoveOutcome> out;
  const auto u1 = pairwise_units(diagram_rows(p.first), first_cf(p));
  const auto u2 = pairwise_units(diagram_rows(p.second), second_cf(p));
  for (size_t a = 0; a < u1.size(); ++a)
    for (size_t b = 0; b < u2.size(); ++b)
      if (auto m = apply_named_example(p, which, static_cast<int>(a), static_cast<int>(b)))
        out.push_back(std::move(*m));
  return out;
}

std::vector<MoveOutcome> enumerate_s_moves(const RigidPair& p) {
  std::vector<MoveOutcome> out;
  const std::vector<int> r1 = diagram_rows(p.first);
  const std::vector<int> r2 = diagram_rows(p.second);
  const Symbol sym = pair_symbol(p);
  const Family cf1 = first_cf(p), cf2 = second_cf(p);
  for (int i = 0; i < static_cast<int>(r1.size()); ++i) {
    const char role1 = row_role(r1, cf1, i);
    for (int j = 0; j < static_cast<int>(r2.size()); ++j) {
      const char role2 = row_role(r2, cf2, j);
      for (int d1 : {-1, 0, 1}) {
        if (r2[j] == r1[i] + d1) continue;  // identity swap
        auto moved = swap_rows(p, i + 1, d1, j + 1, -d1);
        if (!moved) continue;
        if (!symbols_equal(sym, pair_symbol(*moved))) continue;
        const std::vector<int> n1 = diagram_rows(moved->first);
        const std::vector<int> n2 = diagram_rows(moved->second);
        const int land1 = r2[j] - d1 > 0 ? find_row_index(n1, r2[j] - d1) : -1;
        const int land2 = r1[i] + d1 > 0 ? find_row_index(n2, r1[i] + d1) : -1;
        const char lrole1 = land1 >= 0 ? row_role(n1, first_cf(*moved), land1) : 'v';
        const char lrole2 = land2 >= 0 ? row_role(n2, second_cf(*moved), land2) : 'v';
        MoveDescriptor desc;
        desc.kind = MoveKind::SType;
        desc.parity = r1[i] % 2 != 0 ? 'o' : 'e';
        // The classified family needs every end of the trade inside a
        // complete pairwise unit and opposite source parities; boundary
        // trades stay unclassified (zero digits).
        const bool proper = r1[i] % 2 != r2[j] % 2 && role1 != 'l' && role1 != '?' &&
                            role2 != 'l' && role2 != '?' && lrole1 != 'l' &&
                            lrole1 != '?' && lrole2 != 'l' && lrole2 != '?';
        if (proper)
          desc.pos = {role1 == 'f' ? 1 : 2, lrole2 == 'f' ? 1 : 2, role2 == 'f' ? 1 : 2,
                      lrole1 == 'f' ? 1 : 2};
        MoveSite site;
        site.take_first = {i + 1};
        site.take_second = {j + 1};
        site.land_first = {land1 + 1};
        site.land_second = {land2 + 1};
        site.delta_first = d1;
        site.delta_second = -d1;
        out.push_back(make_outcome(desc, site, p, *moved));
      }
    }
  }
  return out;
}

bool is_classified_s(const MoveDescriptor& d) {
  return d.kind == MoveKind::SType && d.pos[0] > 0;
}

namespace {

// Structural signature of two marked rows against the component pairing:
// roles plus adjacency class (A adjacent, B one row apart, G wider).
std::string two_row_signature(const std::vector<int>& rows, Family cf, int idx_a, int idx_b) {
  if (idx_a > idx_b) std::swap(idx_a, idx_b);
  const char ra = row_role(rows, cf, idx_a);
  const char rb = row_role(rows, cf, idx_b);
  const char adj = idx_b == idx_a + 1 ? 'A' : (idx_b == idx_a + 2 ? 'B' : 'G');
  return std::string() + ra + rb + adj;
}

// The five block configurations a traveling pair of rows is seen in across
// the enumerated sweeps; 0 flags a shape outside the taxonomy.
int d_config_number(const std::string& sig) {
  if (sig == "sfA") return 1;  // a complete pairwise unit
  if (sig == "flA") return 2;  // unit's shorter row plus the lone row below
  if (sig == "lsA") return 3;  // lone row plus the longer row below it
  if (sig == "llA") return 4;  // two adjacent lone rows
  if (sig == "slB") return 5;  // unit's longer row and a lone row one apart
  return 0;
}

}  // namespace

std::vector<MoveOutcome> enumerate_d_moves(const RigidPair& p) {
  std::vector<MoveOutcome> out;
  const Symbol sym = pair_symbol(p);
  for (bool from_first : {true, false}) {
    const std::vector<int> src = diagram_rows(from_first ? p.first : p.second);
    const int n = static_cast<int>(src.size());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        auto moved = transfer_rows(p, from_first, {i + 1, j + 1});
        if (!moved) continue;
        if (!symbols_equal(sym, pair_symbol(*moved))) continue;
        MoveDescriptor desc;
        desc.kind = MoveKind::DType;
        // Pairwise rows share a parity; a mixed-parity transfer that still
        // preserves the symbol is kept but stays unclassified.
        desc.parity = src[i] % 2 != src[j] % 2 ? 'x' : (src[i] % 2 != 0 ? 'o' : 'e');
        MoveSite site;
        (from_first ? site.take_first : site.take_second) = {i + 1, j + 1};
        site.from_first = from_first;
        const std::vector<int> dst =
            diagram_rows(from_first ? moved->second : moved->first);
        const int l1 = find_row_index(dst, src[i]);
        int l2 = find_row_index(dst, src[j]);
        if (l2 == l1) ++l2;  // equal lengths land adjacently
        (from_first ? site.land_second : site.land_first) = {l1 + 1, l2 + 1};
        MoveOutcome m = make_outcome(desc, site, p, *moved);
        if (m.desc.parity != 'x') {
          m.desc.d_source = d_config_number(d_source_signature(m));
          m.desc.d_target = d_config_number(d_target_signature(m));
        }
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

bool is_classified_d(const MoveDescriptor& d) {
  return d.kind == MoveKind::DType && d.parity != 'x' && d.d_source > 0 && d.d_target > 0;
}

std::string d_source_signature(const MoveOutcome& m) {
  const bool ff = m.site.from_first;
  const std::vector<int> rows = diagram_rows(ff ? m.before.first : m.before.second);
  const Family cf = ff ? first_cf(m.before) : second_cf(m.before);
  const auto& take = ff ? m.site.take_first : m.site.take_second;
  return two_row_signature(rows, cf, take[0] - 1, take[1] - 1);
}

std::string d_target_signature(const MoveOutcome& m) {
  const bool ff = m.site.from_first;
  const std::vector<int> rows = diagram_rows(ff ? m.result.second : m.result.first);
  const Family cf = ff ? second_cf(m.result) : first_cf(m.result);
  const auto& land = ff ? m.site.land_second : m.site.land_first;
  return two_row_signature(rows, cf, land[0] - 1, land[1] - 1);
}

std::vector<MoveOutcome> enumerate_te_to(const RigidPair& p, MoveKind which) {
  std::vector<MoveOutcome> out;
  if (which != MoveKind::TE && which != MoveKind::TO) return out;
  const Symbol sym = pair_symbol(p);
  for (bool from_first : {true, false}) {
    const Partition& srcp = from_first ? p.first : p.second;
    const Partition& dstp = from_first ? p.second : p.first;
    const std::vector<int> src = diagram_rows(srcp);
    const std::vector<int> dst = diagram_rows(dstp);
    if (src.size() % 2 != 0 || dst.size() % 2 == 0) continue;
    const Family scf = component_family(p.theory.family, srcp.total());
    for (int i = 0; i < static_cast<int>(src.size()); ++i) {
      if (src[i] % 2 != 0) continue;
      if (row_role(src, scf, i) != 'f') continue;
      bool shorter_even = true;
      for (int k = i; k < static_cast<int>(src.size()); ++k)
        if (src[k] % 2 != 0) shorter_even = false;
      if (!shorter_even) continue;
      auto moved = transfer_rows(p, from_first, {i + 1});
      if (!moved) continue;
      if (!symbols_equal(sym, pair_symbol(*moved))) continue;
      const std::vector<int> ndst =
          diagram_rows(from_first ? moved->second : moved->first);
      const Family dcf = component_family(
          p.theory.family, (from_first ? moved->second : moved->first).total());
      const int land = find_row_index(ndst, src[i]);
      const char lrole = row_role(ndst, dcf, land);
      if (which == MoveKind::TE && lrole != 'f') continue;
      if (which == MoveKind::TO && lrole != 's') continue;
      MoveDescriptor desc;
      desc.kind = which;
      MoveSite site;
      (from_first ? site.take_first : site.take_second) = {i + 1};
      (from_first ? site.land_second : site.land_first) = {land + 1};
      site.from_first = from_first;
      out.push_back(make_outcome(desc, site, p, *moved));
    }
  }
  return out;
}

std::vector<SplitInstance> verify_splitting(const RigidPair& p) {
  std::vector<SplitInstance> out;
  const std::vector<int> r1 = diagram_rows(p.first);
  const std::vector<int> r2 = diagram_rows(p.second);
  const Symbol sym = pair_symbol(p);
  for (int a = 0; a < static_cast<int>(r1.size()); ++a)
    for (int b = 0; b < static_cast<int>(r1.size()); ++b)
      for (int c = 0; c < static_cast<int>(r2.size()); ++c)
        for (int d = 0; d < static_cast<int>(r2.size()); ++d) {
          if (a == b || c == d) continue;
          // L(b) > L(d) > L(a) > L(c)
          if (!(r1[b] > r2[d] && r2[d] > r1[a] && r1[a] > r2[c])) continue;
          auto direct = interchange_blocks(p, {a + 1, b + 1}, {c + 1, d + 1});
          if (!direct || !symbols_equal(sym, pair_symbol(*direct))) continue;
          auto step = [&](const RigidPair& q, int ri, int rj) -> std::optional<RigidPair> {
            const auto q1 = diagram_rows(q.first);
            const auto q2 = diagram_rows(q.second);
            const int i = find_row_index(q1, ri);
            const int j = find_row_index(q2, rj);
            if (i < 0 || j < 0) return std::nullopt;
            auto res = swap_rows(q, i + 1, 0, j + 1, 0);
            if (res && !symbols_equal(pair_symbol(q), pair_symbol(*res))) return std::nullopt;
            return res;
          };
          SplitInstance inst{p, a + 1, b + 1, c + 1, d + 1, false, false};
          // order 1: (a<->c) then (b<->d); order 2: reverse
          auto m1 = step(p, r1[a], r2[c]);
          auto n1 = m1 ? step(*m1, r1[b], r2[d]) : std::nullopt;
          auto m2 = step(p, r1[b], r2[d]);
          auto n2 = m2 ? step(*m2, r1[a], r2[c]) : std::nullopt;
          inst.admissible = n1.has_value() && n2.has_value();
          inst.ok = inst.admissible && *n1 == *direct && *n2 == *direct;
          out.push_back(inst);
        }
  return out;
}

std::vector<MoveOutcome> all_move_edges(const RigidPair& p) {
  std::vector<MoveOutcome> edges;
  for (MoveKind k : {MoveKind::See1, MoveKind::See2, MoveKind::Se2, MoveKind::Ie2,
                     MoveKind::Seo2}) {
    auto v = enumerate_named_moves(p, k);
    edges.insert(edges.end(), v.begin(), v.end());
  }
  auto s = enumerate_s_moves(p);
  edges.insert(edges.end(), s.begin(), s.end());
  auto d = enumerate_d_moves(p);
  edges.insert(edges.end(), d.begin(), d.end());
  return edges;
}

namespace {

std::string pair_key(const RigidPair& p) {
  return to_string(p.first) + "|" + to_string(p.second);
}

}  // namespace

std::optional<std::vector<MoveOutcome>> decompose_interchange_outcomes(
    const RigidPair& p, const std::vector<int>& rows_first_idx,
    const std::vector<int>& rows_second_idx, int max_depth) {
  auto direct = interchange_blocks(p, rows_first_idx, rows_second_idx);
  if (!direct) return std::nullopt;
  if (!symbols_equal(pair_symbol(p), pair_symbol(*direct))) return std::nullopt;
  if (*direct == p) return std::vector<MoveOutcome>{};

  // BFS inside the symbol class; every edge preserves the symbol, so the
  // reachable set stays small.
  std::map<std::string, std::pair<std::string, MoveOutcome>> parent;
  std::map<std::string, RigidPair> seen;
  std::deque<RigidPair> queue;
  std::map<std::string, int> depth;
  const std::string start = pair_key(p);
  const std::string goal = pair_key(*direct);
  seen.emplace(start, p);
  depth[start] = 0;
  queue.push_back(p);
  while (!queue.empty()) {
    RigidPair cur = queue.front();
    queue.pop_front();
    const std::string ck = pair_key(cur);
    if (depth[ck] >= max_depth) continue;
    for (const auto& e : all_move_edges(cur)) {
      const std::string nk = pair_key(e.result);
      if (seen.count(nk)) continue;
      seen.emplace(nk, e.result);
      parent.emplace(nk, std::make_pair(ck, e));
      depth[nk] = depth[ck] + 1;
      if (nk == goal) {
        std::vector<MoveOutcome> seq;
        std::string at = nk;
        while (at != start) {
          auto& pr = parent.at(at);
          seq.push_back(pr.second);
          at = pr.first;
        }
        std::reverse(seq.begin(), seq.end());
        return seq;
      }
      queue.push_back(seen.at(nk));
    }
  }
  return std::nullopt;
}

std::optional<std::vector<MoveDescriptor>> decompose_interchange(
    const RigidPair& p, const std::vector<int>& rows_first_idx,
    const std::vector<int>& rows_second_idx, int max_depth) {
  auto outcomes = decompose_interchange_outcomes(p, rows_first_idx, rows_second_idx, max_depth);
  if (!outcomes) return std::nullopt;
  std::vector<MoveDescriptor> seq;
  for (const auto& m : *outcomes) seq.push_back(m.desc);
  return seq;
}

}  // namespace symfin
