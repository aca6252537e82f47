#include "fingerprint.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace symfin {

char sign_rule_letter(SignRule r) {
  switch (r) {
    case SignRule::A: return 'a';
    case SignRule::B: return 'b';
    case SignRule::C: return 'c';
  }
  return '?';
}

std::optional<SignRule> sign_rule_from_letter(char c) {
  switch (c) {
    case 'a': case 'A': return SignRule::A;
    case 'b': case 'B': return SignRule::B;
    case 'c': case 'C': return SignRule::C;
    default: return std::nullopt;
  }
}

int sign_value(SignRule r, const Partition& lambda, int i) {
  switch (r) {
    case SignRule::A:
      return i % 2 == 0 ? +1 : -1;
    case SignRule::B: {
      long long prefix = 0;
      for (int k = 1; k <= i; ++k) prefix += lambda.part_at(k);
      return prefix % 2 == 0 ? +1 : -1;
    }
    case SignRule::C: {
      int height = 0;
      for (int v : lambda.parts())
        if (v >= lambda.part_at(i)) ++height;
      return height % 2 == 0 ? +1 : -1;
    }
  }
  return +1;
}

Partition MuTrace::mu_partition() const {
  std::vector<int> vals;
  for (const auto& e : idx)
    if (e.mu > 0) vals.push_back(e.mu);
  std::sort(vals.begin(), vals.end(), std::greater<>());
  return Partition(std::move(vals));
}

std::vector<int> MuTrace::mu_vector() const {
  std::vector<int> out;
  out.reserve(idx.size());
  for (const auto& e : idx) out.push_back(e.mu);
  return out;
}

MuTrace mu_formula(const Partition& lambda, SignRule rule) {
  MuTrace t;
  t.lambda = lambda;
  t.method = MuMethod::Formula;
  t.rule = rule;
  const int l = lambda.length();
  t.idx.resize(l);
  // Prefix sums once; rule B needs them and the flags reuse nothing here.
  std::vector<long long> prefix(l + 1, 0);
  for (int i = 1; i <= l; ++i) prefix[i] = prefix[i - 1] + lambda.part_at(i);
  for (int i = 1; i <= l; ++i) {
    const int v = lambda.part_at(i);
    t.idx[i - 1].lambda = v;
    int mu = v;
    if (v % 2 != 0) {
      const int p = sign_value(rule, lambda, i);
      const bool boundary =
          p > 0 ? (i == 1 || lambda.part_at(i - 1) != v) : (lambda.part_at(i + 1) != v);
      if (boundary) mu = v + p;
    }
    t.idx[i - 1].mu = mu;
  }
  for (int i = 1; i < l; ++i)
    if (t.idx[i].mu > t.idx[i - 1].mu) throw internal_error("mu_formula: mu not monotone");
  return t;
}

MuTrace mu_blocks(const RigidPair& pair) {
  const Partition lambda = add(pair.first, pair.second);
  MuTrace t;
  t.lambda = lambda;
  t.method = MuMethod::Blocks;
  t.idx.resize(lambda.length());
  for (int i = 1; i <= lambda.length(); ++i) {
    t.idx[i - 1].lambda = lambda.part_at(i);
    t.idx[i - 1].mu = lambda.part_at(i);
  }

  // Merge the provenance-tagged rows, longest first; ties keep lambda' rows
  // ahead. The resulting mu does not depend on the tie order.
  const std::vector<int> r1 = diagram_rows(pair.first);
  const std::vector<int> r2 = diagram_rows(pair.second);
  std::vector<RowsEntry> rows;
  {
    size_t i = 0, j = 0;
    while (i < r1.size() || j < r2.size()) {
      const bool take_first =
          j >= r2.size() || (i < r1.size() && r1[i] >= r2[j]);
      RowsEntry e;
      e.length = take_first ? r1[i] : r2[j];
      e.source = take_first ? 1 : 2;
      (take_first ? i : j)++;
      rows.push_back(e);
    }
  }
  const int R = static_cast<int>(rows.size());
  std::vector<long long> below(R + 2, 0);
  for (int r = R - 1; r >= 0; --r) below[r] = below[r + 1] + rows[r].length;

  for (int r = 0; r + 1 < R; r += 2) {
    RowsEntry& upper = rows[r];      // longer row of the unit
    RowsEntry& lower = rows[r + 1];  // shorter row
    upper.unit = lower.unit = r / 2;
    upper.role = 's';
    lower.role = 'f';
    const int x = upper.length, y = lower.length;
    const bool phase_odd = below[r + 2] % 2 != 0;
    if (x == y) {
      upper.block = lower.block = (upper.source == lower.source) ? "II" : "IIx";
      continue;
    }
    if (x % 2 == y % 2) {
      if (phase_odd) {
        upper.action = -1;
        lower.action = +1;
        upper.block = lower.block = "III";
      } else {
        upper.block = lower.block = (upper.source == lower.source) ? "II" : "IIx";
      }
    } else {
      // Mixed parity: an inserted row against a host row; exactly one side
      // moves a box.
      if (phase_odd) lower.action = +1;
      else upper.action = -1;
      upper.block = lower.block = "Bd";
    }
  }
  if (R % 2 != 0) {
    RowsEntry& last = rows[R - 1];
    last.role = 'l';
    // The boundary structure holding a lone row; the taxonomy reserves the
    // I form for the orthogonal theories.
    last.block = pair.theory.family == Family::C ? "tail" : "I";
    if (last.length % 2 != 0) last.action = -1;
  }

  // Template contracts; a violation means the pattern matches no block form.
  for (int r = 0; r + 1 < R; r += 2) {
    const auto& u = rows[r];
    const auto& w = rows[r + 1];
    const bool eqpar = u.length % 2 == w.length % 2;
    if (u.length == w.length && (u.action || w.action))
      throw internal_error("mu_blocks: undecomposable (equal rows moved)");
    if (eqpar && (u.action != 0) != (w.action != 0))
      throw internal_error("mu_blocks: undecomposable (host pair moved one-sidedly)");
    if (!eqpar && (u.action != 0) == (w.action != 0))
      throw internal_error("mu_blocks: undecomposable (boundary unit must move one box)");
  }

  for (const auto& e : rows) {
    if (e.action == -1) {
      IndexEntry& ie = t.idx[e.length - 1];
      ie.mu = ie.lambda - 1;
    } else if (e.action == +1) {
      if (e.length + 1 > lambda.length())
        throw internal_error("mu_blocks: append outside the partition");
      IndexEntry& ie = t.idx[e.length];  // 1-based index length+1
      ie.mu = ie.lambda + 1;
    }
  }
  for (size_t i = 0; i < t.idx.size(); ++i) {
    if (std::abs(t.idx[i].mu - t.idx[i].lambda) > 1)
      throw internal_error("mu_blocks: index moved twice");
    if (i > 0 && t.idx[i].mu > t.idx[i - 1].mu)
      throw internal_error("mu_blocks: mu not monotone");
  }
  t.rows = std::move(rows);
  return t;
}

void fill_condition_flags(MuTrace& t, const RigidPair& pair) {
  const Partition expect = add(pair.first, pair.second);
  if (!(expect == t.lambda))
    throw internal_error("condition flags: trace does not belong to this pair");
  const bool sp = pair.theory.family == Family::C;
  long long dsum = 0;
  for (size_t k = 0; k < t.idx.size(); ++k) {
    IndexEntry& e = t.idx[k];
    e.cond_i = e.mu != e.lambda;
    dsum += e.mu - e.lambda;
    e.cond_ii = dsum != 0;
    const int lp = pair.first.part_at(static_cast<int>(k) + 1);
    e.cond_iii = sp ? (lp % 2 == 0) : (lp % 2 != 0);
  }
  t.flags_filled = true;
}

int tau(const MuTrace& t, long long m, bool use_cond_ii) {
  if (m < 2 || m % 2 != 0) throw internal_error("tau: m must be even and positive");
  if (!t.flags_filled) throw internal_error("tau: flags not filled");
  for (const auto& e : t.idx)
    if (e.mu == m && (e.cond_i || (use_cond_ii && e.cond_ii) || e.cond_iii)) return -1;
  return +1;
}

namespace {

Fingerprint assemble_range(const MuTrace& t, const RigidPair* pair, int begin, int end,
                           bool use_cond_ii) {
  std::map<int, int, std::greater<int>> mult;
  long long boxes = 0;
  for (int i = begin; i <= end; ++i) {
    const int m = t.idx[i - 1].mu;
    if (m > 0) {
      ++mult[m];
      boxes += m;
    }
  }
  std::vector<int> alpha, beta;
  long long consumed = 0;
  int leftovers = 0;
  for (const auto& [v, c] : mult) {
    if (v % 2 == 0 && tau(t, v, use_cond_ii) == -1) {
      for (int k = 0; k < c; ++k) beta.push_back(v / 2);
      consumed += static_cast<long long>(v) * c;
      continue;
    }
    for (int k = 0; k < c / 2; ++k) alpha.push_back(v);
    consumed += static_cast<long long>(v) * (c - c % 2);
    if (c % 2 != 0) {
      if (v % 2 == 0)
        throw internal_error("assemble: unpairable part " + std::to_string(v) +
                             " (even, tau=+1, odd multiplicity)");
      // One leftover odd part is admissible in the B theory only.
      if (pair && pair->theory.family != Family::B)
        throw internal_error("assemble: unpairable part " + std::to_string(v));
      ++leftovers;
      if (pair && leftovers > 1)
        throw internal_error("assemble: more than one unpairable odd part");
      alpha.push_back(v);
      consumed += v;
    }
  }
  if (pair && consumed != boxes) throw internal_error("assemble: box accounting failed");
  std::sort(alpha.begin(), alpha.end(), std::greater<>());
  std::sort(beta.begin(), beta.end(), std::greater<>());
  return Fingerprint{Partition(std::move(alpha)), Partition(std::move(beta))};
}

}  // namespace

Fingerprint assemble(const MuTrace& t, const RigidPair& pair, bool use_cond_ii) {
  return assemble_range(t, &pair, 1, static_cast<int>(t.idx.size()), use_cond_ii);
}

Fingerprint window_fingerprint(const MuTrace& t, int begin, int end) {
  if (begin < 1 || end > static_cast<int>(t.idx.size()) || begin > end)
    throw internal_error("window_fingerprint: bad window");
  return assemble_range(t, nullptr, begin, end, true);
}

Fingerprint pair_fingerprint(const RigidPair& pair, MuMethod method, SignRule rule,
                             bool use_cond_ii) {
  MuTrace t = method == MuMethod::Formula ? mu_formula(add(pair.first, pair.second), rule)
                                          : mu_blocks(pair);
  fill_condition_flags(t, pair);
  return assemble(t, pair, use_cond_ii);
}

Fingerprint pair_fingerprint(const RigidPair& pair, MuMethod method) {
  return pair_fingerprint(pair, method, elected_sign_rule(), true);
}

Fingerprint pair_fingerprint(const RigidPair& pair) {
  return pair_fingerprint(pair, MuMethod::Formula, elected_sign_rule(), true);
}

std::string trace_csv(const MuTrace& t) {
  std::ostringstream os;
  os << "i,lambda_i,mu_i,cond_i,cond_ii,cond_iii,tau\n";
  for (size_t k = 0; k < t.idx.size(); ++k) {
    const auto& e = t.idx[k];
    os << (k + 1) << ',' << e.lambda << ',' << e.mu << ',' << (e.cond_i ? "y" : "")
       << ',' << (e.cond_ii ? "y" : "") << ',' << (e.cond_iii ? "y" : "") << ',';
    if (e.mu >= 2 && e.mu % 2 == 0 && t.flags_filled) os << tau(t, e.mu);
    os << '\n';
  }
  return os.str();
}

std::string trace_pretty(const MuTrace& t) {
  auto line = [&](const std::string& name, auto cell) {
    std::ostringstream os;
    os << name;
    for (size_t k = 0; k < t.idx.size(); ++k) os << '\t' << cell(t.idx[k]);
    return os.str();
  };
  std::ostringstream os;
  os << line("i", [&](const IndexEntry& e) {
    return std::to_string(&e - t.idx.data() + 1);
  }) << '\n';
  os << line("lambda_i", [](const IndexEntry& e) { return std::to_string(e.lambda); }) << '\n';
  os << line("mu_i", [](const IndexEntry& e) { return std::to_string(e.mu); }) << '\n';
  os << line("(i)", [](const IndexEntry& e) { return std::string(e.cond_i ? "y" : ""); }) << '\n';
  os << line("(ii)", [](const IndexEntry& e) { return std::string(e.cond_ii ? "y" : ""); }) << '\n';
  os << line("(iii)", [](const IndexEntry& e) { return std::string(e.cond_iii ? "y" : ""); })
     << '\n';
  os << line("tau", [&](const IndexEntry& e) {
    return e.mu >= 2 && e.mu % 2 == 0 && t.flags_filled ? std::to_string(tau(t, e.mu))
                                                        : std::string();
  });
  return os.str();
}

namespace {

// Shared sweep over B then D theories, ranks ascending.
template <typename Fn>
std::optional<TableInstance> sweep_for_instance(int max_rank, Fn&& probe) {
  for (int n = 1; n <= max_rank; ++n) {
    for (Family f : {Family::B, Family::D}) {
      for (const auto& pair : enumerate_rigid_pairs(TheoryKind{f, n})) {
        if (auto found = probe(pair)) return found;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<TableInstance> find_see1_instance(SignRule rule, int max_rank) {
  return sweep_for_instance(max_rank, [&](const RigidPair& pair) -> std::optional<TableInstance> {
    const Partition lambda = add(pair.first, pair.second);
    const int l = lambda.length();
    MuTrace t = mu_formula(lambda, rule);
    fill_condition_flags(t, pair);
    for (int s = 1; s <= l; ++s) {
      const int v = lambda.part_at(s);
      if (v < 3 || v % 2 == 0) continue;
      if (s > 1 && lambda.part_at(s - 1) == v) continue;  // start of the run
      int e = s;
      while (lambda.part_at(e + 1) == v) ++e;
      if ((e - s + 1) % 2 != 0) continue;  // even-length run
      bool ok = true;
      for (int i = s; i <= e && ok; ++i) {
        const auto& en = t.idx[i - 1];
        if (en.mu != en.lambda || en.cond_i || en.cond_ii || en.cond_iii) ok = false;
      }
      if (ok) return TableInstance{pair, s, e};
    }
    return std::nullopt;
  });
}

std::optional<TableInstance> find_seo2_instance(SignRule rule, int max_rank) {
  return sweep_for_instance(max_rank, [&](const RigidPair& pair) -> std::optional<TableInstance> {
    const Partition lambda = add(pair.first, pair.second);
    const int l = lambda.length();
    MuTrace t = mu_formula(lambda, rule);
    fill_condition_flags(t, pair);
    for (int s = 1; s <= l; ++s) {
      if (lambda.part_at(s) != 5) continue;
      if (s > 1 && lambda.part_at(s - 1) == 5) continue;
      int e = s + 1;
      while (lambda.part_at(e) == 4) ++e;
      const int fours = e - s - 1;
      if (fours < 1 || fours % 2 == 0) continue;
      if (lambda.part_at(e) != 3) continue;
      bool ok = true;
      for (int i = s; i <= e && ok; ++i) {
        const auto& en = t.idx[i - 1];
        if (en.mu != 4) ok = false;
        if (en.cond_i != (i == s || i == e)) ok = false;
        if (en.cond_ii != (i < e)) ok = false;
      }
      if (ok && tau(t, 4) == -1) return TableInstance{pair, s, e};
    }
    return std::nullopt;
  });
}

std::optional<TableInstance> find_seo2_image_instance(SignRule rule, int max_rank) {
  return sweep_for_instance(max_rank, [&](const RigidPair& pair) -> std::optional<TableInstance> {
    const Partition lambda = add(pair.first, pair.second);
    const int l = lambda.length();
    MuTrace t = mu_formula(lambda, rule);
    fill_condition_flags(t, pair);
    for (int s = 1; s <= l; ++s) {
      if (lambda.part_at(s) != 4) continue;
      if (s > 1 && lambda.part_at(s - 1) == 4) continue;
      int e = s;
      while (lambda.part_at(e + 1) == 4) ++e;
      if (e - s + 1 < 3) continue;
      if ((e - s + 1) % 2 == 0) --e;  // odd-count window inside the run
      bool ok = true;
      for (int i = s; i <= e && ok; ++i) {
        const auto& en = t.idx[i - 1];
        if (en.mu != 4 || en.cond_i || en.cond_ii || !en.cond_iii) ok = false;
      }
      if (ok && tau(t, 4) == -1) return TableInstance{pair, s, e};
    }
    return std::nullopt;
  });
}

namespace {

CalibrationReport run_calibration(int max_rank) {
  CalibrationReport rep;
  rep.max_rank = max_rank;
  rep.fixture_rank_bound = std::max(max_rank, 10);
  const SignRule rules[3] = {SignRule::A, SignRule::B, SignRule::C};
  for (int k = 0; k < 3; ++k) {
    const SignRule r = rules[k];
    auto see1 = find_see1_instance(r, rep.fixture_rank_bound);
    auto seo2 = find_seo2_instance(r, rep.fixture_rank_bound);
    rep.see1_ok[k] = see1.has_value();
    rep.seo2_ok[k] = seo2.has_value();
    bool agree = true;
    for (int n = 1; n <= max_rank && agree; ++n) {
      for (Family f : {Family::B, Family::C, Family::D}) {
        for (const auto& pair : enumerate_rigid_pairs(TheoryKind{f, n})) {
          const Partition lambda = add(pair.first, pair.second);
          if (mu_formula(lambda, r).mu_vector() != mu_blocks(pair).mu_vector()) {
            agree = false;
            std::ostringstream os;
            os << "formula/" << sign_rule_letter(r) << " vs blocks differ on ("
               << to_string(pair.first) << ", " << to_string(pair.second) << ") in "
               << family_letter(f) << "_" << n;
            rep.disagreement_note[k] = os.str();
            break;
          }
        }
        if (!agree) break;
      }
    }
    rep.agree_ok[k] = agree;
    if (rep.see1_ok[k] && rep.seo2_ok[k] && agree) {
      rep.elected = r;
      rep.see1 = *see1;
      rep.seo2 = *seo2;
    }
  }
  int survivors = 0;
  for (int k = 0; k < 3; ++k)
    if (rep.see1_ok[k] && rep.seo2_ok[k] && rep.agree_ok[k]) ++survivors;
  if (survivors != 1)
    throw internal_error("calibration: expected exactly one surviving sign rule, found " +
                         std::to_string(survivors));
  return rep;
}

}  // namespace

const CalibrationReport& calibrate(int max_rank) {
  static std::mutex mu;
  static std::map<int, CalibrationReport> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(max_rank);
  if (it == cache.end()) it = cache.emplace(max_rank, run_calibration(max_rank)).first;
  return it->second;
}

SignRule elected_sign_rule() { return calibrate().elected; }

}  // namespace symfin
