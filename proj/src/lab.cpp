#include "lab.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace symfin {

using nlohmann::json;

Config config_from_json(const json& j) {
  Config cfg;
  if (j.contains("max_rank")) cfg.max_rank = j.at("max_rank").get<int>();
  if (j.contains("sign_rule")) {
    const std::string s = j.at("sign_rule").get<std::string>();
    if (s.empty() || !sign_rule_from_letter(s[0]))
      throw invalid_input("config: sign_rule must be one of a|b|c");
    cfg.sign_rule = *sign_rule_from_letter(s[0]);
  }
  if (j.contains("orientation")) {
    const std::string s = j.at("orientation").get<std::string>();
    if (s == "rows") cfg.orientation = Orientation::Rows;
    else if (s == "columns") cfg.orientation = Orientation::Columns;
    else throw invalid_input("config: orientation must be rows|columns");
  }
  if (j.contains("enable_teto")) cfg.enable_teto = j.at("enable_teto").get<bool>();
  if (j.contains("gap_rule")) {
    const std::string s = j.at("gap_rule").get<std::string>();
    if (s == "virtual-zero") cfg.gap_rule = GapRule::VirtualZero;
    else if (s == "interior-only") cfg.gap_rule = GapRule::InteriorOnly;
    else throw invalid_input("config: gap_rule must be virtual-zero|interior-only");
  }
  return cfg;
}

json partition_to_json(const Partition& p) { return json(p.parts()); }

json pair_to_json(const RigidPair& p) {
  json j;
  j["theory"] = std::string(1, family_letter(p.theory.family));
  j["n"] = p.theory.rank;
  j["lambda1"] = partition_to_json(p.first);
  j["lambda2"] = partition_to_json(p.second);
  return j;
}

RigidPair pair_from_json(const json& j) {
  if (!j.is_object()) throw invalid_input("pair record must be a JSON object");
  for (const char* key : {"theory", "n", "lambda1", "lambda2"})
    if (!j.contains(key)) throw invalid_input(std::string("pair record missing field '") + key + "'");
  const std::string theory = j.at("theory").get<std::string>();
  if (theory.size() != 1 || !family_from_letter(theory[0]))
    throw invalid_input("pair record: theory must be B, C or D");
  RigidPair p;
  p.theory.family = *family_from_letter(theory[0]);
  p.theory.rank = j.at("n").get<int>();
  auto read_partition = [](const json& arr, const char* name) {
    if (!arr.is_array()) throw invalid_input(std::string(name) + " must be an array");
    std::vector<int> parts;
    for (const auto& v : arr) {
      if (!v.is_number_integer()) throw invalid_input(std::string(name) + " must hold integers");
      parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts));
  };
  p.first = read_partition(j.at("lambda1"), "lambda1");
  p.second = read_partition(j.at("lambda2"), "lambda2");
  validate_pair(p);
  return p;
}

json symbol_to_json(const Symbol& s) {
  json j;
  j["top"] = s.top;
  j["bottom"] = s.bottom;
  return j;
}

json fingerprint_to_json(const Fingerprint& f) {
  json j;
  j["alpha"] = f.alpha.parts();
  j["beta"] = f.beta.parts();
  return j;
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[i] = digits[v & 0xF];
  return out;
}

CatalogRecord make_record(const RigidPair& pair, SignRule rule) {
  CatalogRecord r;
  r.pair = pair;
  r.symbol = pair_symbol(pair);
  MuTrace t = mu_formula(add(pair.first, pair.second), rule);
  fill_condition_flags(t, pair);
  r.fingerprint = assemble(t, pair);
  r.trace_digest = hex64(fnv1a64(trace_csv(t) + sign_rule_letter(rule)));
  return r;
}

json record_to_json(const CatalogRecord& r) {
  json j;
  j["pair"] = pair_to_json(r.pair);
  j["symbol"] = symbol_to_json(canonical_symbol(r.symbol));
  j["fingerprint"] = fingerprint_to_json(r.fingerprint);
  j["trace_digest"] = r.trace_digest;
  return j;
}

std::string enumerate_jsonl(Family f, int max_rank) {
  std::ostringstream os;
  for (int n = 1; n <= max_rank; ++n)
    for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n}))
      os << pair_to_json(p).dump() << '\n';
  return os.str();
}

std::string catalog_jsonl(Family f, int max_rank, SignRule rule) {
  std::ostringstream os;
  for (int n = 1; n <= max_rank; ++n)
    for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n}))
      os << record_to_json(make_record(p, rule)).dump() << '\n';
  return os.str();
}

namespace {

std::string symbol_key(const Symbol& s) {
  return symbol_to_json(canonical_symbol(s)).dump();
}

std::string fingerprint_key(const Fingerprint& f) {
  return fingerprint_to_json(f).dump();
}

}  // namespace

ForwardReport verify_forward(Family f, int max_rank, SignRule rule) {
  ForwardReport rep;
  std::ostringstream os;
  for (int n = 1; n <= max_rank; ++n) {
    std::map<std::string, std::vector<CatalogRecord>> classes;
    for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n})) {
      CatalogRecord r = make_record(p, rule);
      classes[symbol_key(r.symbol)].push_back(std::move(r));
      ++rep.pairs;
    }
    for (const auto& [key, members] : classes) {
      ++rep.classes;
      bool uniform = true;
      for (const auto& m : members)
        if (!(m.fingerprint == members.front().fingerprint)) uniform = false;
      if (!uniform) ++rep.violations;
      json j;
      j["n"] = n;
      j["key"] = json::parse(key);
      j["uniform"] = uniform;
      json mem = json::array();
      for (const auto& m : members) {
        json one = pair_to_json(m.pair);
        one["fingerprint"] = fingerprint_to_json(m.fingerprint);
        mem.push_back(one);
      }
      j["members"] = mem;
      os << j.dump() << '\n';
    }
  }
  rep.jsonl = os.str();
  return rep;
}

ConverseReport verify_converse(Family f, int max_rank, SignRule rule) {
  ConverseReport rep;
  std::ostringstream os;
  for (int n = 1; n <= max_rank; ++n) {
    std::map<std::string, std::vector<CatalogRecord>> classes;
    for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n})) {
      CatalogRecord r = make_record(p, rule);
      classes[fingerprint_key(r.fingerprint)].push_back(std::move(r));
      ++rep.pairs;
    }
    for (const auto& [key, members] : classes) {
      ++rep.classes;
      bool uniform = true;
      for (const auto& m : members)
        if (!symbols_equal(m.symbol, members.front().symbol)) uniform = false;
      if (!uniform) ++rep.nonuniform;
      // Recovery probe: within a fingerprint class, the summed partition
      // determines the unordered operator.
      std::map<std::string, std::set<std::string>> by_lambda;
      for (const auto& m : members) {
        std::string a = to_string(m.pair.first), b = to_string(m.pair.second);
        if (b < a) std::swap(a, b);
        by_lambda[to_string(add(m.pair.first, m.pair.second))].insert(a + "|" + b);
      }
      int collide = 0;
      for (const auto& [lam, ops] : by_lambda)
        if (ops.size() > 1) ++collide;
      rep.recovery_collisions += collide;
      json j;
      j["n"] = n;
      j["key"] = json::parse(key);
      j["uniform"] = uniform;
      j["recovery_collisions"] = collide;
      json mem = json::array();
      for (const auto& m : members) {
        json one = pair_to_json(m.pair);
        one["symbol"] = symbol_to_json(canonical_symbol(m.symbol));
        mem.push_back(one);
      }
      j["members"] = mem;
      os << j.dump() << '\n';
    }
  }
  rep.jsonl = os.str();
  return rep;
}

DualityReport duality_match(int rank, SignRule rule, bool include_d_self) {
  DualityReport rep;
  rep.rank = rank;
  std::map<std::string, std::vector<RigidPair>> b_side, c_side;
  for (const auto& p : enumerate_rigid_pairs(TheoryKind{Family::B, rank})) {
    b_side[symbol_key(pair_symbol(p))].push_back(p);
    ++rep.b_pairs;
  }
  for (const auto& p : enumerate_rigid_pairs(TheoryKind{Family::C, rank})) {
    c_side[symbol_key(pair_symbol(p))].push_back(p);
    ++rep.c_pairs;
  }
  std::ostringstream os;
  for (const auto& [key, bm] : b_side) {
    auto it = c_side.find(key);
    json j;
    j["symbol"] = json::parse(key);
    json bj = json::array();
    for (const auto& p : bm) bj.push_back(pair_to_json(p));
    j["b_members"] = bj;
    if (it != c_side.end()) {
      ++rep.matched_classes;
      json cj = json::array();
      for (const auto& p : it->second) cj.push_back(pair_to_json(p));
      j["c_members"] = cj;
      j["matched"] = true;
    } else {
      ++rep.unmatched_b;
      j["matched"] = false;
    }
    os << j.dump() << '\n';
  }
  for (const auto& [key, cm] : c_side) {
    if (b_side.count(key)) continue;
    ++rep.unmatched_c;
    json j;
    j["symbol"] = json::parse(key);
    json cj = json::array();
    for (const auto& p : cm) cj.push_back(pair_to_json(p));
    j["c_members"] = cj;
    j["matched"] = false;
    os << j.dump() << '\n';
  }
  if (include_d_self) {
    std::map<std::string, int> d_side;
    int d_pairs = 0;
    for (const auto& p : enumerate_rigid_pairs(TheoryKind{Family::D, rank})) {
      ++d_side[symbol_key(pair_symbol(p))];
      ++d_pairs;
    }
    json j;
    j["d_self_dual"] = true;
    j["d_pairs"] = d_pairs;
    j["d_symbol_classes"] = static_cast<int>(d_side.size());
    os << j.dump() << '\n';
  }
  rep.jsonl = os.str();
  (void)rule;
  return rep;
}

namespace {

json site_to_json(const MoveSite& s) {
  json j;
  j["take_first"] = s.take_first;
  j["take_second"] = s.take_second;
  j["land_first"] = s.land_first;
  j["land_second"] = s.land_second;
  j["delta_first"] = s.delta_first;
  j["delta_second"] = s.delta_second;
  j["from_first"] = s.from_first;
  return j;
}

json move_to_json(const MoveOutcome& m, SignRule rule) {
  json j;
  j["kind"] = move_kind_name(m.desc.kind);
  j["label"] = m.desc.label();
  j["site"] = site_to_json(m.site);
  j["before"] = pair_to_json(m.before);
  j["after"] = pair_to_json(m.result);
  j["symbol_before"] = symbol_to_json(canonical_symbol(pair_symbol(m.before)));
  j["symbol_after"] = symbol_to_json(canonical_symbol(pair_symbol(m.result)));
  j["fingerprint_before"] =
      fingerprint_to_json(pair_fingerprint(m.before, MuMethod::Formula, rule));
  j["fingerprint_after"] =
      fingerprint_to_json(pair_fingerprint(m.result, MuMethod::Formula, rule));
  j["symbol_preserved"] = m.symbol_preserved;
  j["fingerprint_preserved"] = m.fingerprint_preserved;
  return j;
}

}  // namespace

std::string move_sweep_jsonl(Family f, int max_rank, SignRule rule, bool enable_teto) {
  std::ostringstream os;
  for (int n = 1; n <= max_rank; ++n) {
    for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n})) {
      for (const auto& m : all_move_edges(p)) os << move_to_json(m, rule).dump() << '\n';
      if (enable_teto) {
        for (MoveKind k : {MoveKind::TE, MoveKind::TO})
          for (const auto& m : enumerate_te_to(p, k)) os << move_to_json(m, rule).dump() << '\n';
      }
    }
  }
  return os.str();
}

namespace {

struct CheckSink {
  bool pass = true;
  std::ostringstream report;
  std::string first_failure;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    report << (ok ? "PASS" : "FAIL") << "  " << name << '\n';
    if (!ok) {
      pass = false;
      if (first_failure.empty()) first_failure = name + (detail.empty() ? "" : ": " + detail);
    }
  }

  // A forced bad configuration can blow assertions deep inside a suite;
  // surface that as a failed check instead of aborting the run.
  template <typename Fn>
  void section(const std::string& name, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      check(name, false, e.what());
    }
  }
};

}  // namespace

SelftestResult run_selftest(const Config& cfg) {
  CheckSink sink;
  const SignRule rule = cfg.sign_rule.value_or(elected_sign_rule());
  const Orientation orient = cfg.orientation.value_or(Orientation::Columns);

  sink.section("symbol row construction", [&] {
    bool ok = true;
    std::string note;
    for (int total = 1; total <= 17 && ok; ++total) {
      for (Family f : {Family::B, Family::C, Family::D}) {
        if ((f == Family::B) != (total % 2 == 1)) continue;
        for (const auto& p : enumerate_rigid(total, f, cfg.gap_rule)) {
          if (!symbols_equal(component_symbol(p, f), symbol_via_rows(p, f))) {
            ok = false;
            note = to_string(p) + " family " + family_letter(f);
            break;
          }
        }
        if (!ok) break;
      }
    }
    sink.check("symbol row construction matches the definition (totals <= 17)", ok, note);
  });

  sink.section("symbol addition fixture", [&] {
    const Symbol a{{0, 0, 0, 0, 0, 1, 1}, {1, 1, 1, 1, 1, 2}};
    const Symbol b{{0, 0, 0, 1, 1, 1}, {1, 1, 1, 1, 1}};
    const Symbol want{{0, 0, 0, 0, 1, 2, 2}, {1, 2, 2, 2, 2, 3}};
    sink.check("symbol addition fixture", add_symbols(a, b) == want);
  });

  sink.section("structural propositions", [&] {
    bool ok = true;
    std::string note;
    for (int total = 1; total <= 17 && ok; ++total) {
      for (Family f : {Family::B, Family::C, Family::D}) {
        if ((f == Family::B) != (total % 2 == 1)) continue;
        for (const auto& p : enumerate_rigid(total, f, cfg.gap_rule)) {
          if (!structure_report(p, f, orient).pass()) {
            ok = false;
            note = to_string(p) + " family " + family_letter(f);
            break;
          }
        }
        if (!ok) break;
      }
    }
    sink.check("structural propositions uniform in the configured orientation", ok, note);
  });

  sink.section("mu table fixtures", [&] {
    auto seo2 = find_seo2_instance(rule, 10);
    sink.check("seo2 mu table fixture", seo2.has_value());
    auto see1 = find_see1_instance(rule, 10);
    sink.check("see1 mu table fixture", see1.has_value());
    if (seo2) {
      MuTrace t = mu_formula(add(seo2->pair.first, seo2->pair.second), rule);
      fill_condition_flags(t, seo2->pair);
      const Fingerprint w = window_fingerprint(t, seo2->begin, seo2->end);
      const int count = seo2->end - seo2->begin + 1;
      sink.check("seo2 window fingerprint is [;2^odd]",
                 w.alpha.empty() && w.beta.length() == count && w.beta.largest() == 2 &&
                     w.beta.part_at(count) == 2);
    }
    if (see1) {
      MuTrace t = mu_formula(add(see1->pair.first, see1->pair.second), rule);
      fill_condition_flags(t, see1->pair);
      const Fingerprint w = window_fingerprint(t, see1->begin, see1->end);
      const int v = add(see1->pair.first, see1->pair.second).part_at(see1->begin);
      const int count = (see1->end - see1->begin + 1) / 2;
      sink.check("see1 window fingerprint is [v^k;]",
                 w.beta.empty() && w.alpha.length() == count && w.alpha.largest() == v &&
                     w.alpha.part_at(count) == v);
    }
  });

  sink.section("mu route agreement", [&] {
    bool ok = true;
    std::string note;
    for (int n = 1; n <= cfg.max_rank && ok; ++n) {
      for (Family f : {Family::B, Family::C, Family::D}) {
        for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n}, cfg.gap_rule)) {
          if (mu_formula(add(p.first, p.second), rule).mu_vector() !=
              mu_blocks(p).mu_vector()) {
            ok = false;
            note = "(" + to_string(p.first) + ", " + to_string(p.second) + ")";
            break;
          }
        }
        if (!ok) break;
      }
    }
    sink.check("mu formula route agrees with the block route", ok, note);
  });

  sink.section("condition (ii) checks", [&] {
    bool subsume = true, appd = true;
    std::string note1, note2;
    for (int n = 1; n <= cfg.max_rank; ++n) {
      for (Family f : {Family::B, Family::C, Family::D}) {
        for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n}, cfg.gap_rule)) {
          MuTrace t = mu_formula(add(p.first, p.second), rule);
          fill_condition_flags(t, p);
          const bool gapfree = has_no_gaps(t.lambda, GapRule::InteriorOnly);
          if (gapfree && subsume) {
            for (const auto& e : t.idx) {
              if (e.mu >= 2 && e.mu % 2 == 0 && e.cond_ii) {
                bool covered = false;
                for (const auto& x : t.idx)
                  if (x.mu == e.mu && x.cond_i) covered = true;
                if (!covered) {
                  subsume = false;
                  note1 = "(" + to_string(p.first) + ", " + to_string(p.second) + ") m=" +
                          std::to_string(e.mu);
                }
              }
            }
          }
          if (appd && !(assemble(t, p, true) == assemble(t, p, false))) {
            if (gapfree) {
              appd = false;
              note2 = "(" + to_string(p.first) + ", " + to_string(p.second) + ")";
            }
          }
        }
      }
    }
    sink.check("condition (ii) tau values are subsumed by condition (i) on gap-free sums",
               subsume, note1);
    sink.check("disabling condition (ii) changes no fingerprint", appd, note2);
  });

  sink.section("forward verification", [&] {
    bool ok = true;
    std::string note;
    for (Family f : {Family::B, Family::C, Family::D}) {
      const auto rep = verify_forward(f, cfg.max_rank, rule);
      if (rep.violations != 0) {
        ok = false;
        note = std::string(1, family_letter(f)) + " has " + std::to_string(rep.violations) +
               " violating classes";
      }
    }
    sink.check("equal symbols imply equal fingerprints", ok, note);
  });

  sink.section("move sweeps", [&] {
    const int bound = std::min(cfg.max_rank, 5);
    bool ok = true;
    std::string note;
    for (int n = 1; n <= bound && ok; ++n) {
      for (Family f : {Family::B, Family::C, Family::D}) {
        for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n}, cfg.gap_rule)) {
          for (const auto& m : all_move_edges(p)) {
            if (!m.symbol_preserved || !m.fingerprint_preserved) {
              ok = false;
              note = m.desc.label() + " on (" + to_string(p.first) + ", " +
                     to_string(p.second) + ")";
              break;
            }
            if (!(pair_fingerprint(m.result, MuMethod::Blocks) ==
                  pair_fingerprint(m.result, MuMethod::Formula))) {
              ok = false;
              note = "method disagreement after " + m.desc.label();
              break;
            }
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
    }
    sink.check("applicable moves preserve symbol and fingerprint", ok, note);
  });

  sink.section("named example moves", [&] {
    const int bound = std::min(cfg.max_rank, 4);
    bool ok = true;
    std::string note;
    for (int n = 1; n <= bound && ok; ++n) {
      for (Family f : {Family::B, Family::C, Family::D}) {
        for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n}, cfg.gap_rule)) {
          for (MoveKind k : {MoveKind::See1, MoveKind::See2, MoveKind::Se2, MoveKind::Ie2}) {
            for (const auto& m : enumerate_named_moves(p, k)) {
              bool returned = false;
              for (const auto& back : enumerate_named_moves(m.result, k))
                if (back.result == p) returned = true;
              if (!returned) {
                ok = false;
                note = move_kind_name(k) + " not involutive on (" + to_string(p.first) +
                       ", " + to_string(p.second) + ")";
              }
            }
          }
          for (const auto& m : enumerate_named_moves(p, MoveKind::Seo2)) {
            if (m.result.first.total() + m.result.second.total() != p.theory.total()) {
              ok = false;
              note = "Seo2 changed the total";
            }
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
    }
    sink.check("named example moves: involutions and box count", ok, note);
  });

  // Interleaved four-row sites first appear around rank 8, so the sweep
  // reaches past the default bound.
  sink.section("splitting decompositions", [&] {
    const int bound = std::max(cfg.max_rank, 8);
    bool ok = true;
    int admissible = 0;
    std::string note;
    for (int n = 1; n <= bound && ok; ++n) {
      for (Family f : {Family::B, Family::C, Family::D}) {
        for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n}, cfg.gap_rule)) {
          for (const auto& inst : verify_splitting(p)) {
            if (!inst.admissible) continue;
            ++admissible;
            if (!inst.ok) {
              ok = false;
              note = "(" + to_string(p.first) + ", " + to_string(p.second) + ")";
              break;
            }
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
    }
    sink.check("splitting decompositions agree in both orders (" + std::to_string(admissible) +
                   " admissible instances)",
               ok, note);
  });

  sink.section("interchange decompositions", [&] {
    const int bound = std::min(cfg.max_rank, 4);
    bool ok = true;
    int found = 0;
    std::string note;
    for (int n = 1; n <= bound && ok; ++n) {
      for (Family f : {Family::B, Family::C, Family::D}) {
        for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n}, cfg.gap_rule)) {
          const auto r1 = diagram_rows(p.first);
          const auto r2 = diagram_rows(p.second);
          for (int i = 1; i <= static_cast<int>(r1.size()) && ok; ++i) {
            for (int j = 1; j <= static_cast<int>(r2.size()) && ok; ++j) {
              auto direct = interchange_blocks(p, {i}, {j});
              if (!direct || !symbols_equal(pair_symbol(p), pair_symbol(*direct))) continue;
              ++found;
              if (!decompose_interchange(p, {i}, {j})) {
                ok = false;
                note = "single-row interchange on (" + to_string(p.first) + ", " +
                       to_string(p.second) + ")";
              }
            }
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
    }
    sink.check("interchanges decompose into fundamental moves (" + std::to_string(found) +
                   " instances)",
               ok, note);
  });

  sink.section("catalog determinism", [&] {
    const std::string once = catalog_jsonl(Family::B, std::min(cfg.max_rank, 4), rule);
    const std::string twice = catalog_jsonl(Family::B, std::min(cfg.max_rank, 4), rule);
    sink.check("catalog generation is deterministic", once == twice);
  });

  SelftestResult out;
  out.pass = sink.pass;
  out.report = sink.report.str();
  out.first_failure = sink.first_failure;
  return out;
}

}  // namespace symfin
