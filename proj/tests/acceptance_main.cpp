// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "lab.hpp"

using namespace symfin;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
  std::cout << "CRITERION " << number << ": " << (pass ? "PASS" : "FAIL") << " - " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++failures;
}

template <typename Fn>
void for_pairs(int max_rank, Fn&& fn) {
  for (int n = 1; n <= max_rank; ++n)
    for (Family f : {Family::B, Family::C, Family::D})
      for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n})) fn(p);
}

}  // namespace

int main() {
  const auto started = std::chrono::steady_clock::now();

  // 1. The displayed two-symbol addition, bit exact.
  {
    const Symbol a{{0, 0, 0, 0, 0, 1, 1}, {1, 1, 1, 1, 1, 2}};
    const Symbol b{{0, 0, 0, 1, 1, 1}, {1, 1, 1, 1, 1}};
    const Symbol want{{0, 0, 0, 0, 1, 2, 2}, {1, 2, 2, 2, 2, 3}};
    report(1, "symbol addition fixture", add_symbols(a, b) == want);
  }

  // 2. Row construction vs per-family definition on every rigid partition
  //    with total <= 17.
  {
    bool ok = true;
    std::string note;
    for (int t = 1; t <= 17 && ok; ++t)
      for (Family f : {Family::B, Family::C, Family::D}) {
        if ((f == Family::B) != (t % 2 == 1)) continue;
        for (const auto& p : enumerate_rigid(t, f))
          if (!symbols_equal(component_symbol(p, f), symbol_via_rows(p, f))) {
            ok = false;
            note = to_string(p);
            break;
          }
        if (!ok) break;
      }
    report(2, "dual symbol construction oracle, totals <= 17", ok, note);
  }

  // 3. Sign-rule calibration: exactly one candidate reproduces both worked
  //    tables and matches the block route on every pair at rank <= 6.
  {
    bool ok = true;
    std::string detail;
    try {
      const CalibrationReport& cal = calibrate(6);
      int survivors = 0;
      for (int k = 0; k < 3; ++k)
        if (cal.see1_ok[k] && cal.seo2_ok[k] && cal.agree_ok[k]) ++survivors;
      ok = survivors == 1 && cal.elected == SignRule::B;
      std::ostringstream os;
      os << "elected sign rule '" << sign_rule_letter(cal.elected) << "'; fixed-run table at "
         << family_letter(cal.see1.pair.theory.family) << "_" << cal.see1.pair.theory.rank
         << ", descending table at " << family_letter(cal.seo2.pair.theory.family) << "_"
         << cal.seo2.pair.theory.rank;
      detail = os.str();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    report(3, "mu sign-rule calibration elects exactly one candidate", ok, detail);
  }

  // 4. Worked-table window fingerprints.
  {
    bool ok = true;
    std::string note;
    auto see1 = find_see1_instance(SignRule::B, 10);
    auto seo2 = find_seo2_instance(SignRule::B, 10);
    if (!see1 || !seo2) {
      ok = false;
      note = "fixture instances not found";
    } else {
      {
        MuTrace t = mu_formula(add(see1->pair.first, see1->pair.second), SignRule::B);
        fill_condition_flags(t, see1->pair);
        const int v = add(see1->pair.first, see1->pair.second).part_at(see1->begin);
        const int k = (see1->end - see1->begin + 1) / 2;
        const Fingerprint w = window_fingerprint(t, see1->begin, see1->end);
        if (!(w.beta == Partition() && w.alpha == Partition(std::vector<int>(k, v)))) {
          ok = false;
          note = "fixed-run window fingerprint";
        }
      }
      {
        MuTrace t = mu_formula(add(seo2->pair.first, seo2->pair.second), SignRule::B);
        fill_condition_flags(t, seo2->pair);
        const int count = seo2->end - seo2->begin + 1;
        const Fingerprint w = window_fingerprint(t, seo2->begin, seo2->end);
        if (!(count % 2 == 1 && w.alpha == Partition() &&
              w.beta == Partition(std::vector<int>(count, 2)))) {
          ok = false;
          note = "descending window fingerprint";
        }
      }
    }
    report(4, "worked-table window fingerprints match the stated patterns", ok, note);
  }

  // 5. Headline: equal symbols imply equal fingerprints, rank <= 6, all
  //    three families, zero violations.
  {
    bool ok = true;
    std::ostringstream detail;
    for (Family f : {Family::B, Family::C, Family::D}) {
      const ForwardReport rep = verify_forward(f, 6, SignRule::B);
      detail << family_letter(f) << ":" << rep.pairs << " pairs/" << rep.classes
             << " classes ";
      if (rep.violations != 0) ok = false;
    }
    report(5, "equal symbols imply equal fingerprints at rank <= 6", ok, detail.str());
  }

  // 6. Every applicable one-each-way and two-rows-at-once move at rank <= 5
  //    preserves both invariants and lands on a valid pair.
  {
    bool ok = true;
    long s_moves = 0, d_moves = 0;
    std::string note;
    for_pairs(5, [&](const RigidPair& p) {
      for (const auto& m : enumerate_s_moves(p)) {
        ++s_moves;
        bool valid = true;
        try {
          validate_pair(m.result);
        } catch (const invalid_input&) {
          valid = false;
        }
        if (!m.symbol_preserved || !m.fingerprint_preserved || !valid) {
          ok = false;
          note = m.desc.label();
        }
      }
      for (const auto& m : enumerate_d_moves(p)) {
        ++d_moves;
        bool valid = true;
        try {
          validate_pair(m.result);
        } catch (const invalid_input&) {
          valid = false;
        }
        if (!m.symbol_preserved || !m.fingerprint_preserved || !valid) {
          ok = false;
          note = m.desc.label();
        }
      }
    });
    std::ostringstream os;
    os << s_moves << " one-each-way, " << d_moves << " two-at-once";
    if (!note.empty()) os << "; first failure " << note;
    report(6, "moves preserve symbol, fingerprint and rigidity at rank <= 5", ok, os.str());
  }

  // 7. Named-example involutions; the box-trading variant keeps the total.
  {
    bool ok = true;
    std::string note;
    long checked = 0;
    for_pairs(5, [&](const RigidPair& p) {
      for (MoveKind k : {MoveKind::See1, MoveKind::See2, MoveKind::Se2, MoveKind::Ie2}) {
        for (const auto& m : enumerate_named_moves(p, k)) {
          ++checked;
          bool returned = false;
          for (const auto& back : enumerate_named_moves(m.result, k))
            if (back.result == p) returned = true;
          if (!returned) {
            ok = false;
            note = move_kind_name(k) + " not involutive";
          }
        }
      }
      for (const auto& m : enumerate_named_moves(p, MoveKind::Seo2)) {
        ++checked;
        if (m.result.first.total() + m.result.second.total() != p.theory.total()) {
          ok = false;
          note = "box-trading swap changed the total";
        }
      }
    });
    report(7, "named example moves: involutions and totals", ok,
           std::to_string(checked) + " applications");
  }

  // 8. Property suites.
  {
    bool ok = true;
    std::ostringstream detail;
    std::string note;

    // Condition (ii) subsumption and its removal, gap-free sums.
    bool subsume = true, appd = true;
    for_pairs(6, [&](const RigidPair& p) {
      MuTrace t = mu_formula(add(p.first, p.second), SignRule::B);
      fill_condition_flags(t, p);
      if (!has_no_gaps(t.lambda, GapRule::InteriorOnly)) return;
      for (const auto& e : t.idx) {
        if (e.mu < 2 || e.mu % 2 != 0 || !e.cond_ii) continue;
        bool covered = false;
        for (const auto& x : t.idx)
          if (x.mu == e.mu && x.cond_i) covered = true;
        if (!covered) subsume = false;
      }
      if (!(assemble(t, p, true) == assemble(t, p, false))) appd = false;
    });
    if (!subsume || !appd) {
      ok = false;
      note = "condition (ii) checks";
    }
    detail << "cond-ii subsumed=" << (subsume ? "yes" : "NO")
           << " removable=" << (appd ? "yes" : "NO");

    // Structural propositions in exactly one orientation, uniformly.
    bool cols_uniform = true, rows_uniform = true;
    for (int t = 1; t <= 17; ++t)
      for (Family f : {Family::B, Family::C, Family::D}) {
        if ((f == Family::B) != (t % 2 == 1)) continue;
        for (const auto& p : enumerate_rigid(t, f)) {
          if (!structure_report(p, f, Orientation::Columns).pass()) cols_uniform = false;
          if (!structure_report(p, f, Orientation::Rows).pass()) rows_uniform = false;
        }
      }
    if (!(cols_uniform && !rows_uniform)) {
      ok = false;
      note = "orientation adjudication";
    }
    detail << "; orientation=columns";

    // Splitting compositions at rank <= 5 (both orders).
    long split_admissible = 0;
    bool split_ok = true;
    for_pairs(5, [&](const RigidPair& p) {
      for (const auto& inst : verify_splitting(p))
        if (inst.admissible) {
          ++split_admissible;
          if (!inst.ok) split_ok = false;
        }
    });
    if (!split_ok) {
      ok = false;
      note = "splitting";
    }
    detail << "; splitting instances=" << split_admissible;

    // Interchange decompositions on admissible instances.
    long ic_checked = 0;
    bool ic_ok = true;
    for_pairs(4, [&](const RigidPair& p) {
      const auto r1 = diagram_rows(p.first);
      const auto r2 = diagram_rows(p.second);
      for (int i = 1; i <= static_cast<int>(r1.size()); ++i)
        for (int j = 1; j <= static_cast<int>(r2.size()); ++j) {
          auto direct = interchange_blocks(p, {i}, {j});
          if (!direct || !symbols_equal(pair_symbol(p), pair_symbol(*direct))) continue;
          auto steps = decompose_interchange_outcomes(p, {i}, {j});
          if (!steps) {
            ic_ok = false;
            continue;
          }
          const RigidPair end = steps->empty() ? p : steps->back().result;
          if (!(end == *direct)) ic_ok = false;
          ++ic_checked;
        }
    });
    if (!ic_ok) {
      ok = false;
      note = "interchange decomposition";
    }
    detail << "; interchanges=" << ic_checked;

    report(8, "property suites", ok, detail.str() + (note.empty() ? "" : "; failed " + note));
  }

  // 9. Byte-identical catalogs across two runs.
  {
    bool ok = true;
    for (Family f : {Family::B, Family::C, Family::D}) {
      const std::string once = catalog_jsonl(f, 6, SignRule::B);
      const std::string twice = catalog_jsonl(f, 6, SignRule::B);
      if (once != twice || once.empty()) ok = false;
    }
    report(9, "catalog generation is byte-identical across runs", ok);
  }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (" << seconds
            << "s)" << std::endl;
  return failures == 0 ? 0 : 1;
}
