#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "moves.hpp"

using namespace symfin;

namespace {

template <typename Fn>
void for_pairs(int max_rank, Fn&& fn) {
  for (int n = 1; n <= max_rank; ++n)
    for (Family f : {Family::B, Family::C, Family::D})
      for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n})) fn(p);
}

}  // namespace

TEST_CASE("descriptor labels") {
  MoveDescriptor s;
  s.kind = MoveKind::SType;
  s.parity = 'o';
  s.pos = {1, 1, 2, 1};
  CHECK(s.label() == "So1121");
  MoveDescriptor d;
  d.kind = MoveKind::DType;
  d.parity = 'e';
  d.d_source = 2;
  d.d_target = 4;
  CHECK(d.label() == "De24");
  MoveDescriptor named;
  named.kind = MoveKind::Seo2;
  CHECK(named.label() == "Seo2");
}

TEST_CASE("descriptor space sizes") {
  // 1 parity bit and 4 position bits; 5 source and 5 target block shapes
  // with a parity bit.
  std::set<std::string> s_labels, d_labels;
  for (char par : {'o', 'e'})
    for (int a : {1, 2})
      for (int b : {1, 2})
        for (int c : {1, 2})
          for (int d : {1, 2}) {
            MoveDescriptor m;
            m.kind = MoveKind::SType;
            m.parity = par;
            m.pos = {a, b, c, d};
            s_labels.insert(m.label());
          }
  for (char par : {'o', 'e'})
    for (int s = 1; s <= 5; ++s)
      for (int t = 1; t <= 5; ++t) {
        MoveDescriptor m;
        m.kind = MoveKind::DType;
        m.parity = par;
        m.d_source = s;
        m.d_target = t;
        d_labels.insert(m.label());
      }
  CHECK(s_labels.size() == 32);
  CHECK(d_labels.size() == 50);
}

TEST_CASE("every emitted move preserves both invariants and validity") {
  for_pairs(5, [](const RigidPair& p) {
    for (const auto& m : all_move_edges(p)) {
      CHECK(m.symbol_preserved);
      CHECK(m.fingerprint_preserved);
      CHECK_NOTHROW(validate_pair(m.result));
    }
  });
}

TEST_CASE("classified one-each-way moves exist and stay inside the label space") {
  std::set<std::string> seen;
  long classified = 0;
  for (int n = 7; n <= 9; ++n)
    for (Family f : {Family::B, Family::C, Family::D})
      for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n}))
        for (const auto& m : enumerate_s_moves(p))
          if (is_classified_s(m.desc)) {
            ++classified;
            seen.insert(m.desc.label());
            CHECK(m.symbol_preserved);
            CHECK(m.fingerprint_preserved);
            CHECK((m.desc.parity == 'o' || m.desc.parity == 'e'));
            for (int d : m.desc.pos) CHECK((d == 1 || d == 2));
          }
  CHECK(classified > 0);
  CHECK(seen.size() <= 32);
}

TEST_CASE("two-rows-at-once moves carry the five-by-five block taxonomy") {
  std::set<std::string> src, tgt;
  long classified = 0;
  for (int n = 1; n <= 9; ++n)
    for (Family f : {Family::B, Family::C, Family::D})
      for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n}))
        for (const auto& m : enumerate_d_moves(p)) {
          CHECK(m.symbol_preserved);
          CHECK(m.fingerprint_preserved);
          if (!is_classified_d(m.desc)) continue;
          ++classified;
          src.insert(d_source_signature(m));
          tgt.insert(d_target_signature(m));
          CHECK(m.desc.d_source >= 1);
          CHECK(m.desc.d_source <= 5);
          CHECK(m.desc.d_target >= 1);
          CHECK(m.desc.d_target <= 5);
        }
  CHECK(classified > 0);
  CHECK(src.size() <= 5);
  CHECK(tgt.size() <= 5);
}

TEST_CASE("the sweep realizes exactly five source and five target block shapes") {
  std::set<std::string> src, tgt;
  for (int n = 1; n <= 12; ++n)
    for (Family f : {Family::B, Family::C, Family::D})
      for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n}))
        for (const auto& m : enumerate_d_moves(p))
          if (m.desc.parity != 'x') {
            src.insert(d_source_signature(m));
            tgt.insert(d_target_signature(m));
          }
  CHECK(src.size() == 5);
  CHECK(tgt.size() == 5);
}

TEST_CASE("named example moves are involutive") {
  auto check_pair = [](const RigidPair& p) {
    for (MoveKind k : {MoveKind::See1, MoveKind::See2, MoveKind::Se2, MoveKind::Ie2}) {
      for (const auto& m : enumerate_named_moves(p, k)) {
        CHECK(m.symbol_preserved);
        CHECK(m.fingerprint_preserved);
        bool returned = false;
        for (const auto& back : enumerate_named_moves(m.result, k))
          if (back.result == p) returned = true;
        CHECK(returned);
      }
    }
  };
  for_pairs(5, check_pair);
  // The even-unit swaps need larger components; cover the ranks where the
  // first sites appear.
  long even_swaps = 0;
  for (int n = 11; n <= 13; ++n)
    for (Family f : {Family::B, Family::C, Family::D})
      for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n})) {
        check_pair(p);
        even_swaps += enumerate_named_moves(p, MoveKind::See1).size() +
                      enumerate_named_moves(p, MoveKind::See2).size();
      }
  CHECK(even_swaps > 0);
}

TEST_CASE("box-trading swap keeps the total and moves the expected boxes") {
  long found = 0;
  for (int n = 1; n <= 8; ++n)
    for (Family f : {Family::B, Family::C, Family::D})
      for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n}))
        for (const auto& m : enumerate_named_moves(p, MoveKind::Seo2)) {
          ++found;
          CHECK(m.result.first.total() + m.result.second.total() == p.theory.total());
          CHECK(m.site.delta_first == +1);
          CHECK(m.site.delta_second == -1);
          CHECK(m.symbol_preserved);
          CHECK(m.fingerprint_preserved);
        }
  CHECK(found > 0);
}

TEST_CASE("named moves reject mismatched sites") {
  RigidPair p{Partition({1, 1, 1}), Partition(), TheoryKind{Family::B, 1}};
  CHECK_FALSE(apply_named_example(p, MoveKind::See1, 0, 0).has_value());
  CHECK_FALSE(apply_named_example(p, MoveKind::Seo2, 3, 7).has_value());
}

TEST_CASE("extreme insertions are rare and preserve the symbol when they apply") {
  long found = 0;
  for (int n = 1; n <= 8; ++n)
    for (Family f : {Family::B, Family::C, Family::D})
      for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n}))
        for (MoveKind k : {MoveKind::TE, MoveKind::TO})
          for (const auto& m : enumerate_te_to(p, k)) {
            ++found;
            CHECK(m.symbol_preserved);
            CHECK_NOTHROW(validate_pair(m.result));
          }
  // The structural constraints are severe; report whatever the search found.
  MESSAGE("extreme insertions found: ", found);
}

TEST_CASE("splitting compositions agree in both orders") {
  long admissible = 0;
  for (int n = 1; n <= 9; ++n)
    for (Family f : {Family::B, Family::C, Family::D})
      for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n}))
        for (const auto& inst : verify_splitting(p))
          if (inst.admissible) {
            ++admissible;
            CHECK(inst.ok);
          }
  CHECK(admissible > 0);
}

TEST_CASE("interchanges decompose into fundamental moves") {
  // Identity interchange: empty sequence.
  RigidPair p{Partition({2, 2, 1}), Partition({2, 2, 1, 1, 1, 1}), TheoryKind{Family::B, 6}};
  const auto r1 = diagram_rows(p.first);
  const auto r2 = diagram_rows(p.second);
  bool found_identity = false;
  for (int i = 1; i <= static_cast<int>(r1.size()); ++i)
    for (int j = 1; j <= static_cast<int>(r2.size()); ++j)
      if (r1[i - 1] == r2[j - 1]) {
        auto seq = decompose_interchange(p, {i}, {j});
        REQUIRE(seq.has_value());
        CHECK(seq->empty());
        found_identity = true;
      }
  CHECK(found_identity);

  // Single-row interchanges decompose whenever the direct swap is a move.
  long ok = 0;
  for_pairs(5, [&](const RigidPair& q) {
    const auto a = diagram_rows(q.first);
    const auto b = diagram_rows(q.second);
    for (int i = 1; i <= static_cast<int>(a.size()); ++i)
      for (int j = 1; j <= static_cast<int>(b.size()); ++j) {
        auto direct = interchange_blocks(q, {i}, {j});
        if (!direct || !symbols_equal(pair_symbol(q), pair_symbol(*direct))) continue;
        auto steps = decompose_interchange_outcomes(q, {i}, {j});
        REQUIRE(steps.has_value());
        const RigidPair end = steps->empty() ? q : steps->back().result;
        CHECK(end == *direct);
        ++ok;
      }
  });
  CHECK(ok > 0);
}

TEST_CASE("two-row interchanges follow the two-transfer recipe when it applies") {
  long recipe_rechecked = 0;
  for (int n = 1; n <= 7; ++n)
    for (Family f : {Family::B, Family::C, Family::D})
      for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, n})) {
        const auto r1 = diagram_rows(p.first);
        const auto r2 = diagram_rows(p.second);
        for (int i1 = 1; i1 <= static_cast<int>(r1.size()); ++i1)
          for (int i2 = i1 + 1; i2 <= static_cast<int>(r1.size()); ++i2)
            for (int j1 = 1; j1 <= static_cast<int>(r2.size()); ++j1)
              for (int j2 = j1 + 1; j2 <= static_cast<int>(r2.size()); ++j2) {
                auto direct = interchange_blocks(p, {i1, i2}, {j1, j2});
                if (!direct || !symbols_equal(pair_symbol(p), pair_symbol(*direct)))
                  continue;
                if (*direct == p) continue;
                // Step 1: pull the target block over; step 2: push ours back.
                auto mid = transfer_rows(p, false, {j1, j2});
                if (!mid || !symbols_equal(pair_symbol(p), pair_symbol(*mid))) continue;
                const auto mrows = diagram_rows(mid->first);
                std::vector<int> push;
                for (int take : {r1[i1 - 1], r1[i2 - 1]})
                  for (int k = 1; k <= static_cast<int>(mrows.size()); ++k)
                    if (mrows[k - 1] == take &&
                        (push.empty() || push.back() != k)) {
                      push.push_back(k);
                      break;
                    }
                if (push.size() != 2) continue;
                auto fin = transfer_rows(*mid, true, push);
                if (!fin || !symbols_equal(pair_symbol(p), pair_symbol(*fin))) continue;
                if (!(*fin == *direct)) continue;
                ++recipe_rechecked;
                auto seq = decompose_interchange(p, {i1, i2}, {j1, j2});
                REQUIRE(seq.has_value());
                CHECK(seq->size() <= 2);
              }
      }
  CHECK(recipe_rechecked > 0);
}

TEST_CASE("generic surgeries reject bad indices") {
  RigidPair p{Partition({2, 2, 1}), Partition(), TheoryKind{Family::B, 2}};
  CHECK_FALSE(swap_rows(p, 9, 0, 1, 0).has_value());
  CHECK_FALSE(transfer_rows(p, false, {1}).has_value());
  CHECK_FALSE(interchange_blocks(p, {1}, {1}).has_value());
}
