#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symbol.hpp"

using namespace symfin;

namespace {

Symbol sym(std::vector<long long> top, std::vector<long long> bottom) {
  return Symbol{std::move(top), std::move(bottom)};
}

}  // namespace

TEST_CASE("orthogonal-rule symbols") {
  CHECK(symbol_b(Partition({1, 1, 1})) == sym({0, 0}, {1}));
  CHECK(symbol_b(Partition({2, 2, 1})) == sym({0, 0}, {2}));
  CHECK(symbol_b(Partition({3, 2, 2, 1, 1, 1, 1})) == sym({0, 0, 1, 1}, {1, 1, 1}));
  CHECK_THROWS_AS(symbol_b(Partition()), invalid_input);
}

TEST_CASE("symplectic-rule symbols") {
  CHECK(symbol_c(Partition({2, 1, 1})) == sym({1, 1}, {0}));       // odd length
  CHECK(symbol_c(Partition({1, 1, 1, 1})) == sym({0, 0, 0}, {1, 1}));  // even length
  CHECK(symbol_c(Partition({1, 1})) == sym({0, 0}, {1}));
}

TEST_CASE("even-orthogonal-rule symbols") {
  CHECK(symbol_d(Partition({1, 1, 1, 1})) == sym({1, 1}, {0}));
  CHECK(symbol_d(Partition({2, 2, 1, 1})) == sym({1, 1}, {1}));
  CHECK(symbol_d(Partition({1, 1})) == sym({1}, {}));
}

TEST_CASE("row construction equals the definition on rigid partitions") {
  for (int t = 1; t <= 17; ++t)
    for (Family f : {Family::B, Family::C, Family::D}) {
      if ((f == Family::B) != (t % 2 == 1)) continue;
      for (const auto& p : enumerate_rigid(t, f))
        CHECK(symbols_equal(component_symbol(p, f), symbol_via_rows(p, f)));
    }
}

TEST_CASE("symbol rows are weakly increasing") {
  for (int t = 1; t <= 14; ++t)
    for (Family f : {Family::B, Family::C, Family::D}) {
      if ((f == Family::B) != (t % 2 == 1)) continue;
      for (const auto& p : enumerate_rigid(t, f)) {
        const Symbol s = component_symbol(p, f);
        for (size_t i = 1; i < s.top.size(); ++i) CHECK(s.top[i] >= s.top[i - 1]);
        for (size_t i = 1; i < s.bottom.size(); ++i) CHECK(s.bottom[i] >= s.bottom[i - 1]);
      }
    }
}

TEST_CASE("worked addition example") {
  const Symbol a = sym({0, 0, 0, 0, 0, 1, 1}, {1, 1, 1, 1, 1, 2});
  const Symbol b = sym({0, 0, 0, 1, 1, 1}, {1, 1, 1, 1, 1});
  const Symbol want = sym({0, 0, 0, 0, 1, 2, 2}, {1, 2, 2, 2, 2, 3});
  CHECK(add_symbols(a, b) == want);
  CHECK(symbols_equal(add_symbols(a, b), add_symbols(b, a)));
}

TEST_CASE("addition identity and commutativity") {
  const Symbol s = sym({0, 1, 2}, {1, 1});
  const Symbol zero = sym({0, 0, 0}, {0, 0});
  CHECK(symbols_equal(add_symbols(s, zero), s));
  const Symbol u = sym({2, 2}, {0, 3});
  CHECK(add_symbols(s, u) == add_symbols(u, s));
}

TEST_CASE("equality is padding-insensitive") {
  CHECK(symbols_equal(sym({0, 0}, {1}), sym({0, 0, 0}, {0, 1})));
  CHECK_FALSE(symbols_equal(sym({0, 0}, {1}), sym({0, 0}, {2})));
  const Symbol s = sym({1, 2}, {0, 1});
  CHECK(symbols_equal(s, s));
  CHECK(canonical_symbol(sym({0, 0, 1}, {0})) == sym({1}, {}));
}

TEST_CASE("pair symbols") {
  RigidPair unipotent{Partition({1, 1, 1}), Partition(), TheoryKind{Family::B, 1}};
  CHECK(symbols_equal(pair_symbol(unipotent), symbol_b(Partition({1, 1, 1}))));

  RigidPair c2{Partition({1, 1}), Partition({1, 1}), TheoryKind{Family::C, 2}};
  const Symbol each = symbol_c(Partition({1, 1}));
  CHECK(symbols_equal(pair_symbol(c2), add_symbols(each, each)));

  // Swapping the components never changes the sum.
  for (Family f : {Family::B, Family::C, Family::D})
    for (const auto& p : enumerate_rigid_pairs(TheoryKind{f, 4})) {
      RigidPair swapped{p.second, p.first, p.theory};
      CHECK(symbols_equal(pair_symbol(p), pair_symbol(swapped)));
    }
}

TEST_CASE("interleaved rendering smoke") {
  const std::string text = symbol_pretty(sym({0, 0}, {2}));
  CHECK(text.find('0') != std::string::npos);
  CHECK(text.find('2') != std::string::npos);
  CHECK(text.find('\n') != std::string::npos);
}
