#pragma once

#include <string>
#include <vector>

#include "theory.hpp"

namespace symfin {

// Two rows of non-negative entries, weakly increasing left to right. Equality
// is padding-insensitive: rows are right-aligned and missing entries read 0.
struct Symbol {
  std::vector<long long> top;
  std::vector<long long> bottom;
  bool operator==(const Symbol&) const = default;
};

Symbol symbol_b(const Partition& p);
Symbol symbol_c(const Partition& p);
Symbol symbol_d(const Partition& p);

// Dispatch on the component construction; the empty partition gives the
// empty symbol.
Symbol component_symbol(const Partition& p, Family component_family);

// Row-by-row construction: each diagram row contributes a run of ones at the
// right end of one symbol row. Must agree with the per-family definition.
Symbol symbol_via_rows(const Partition& p, Family component_family);

// Right-align both rows, pad with leading zeros, add entrywise.
Symbol add_symbols(const Symbol& a, const Symbol& b);

bool symbols_equal(const Symbol& a, const Symbol& b);

// Leading zeros stripped from both rows; suitable as a map key.
Symbol canonical_symbol(const Symbol& s);

Symbol pair_symbol(const RigidPair& p);

std::string symbol_pretty(const Symbol& s);  // interleaved two-row rendering

}  // namespace symfin
