#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partition.hpp"

namespace symfin {

enum class Family { B, C, D };

char family_letter(Family f);
std::optional<Family> family_from_letter(char c);

struct TheoryKind {
  Family family = Family::B;
  int rank = 1;
  long long total() const { return family == Family::B ? 2LL * rank + 1 : 2LL * rank; }
  bool operator==(const TheoryKind&) const = default;
};

// Parity-multiplicity rule only; total-size parity is the TheoryKind's business.
// B/D: every even part has even multiplicity. C: every odd part has even one.
bool is_theory_partition(const Partition& p, Family f);

// No gaps plus the forbidden exact-multiplicity-2 rule (odd parts for B/D,
// even parts for C). All-ones partitions are rigid in every family; this
// covers [1,1], which the multiplicity rule alone would reject in D.
bool is_rigid(const Partition& p, Family f, GapRule rule = GapRule::VirtualZero);

// All partitions of `total`, lexicographically decreasing.
std::vector<Partition> enumerate_partitions(long long total);

// All rigid partitions of `total` for the family, lexicographically decreasing.
std::vector<Partition> enumerate_rigid(long long total, Family f,
                                       GapRule rule = GapRule::VirtualZero);

// Ordered pair of rigid partitions labelling one operator.
struct RigidPair {
  Partition first;   // lambda'
  Partition second;  // lambda''
  TheoryKind theory;
  bool operator==(const RigidPair&) const = default;
};

// Which construction a component of the given total uses inside a theory:
// B pairs mix an odd-total B component with an even-total D one.
Family component_family(Family theory_family, long long component_total);

// Throws invalid_input naming the violated rule.
void validate_pair(const RigidPair& p, GapRule rule = GapRule::VirtualZero);

// All valid ordered pairs for the theory, deterministic order:
// first-component total ascending, then lex-decreasing components.
std::vector<RigidPair> enumerate_rigid_pairs(const TheoryKind& kind,
                                             GapRule rule = GapRule::VirtualZero);

enum class Orientation { Rows, Columns };

struct StructureReport {
  bool first_rows_ok = false;  // longest-row parity clause (pair clause for C)
  bool pairwise_ok = false;    // the continuing pairwise parity pattern
  bool shortest_ok = false;    // row-count parity vs shortest-row parity clause
  bool pass() const { return first_rows_ok && pairwise_ok && shortest_ok; }
};

// Evaluates the structural clauses on the partition's rows (Rows) or on the
// rows of its transpose (Columns).
StructureReport structure_report(const Partition& p, Family f, Orientation o);

// Row lengths of the diagram picture used by the block and move machinery:
// the parts of the transpose, longest first.
std::vector<int> diagram_rows(const Partition& p);
Partition from_diagram_rows(std::vector<int> rows);  // rows in any order

// Pairwise-row units of one component's diagram. B/D components leave the
// first (longest) row unpaired and pair rows (2,3), (4,5), ...; C components
// pair (1,2), (3,4), ... A trailing row without a partner is unpaired.
// Returned as 0-based index pairs (upper=longer, lower=shorter).
struct RowUnit {
  int upper = -1;
  int lower = -1;  // -1 when the unit is a lone row
  bool paired() const { return lower >= 0; }
};
std::vector<RowUnit> pairwise_units(const std::vector<int>& rows, Family component_family);

}  // namespace symfin
