#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "symbol.hpp"
#include "theory.hpp"

namespace symfin {

// Candidate definitions of the sign p_lambda(i). The shipped default is
// elected by calibrate(): exactly one candidate reproduces the worked mu
// tables and matches the block construction on every enumerated pair.
enum class SignRule { A, B, C };

char sign_rule_letter(SignRule r);
std::optional<SignRule> sign_rule_from_letter(char c);

// p_lambda(i) for the candidate; i is 1-based.
int sign_value(SignRule r, const Partition& lambda, int i);

enum class MuMethod { Formula, Blocks };

struct IndexEntry {
  int lambda = 0;
  int mu = 0;
  bool cond_i = false;
  bool cond_ii = false;
  bool cond_iii = false;
};

// Audit record for one diagram row under the block construction.
struct RowsEntry {
  int length = 0;
  int source = 0;    // 1 = lambda', 2 = lambda''
  int action = 0;    // -1 box deleted, +1 box appended, 0 unchanged
  int unit = -1;     // pairwise unit index, -1 for the lone trailing row
  char role = '?';   // 'f' first (shorter), 's' second (longer), 'l' lone
  const char* block = "";  // template label: II, IIx, III, Bd, I
};

struct MuTrace {
  Partition lambda;
  std::vector<IndexEntry> idx;   // one entry per part of lambda; mu may be 0
  std::vector<RowsEntry> rows;   // filled by the blocks method only
  MuMethod method = MuMethod::Formula;
  SignRule rule = SignRule::B;
  bool flags_filled = false;

  Partition mu_partition() const;        // nonzero mu values
  std::vector<int> mu_vector() const;    // per-index values, zeros kept
};

// Eq-style route: walks the parts of lambda and applies the odd-part
// boundary rule under the given sign candidate.
MuTrace mu_formula(const Partition& lambda, SignRule rule);

// Block route: merges the provenance-tagged diagram rows of the pair,
// pairs them (1,2),(3,4),... from the longest, and applies the operator
// table (host pairs swap a box end-to-end when the boxes below form an odd
// count; boundary rows move one box one-sidedly; the lone trailing odd row
// drops its last box). Throws internal_error("undecomposable...") if a row
// pattern violates the template contracts.
MuTrace mu_blocks(const RigidPair& pair);

// cond_i: mu_i != lambda_i. cond_ii: prefix sums differ at i.
// cond_iii: lambda'_i odd for B/D theories, even (including 0) for C.
void fill_condition_flags(MuTrace& trace, const RigidPair& pair);

// -1 iff some index with mu_i == m has a raised condition; m even, >= 2.
int tau(const MuTrace& trace, long long m, bool use_cond_ii = true);

struct Fingerprint {
  Partition alpha;
  Partition beta;
  bool operator==(const Fingerprint&) const = default;
};

// Pairs equal tau=+1 parts into alpha, sends each tau=-1 part 2b to beta as
// b. In the B theory a single leftover odd part joins alpha once; any other
// unpairable part throws. Box accounting is asserted exactly.
Fingerprint assemble(const MuTrace& trace, const RigidPair& pair, bool use_cond_ii = true);

Fingerprint pair_fingerprint(const RigidPair& pair, MuMethod method);
Fingerprint pair_fingerprint(const RigidPair& pair, MuMethod method, SignRule rule,
                             bool use_cond_ii = true);

// Restriction of the assembly to the parts at indices [begin, end] (1-based,
// inclusive); tau stays global. Used by the worked-table fixtures.
Fingerprint window_fingerprint(const MuTrace& trace, int begin, int end);

std::string trace_csv(const MuTrace& trace);
std::string trace_pretty(const MuTrace& trace);

// A worked-table instance: a pair plus the 1-based window of interest.
struct TableInstance {
  RigidPair pair;
  int begin = 0;
  int end = 0;
};

// Minimal enumerated instance whose mu/flag rows reproduce the fixed-run
// table (an even-length interior run of one odd value left unchanged) under
// the rule. Searches B then D theories, ranks ascending.
std::optional<TableInstance> find_see1_instance(SignRule rule, int max_rank);

// Minimal instance reproducing the 5,4,...,4,3 -> 4,...,4 table: condition
// (i) fires exactly at the window ends, (ii) on all but the last column, and
// tau(4) = -1.
std::optional<TableInstance> find_seo2_instance(SignRule rule, int max_rank);

// Image-side table: an all-4 window where only condition (iii) fires.
std::optional<TableInstance> find_seo2_image_instance(SignRule rule, int max_rank);

struct CalibrationReport {
  SignRule elected = SignRule::B;
  std::array<bool, 3> see1_ok{};    // indexed by SignRule
  std::array<bool, 3> seo2_ok{};
  std::array<bool, 3> agree_ok{};   // mu_formula == mu_blocks on all pairs
  std::array<std::string, 3> disagreement_note{};
  int max_rank = 0;
  int fixture_rank_bound = 0;
  TableInstance see1, seo2;         // minimal instances for the elected rule
};

// Runs the election at the given rank bound; memoized per bound. Throws
// internal_error unless exactly one candidate survives.
const CalibrationReport& calibrate(int max_rank = 6);

SignRule elected_sign_rule();

Fingerprint pair_fingerprint(const RigidPair& pair);  // formula, elected rule

}  // namespace symfin
