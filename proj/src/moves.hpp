#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fingerprint.hpp"
#include "symbol.hpp"
#include "theory.hpp"

namespace symfin {

enum class MoveKind { See1, See2, Se2, Ie2, Seo2, SType, DType, TE, TO, IType };

std::string move_kind_name(MoveKind k);

struct MoveDescriptor {
  MoveKind kind = MoveKind::SType;
  char parity = 'e';         // S/D families: parity of the lambda'-side unit
  std::array<int, 4> pos{};  // S family: the four position digits
  int d_source = 0;          // D family: source block configuration (1-based)
  int d_target = 0;          // D family: target block configuration
  std::string label() const;
  bool operator==(const MoveDescriptor&) const = default;
};

// 1-based diagram-row indices. take_* index the rows that leave a component,
// land_* the rows' positions after arrival, delta_* the box adjustment each
// traveling row picks up.
struct MoveSite {
  std::vector<int> take_first, take_second;
  std::vector<int> land_first, land_second;
  int delta_first = 0, delta_second = 0;
  bool from_first = true;  // direction for one-component moves (D, TE, TO)
};

struct MoveOutcome {
  MoveDescriptor desc;
  MoveSite site;
  RigidPair before;
  RigidPair result;
  bool symbol_preserved = false;
  bool fingerprint_preserved = false;
};

// Generic surgeries. All return nullopt unless both components stay valid
// rigid partitions for the theory; they do not check the symbol.
std::optional<RigidPair> swap_rows(const RigidPair& p, int row_first, int delta_first,
                                   int row_second, int delta_second);
std::optional<RigidPair> transfer_rows(const RigidPair& p, bool from_first,
                                       const std::vector<int>& rows_idx);
std::optional<RigidPair> interchange_blocks(const RigidPair& p,
                                            const std::vector<int>& rows_first_idx,
                                            const std::vector<int>& rows_second_idx);

// Named one-row swaps. See1/See2/Se2/Ie2 swap rows of equal parity without
// box changes (even units, second rows; even, first; odd, second; odd,
// first). Seo2 trades the shorter row of an even lambda'-unit (+1 box)
// against the longer row of an odd lambda''-unit (-1 box). Sites that do not
// match the pattern, break rigidity, or change the symbol yield nullopt.
std::optional<MoveOutcome> apply_named_example(const RigidPair& p, MoveKind which,
                                               int unit_first, int unit_second);
std::vector<MoveOutcome> enumerate_named_moves(const RigidPair& p, MoveKind which);

// The one-row-each-way family; travelers may trade one box (net zero). Only
// moves that keep both components rigid and preserve the pair symbol are
// emitted. A move whose four trade ends all sit in complete pairwise units
// of opposite source parities carries the classified position digits; the
// remaining boundary trades have zero digits.
std::vector<MoveOutcome> enumerate_s_moves(const RigidPair& p);
bool is_classified_s(const MoveDescriptor& d);

// The two-rows-one-way family: two rows of one component move to the other,
// no box changes. Equal-parity movers carry the block-configuration labels.
std::vector<MoveOutcome> enumerate_d_moves(const RigidPair& p);
bool is_classified_d(const MoveDescriptor& d);

// Structural signature of where a moved pair of rows came from / landed;
// used to count the distinct source and target block configurations.
std::string d_source_signature(const MoveOutcome& m);
std::string d_target_signature(const MoveOutcome& m);

// Extreme one-row insertions. Structural preconditions: the moved row is the
// shorter row of an even unit, every source row at most as long is even, the
// source has an even row count and the target an odd one; TE lands the row
// as the shorter row of a unit, TO as the longer.
std::vector<MoveOutcome> enumerate_te_to(const RigidPair& p, MoveKind which);

// Splitting check: rows a,b of lambda' and c,d of lambda'' with
// L(b) > L(d) > L(a) > L(c). A configuration is admissible when both
// two-step compositions consist of applicable single swaps; the check is
// that the two orders agree with each other and with the simultaneous 2+2
// interchange.
struct SplitInstance {
  RigidPair pair;
  int a = 0, b = 0, c = 0, d = 0;  // row indices
  bool admissible = false;
  bool ok = false;
};
std::vector<SplitInstance> verify_splitting(const RigidPair& p);

// All symbol-preserving single-move edges out of a pair (named swaps, S, D).
std::vector<MoveOutcome> all_move_edges(const RigidPair& p);

// Searches for a sequence of fundamental moves whose composition equals the
// direct interchange of the two row blocks. Empty sequence for the identity
// interchange. nullopt when the direct interchange is invalid, changes the
// symbol, or no decomposition exists within the depth bound.
std::optional<std::vector<MoveDescriptor>> decompose_interchange(
    const RigidPair& p, const std::vector<int>& rows_first_idx,
    const std::vector<int>& rows_second_idx, int max_depth = 4);

// Same search, but keeps the full outcomes so the composition can be
// replayed and compared against the direct interchange.
std::optional<std::vector<MoveOutcome>> decompose_interchange_outcomes(
    const RigidPair& p, const std::vector<int>& rows_first_idx,
    const std::vector<int>& rows_second_idx, int max_depth = 4);

}  // namespace symfin
