#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace symfin {

// Thrown on malformed user input (bad partitions, bad pair records).
class invalid_input : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an internal consistency check fails (a bug, never user error).
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Weakly decreasing sequence of positive integers. The empty partition is a
// valid value. Indexing is 1-based everywhere; parts past the end read as 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int part_at(int i) const {
    if (i < 1) throw internal_error("part_at: index must be >= 1");
    return i <= static_cast<int>(parts_.size()) ? parts_[i - 1] : 0;
  }
  int length() const { return static_cast<int>(parts_.size()); }
  long long total() const { return total_; }
  bool empty() const { return parts_.empty(); }
  int multiplicity(int m) const;
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  long long total_ = 0;
};

// Lexicographic order on part sequences, larger sequence first.
bool lex_greater(const Partition& a, const Partition& b);

Partition add(const Partition& a, const Partition& b);
Partition transpose(const Partition& p);

enum class GapRule { VirtualZero, InteriorOnly };

// lambda_i - lambda_{i+1} <= 1 for all i. Under VirtualZero the sequence is
// closed with a trailing 0, so the last part must be 1.
bool has_no_gaps(const Partition& p, GapRule rule = GapRule::VirtualZero);

std::string to_string(const Partition& p);

}  // namespace symfin
