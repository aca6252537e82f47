#include "partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace symfin {

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0)
      throw invalid_input("partition part " + std::to_string(i + 1) + " is negative");
    if (parts[i] == 0)
      throw invalid_input("partition has an interior zero at position " + std::to_string(i + 1));
    if (i + 1 < parts.size() && parts[i] < parts[i + 1])
      throw invalid_input("partition not weakly decreasing at position " + std::to_string(i + 2));
  }
  parts_ = std::move(parts);
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::multiplicity(int m) const {
  if (m < 1) throw internal_error("multiplicity: value must be >= 1");
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), m));
}

bool lex_greater(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

Partition add(const Partition& a, const Partition& b) {
  const int n = std::max(a.length(), b.length());
  std::vector<int> parts(n);
  for (int i = 1; i <= n; ++i) parts[i - 1] = a.part_at(i) + b.part_at(i);
  return Partition(std::move(parts));
}

Partition transpose(const Partition& p) {
  std::vector<int> cols(p.largest());
  for (int j = 1; j <= p.largest(); ++j) {
    int count = 0;
    for (int part : p.parts())
      if (part >= j) ++count;
    cols[j - 1] = count;
  }
  return Partition(std::move(cols));
}

bool has_no_gaps(const Partition& p, GapRule rule) {
  const int l = p.length();
  for (int i = 1; i < l; ++i)
    if (p.part_at(i) - p.part_at(i + 1) > 1) return false;
  if (rule == GapRule::VirtualZero && l > 0 && p.part_at(l) > 1) return false;
  return true;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < p.length(); ++i) {
    if (i) os << ',';
    os << p.parts()[i];
  }
  os << ']';
  return os.str();
}

}  // namespace symfin
