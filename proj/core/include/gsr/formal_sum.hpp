#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gsr {

/// Which operator semiring a formal sum (or an action) belongs to.
enum class Side { left, right };

/// A nonempty multiset of generator pairs: (s, gamma) terms on the left
/// side, (gamma, s) terms on the right side. Terms are kept sorted so two
/// equal multisets compare equal.
struct FormalSum {
  Side side = Side::left;
  std::vector<std::pair<int, int>> terms;

  friend bool operator==(const FormalSum&, const FormalSum&) = default;
};

/// Sorts the terms and rejects empty multisets.
FormalSum make_formal_sum(Side side, std::vector<std::pair<int, int>> terms);

/// "[1,0]+[1,1]" — pairs in sorted order, joined by '+'.
std::string format_formal_sum(const FormalSum& sum);

}  // namespace gsr
