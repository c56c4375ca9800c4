#include "gsr/formal_sum.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsr {

FormalSum make_formal_sum(Side side, std::vector<std::pair<int, int>> terms) {
  if (terms.empty()) throw std::invalid_argument("formal sum must be nonempty");
  std::sort(terms.begin(), terms.end());
  return FormalSum{side, std::move(terms)};
}

std::string format_formal_sum(const FormalSum& sum) {
  std::string out;
  for (std::size_t i = 0; i < sum.terms.size(); ++i) {
    if (i > 0) out += '+';
    out += '[';
    out += std::to_string(sum.terms[i].first);
    out += ',';
    out += std::to_string(sum.terms[i].second);
    out += ']';
  }
  return out;
}

}  // namespace gsr
