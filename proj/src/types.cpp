#include "tnpm/types.hpp"

namespace tnpm {

void Assignment::validate(bool allow_empty) const {
  if (c.empty() || z.empty()) throw std::invalid_argument("assignment: empty node set");
  if (k_count < 1 || l_count < 1) throw std::invalid_argument("assignment: cluster counts must be >= 1");
  std::vector<char> row_used(static_cast<std::size_t>(k_count), 0);
  std::vector<char> col_used(static_cast<std::size_t>(l_count), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] >= k_count) {
      throw std::invalid_argument("assignment: row label out of range at node " + std::to_string(i));
    }
    row_used[static_cast<std::size_t>(c[i])] = 1;
  }
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (z[j] < 0 || z[j] >= l_count) {
      throw std::invalid_argument("assignment: column label out of range at node " + std::to_string(j));
    }
    col_used[static_cast<std::size_t>(z[j])] = 1;
  }
  if (!allow_empty) {
    for (int k = 0; k < k_count; ++k) {
      if (!row_used[static_cast<std::size_t>(k)]) {
        throw std::invalid_argument("assignment: empty row cluster " + std::to_string(k));
      }
    }
    for (int l = 0; l < l_count; ++l) {
      if (!col_used[static_cast<std::size_t>(l)]) {
        throw std::invalid_argument("assignment: empty column cluster " + std::to_string(l));
      }
    }
  }
}

}  // namespace tnpm
