#pragma once

#include <string>
#include <vector>

#include "semidual/semilattice.hpp"

namespace semidual::testing {

/// The 7-element non-distributive lattice: 0 < a,b,c < e < 1, c < d < 1.
/// Index order 0,a,b,c,e,d,1 is a linear extension.
inline Semilattice lattice_L() {
  return semilattice_from_covers({"0", "a", "b", "c", "e", "d", "1"},
                                 {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {3, 5}, {4, 6}, {5, 6}}, 6);
}

inline Semilattice chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<Element, Element>> covers;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return semilattice_from_covers(labels, covers, n - 1);
}

}  // namespace semidual::testing
