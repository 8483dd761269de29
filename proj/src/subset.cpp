#include "semidual/subset.hpp"

#include <algorithm>
#include <sstream>

namespace semidual {

bool canonical_less(Subset a, Subset b) {
  if (a == b) return false;
  auto const diff = a.bits() ^ b.bits();
  auto const low = diff & (~diff + 1);
  auto const above = ~(low | (low - 1));
  if (a.bits() & low) {
    // a holds the smaller element at the first difference unless b ran out.
    return (b.bits() & above) != 0;
  }
  return (a.bits() & above) == 0;
}

void canonicalize(Family& family) {
  std::sort(family.begin(), family.end(), CanonicalLess{});
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

Family canonical(Family family) {
  canonicalize(family);
  return family;
}

bool family_has(Family const& family, Subset s) {
  return std::binary_search(family.begin(), family.end(), s, CanonicalLess{});
}

std::size_t family_index(Family const& family, Subset s) {
  auto it = std::lower_bound(family.begin(), family.end(), s, CanonicalLess{});
  if (it == family.end() || *it != s) return family.size();
  return static_cast<std::size_t>(it - family.begin());
}

Subset intersection_of(Family const& family, Subset universe) {
  Subset out = universe;
  for (auto s : family) out = out & s;
  return out;
}

Subset union_of(Family const& family) {
  Subset out;
  for (auto s : family) out = out | s;
  return out;
}

Family intersection_closure(Family const& seed, Subset universe) {
  Family out{universe};
  for (auto s : seed) {
    auto const current = out.size();
    for (std::size_t i = 0; i < current; ++i) out.push_back(out[i] & s);
    canonicalize(out);
  }
  return out;
}

void for_each_closed_set(std::size_t n, std::function<Subset(Subset)> const& close,
                         std::function<void(Subset)> const& visit) {
  Subset current = close(Subset{});
  visit(current);
  while (true) {
    bool advanced = false;
    for (std::size_t k = n; k-- > 0;) {
      if (current.contains(k)) continue;
      auto const prefix = current & Subset::full(k);
      auto const next = close(prefix.with(k));
      if ((next & Subset::full(k)) == prefix) {
        current = next;
        visit(current);
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
  }
}

std::string format_subset(Subset s, std::vector<std::string> const& labels) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out << ',';
    first = false;
    if (i < labels.size()) {
      out << labels[i];
    } else {
      out << i;
    }
  });
  out << '}';
  return out.str();
}

}  // namespace semidual
