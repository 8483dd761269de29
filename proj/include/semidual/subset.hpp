#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace semidual {

/// Finite subset of {0, ..., 63} stored as a bitmask.
///
/// Every carrier in the library (semilattice elements, points of a space,
/// members of a family) is indexed densely from zero, so a single 64-bit word
/// is enough for all the set algebra.
class Subset {
 public:
  static constexpr std::size_t max_size = 64;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr Subset singleton(std::size_t i) {
    return Subset(std::uint64_t{1} << i);
  }
  static Subset of(std::initializer_list<std::size_t> members) {
    Subset s;
    for (auto i : members) s = s.with(i);
    return s;
  }
  static Subset of(std::vector<std::size_t> const& members) {
    Subset s;
    for (auto i : members) s = s.with(i);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr Subset with(std::size_t i) const { return Subset(bits_ | (std::uint64_t{1} << i)); }
  constexpr Subset without(std::size_t i) const { return Subset(bits_ & ~(std::uint64_t{1} << i)); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(Subset o) const { return (bits_ & o.bits_) != 0; }
  constexpr Subset complement(std::size_t n) const { return Subset(~bits_ & full(n).bits_); }
  /// Smallest member; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (auto b = bits_; b != 0; b &= b - 1) f(static_cast<std::size_t>(std::countr_zero(b)));
  }

  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset, Subset) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on ascending member lists, proper prefixes first.
///
/// This is the canonical order for every family the library emits.  On the
/// principal filters of a semilattice indexed along a linear extension it
/// sorts filters by their generator.
bool canonical_less(Subset a, Subset b);

struct CanonicalLess {
  bool operator()(Subset a, Subset b) const { return canonical_less(a, b); }
};

/// A family of subsets.  Families returned by the library are canonical:
/// deduplicated and sorted with `canonical_less`.
using Family = std::vector<Subset>;

void canonicalize(Family& family);
Family canonical(Family family);
bool family_has(Family const& canonical_family, Subset s);
/// Position of `s` in a canonical family, or `family.size()` when absent.
std::size_t family_index(Family const& canonical_family, Subset s);

/// Intersection of all members; `universe` for the empty family.
Subset intersection_of(Family const& family, Subset universe);
Subset union_of(Family const& family);

/// Closes `seed` under pairwise intersection and adjoins `universe`.
Family intersection_closure(Family const& seed, Subset universe);

/// Enumerates every closed set of a closure operator on {0..n-1} in lectic
/// order (Ganter's NextClosure).  `close` must be extensive, monotone and
/// idempotent.
void for_each_closed_set(std::size_t n, std::function<Subset(Subset)> const& close,
                         std::function<void(Subset)> const& visit);

/// Renders a subset as `{x,y,z}` using the given labels (indices if empty).
std::string format_subset(Subset s, std::vector<std::string> const& labels = {});

}  // namespace semidual

template <>
struct std::hash<semidual::Subset> {
  std::size_t operator()(semidual::Subset s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
