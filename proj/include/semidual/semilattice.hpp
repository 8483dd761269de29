#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semidual/subset.hpp"

namespace semidual {

using Element = std::size_t;
using MeetTable = std::vector<std::vector<Element>>;
/// A total map on element indices, `map[a]` is the image of `a`.
using ElementMap = std::vector<Element>;

/// A finite meet-semilattice with greatest element.
///
/// Instances only come out of `validate_semilattice`, so the meet laws and the
/// unit law hold for every value of this type.  The derived order
/// `a <= b  <=>  a ^ b = a` is materialized as up/down bitmasks.
class Semilattice {
 public:
  std::size_t size() const { return n_; }
  Element top() const { return top_; }
  Element meet(Element a, Element b) const { return table_[a * n_ + b]; }
  bool leq(Element a, Element b) const { return meet(a, b) == a; }

  /// [a) and (a].
  Subset up(Element a) const { return up_[a]; }
  Subset down(Element a) const { return down_[a]; }
  Subset carrier() const { return Subset::full(n_); }

  /// Meet of a nonempty subset.
  Element meet_of(Subset s) const;
  /// Least upper bound of a and b, when it exists.
  std::optional<Element> join(Element a, Element b) const;

  std::string const& label(Element a) const { return labels_[a]; }
  std::vector<std::string> const& labels() const { return labels_; }
  std::optional<Element> find(std::string_view label) const;

  MeetTable table() const;

  friend bool operator==(Semilattice const& a, Semilattice const& b) {
    return a.n_ == b.n_ && a.top_ == b.top_ && a.table_ == b.table_;
  }

 private:
  friend Semilattice validate_semilattice(MeetTable const&, Element, std::vector<std::string>);

  std::size_t n_ = 0;
  Element top_ = 0;
  std::vector<Element> table_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
  std::vector<std::string> labels_;
};

/// Checks the semilattice axioms on a square table.  Throws `Error` with
/// kind NotIdempotent / NotCommutative / NotAssociative / BadUnit and the
/// witnessing indices, or BadShape for a malformed table.  Missing labels
/// default to the decimal index.
Semilattice validate_semilattice(MeetTable const& meet, Element top, std::vector<std::string> labels = {});

/// Builds the table from an order given by cover pairs (lower, upper).
/// Throws BadShape when the covers are cyclic or some pair lacks a meet.
Semilattice semilattice_from_covers(std::vector<std::string> labels,
                                    std::vector<std::pair<Element, Element>> const& covers, Element top);

/// Semilattice with an order-preserving unary operator.
struct MonotoneSemilattice {
  Semilattice base;
  ElementMap op;
};

/// Throws NotMonotone with the witnessing pair (a, b), a <= b, m(a) !<= m(b).
MonotoneSemilattice validate_monotone(Semilattice base, ElementMap op);

bool is_order_preserving(Semilattice const& source, Semilattice const& target, ElementMap const& map);

/// Meet- and top-preserving map between semilattices.
struct Homomorphism {
  Semilattice source;
  Semilattice target;
  ElementMap map;

  Element operator()(Element a) const { return map[a]; }
};

/// Throws NotAHomomorphism with a witness (a single index for the unit, a
/// pair for the meet).
Homomorphism validate_homomorphism(Semilattice source, Semilattice target, ElementMap map);
Homomorphism identity_homomorphism(Semilattice const& s);
/// g after h.
Homomorphism compose(Homomorphism const& g, Homomorphism const& h);
bool is_onto(Homomorphism const& h);
/// h(m a) = n h(a) for every a.
bool is_monotone_homomorphism(Homomorphism const& h, ElementMap const& m, ElementMap const& n);

/// Partition of the carrier; `class_of[a]` numbers classes by first
/// occurrence, so equal partitions compare equal.
class Congruence {
 public:
  Congruence() = default;
  explicit Congruence(std::vector<std::size_t> class_of);

  static Congruence identity(std::size_t n);
  static Congruence total(std::size_t n);

  std::size_t size() const { return class_of_.size(); }
  std::size_t num_classes() const { return num_classes_; }
  std::size_t class_of(Element a) const { return class_of_[a]; }
  bool related(Element a, Element b) const { return class_of_[a] == class_of_[b]; }
  std::vector<Subset> classes() const;
  std::vector<std::size_t> const& labels() const { return class_of_; }
  /// Set inclusion of the underlying relations.
  bool refines(Congruence const& other) const;

  friend bool operator==(Congruence const&, Congruence const&) = default;
  friend bool operator<(Congruence const& a, Congruence const& b) { return a.class_of_ < b.class_of_; }

 private:
  std::vector<std::size_t> class_of_;
  std::size_t num_classes_ = 0;
};

/// True when the partition is compatible with the meet (and with `op`, when
/// given).
bool is_congruence(Semilattice const& s, Congruence const& theta, ElementMap const* op = nullptr);
/// Throws NotACongruence with the witnessing pairs.
void validate_congruence(Semilattice const& s, Congruence const& theta, ElementMap const* op = nullptr);

/// Least congruence containing the given pairs (compatibility closure of the
/// generated partition).
Congruence congruence_generated_by(Semilattice const& s, std::vector<std::pair<Element, Element>> const& pairs,
                                   ElementMap const* op = nullptr);

/// Meet and intersection of congruences as relations.
Congruence congruence_meet(Congruence const& a, Congruence const& b);
/// Join in the congruence lattice (compatibility closure of the union).
Congruence congruence_join(Semilattice const& s, Congruence const& a, Congruence const& b,
                           ElementMap const* op = nullptr);

struct Quotient {
  Semilattice algebra;
  Homomorphism projection;  // q_theta, onto
  std::optional<ElementMap> op;  // induced operator, when the input had one
};

/// A / theta with the natural projection.  Class k is labelled by the label
/// of its least-index member.
Quotient quotient(Semilattice const& s, Congruence const& theta, ElementMap const* op = nullptr);

/// Calls `visit` with every set partition of {0..n-1} (restricted growth
/// strings, so each partition appears once).
void for_each_partition(std::size_t n, std::function<void(std::vector<std::size_t> const&)> const& visit);

/// All semilattices with exactly n elements, one per isomorphism class.
/// Representatives are indexed along a linear extension of the order with the
/// top last, labelled by index, and returned in canonical-code order.
std::vector<Semilattice> semilattices_of_size(std::size_t n);
/// Concatenation of `semilattices_of_size(k)` for k = 1..n_max.
std::vector<Semilattice> enumerate_semilattices(std::size_t n_max);

/// Isomorphism invariant code of the order: minimal encoding of the strict
/// order matrix over all linear-extension relabelings (n <= 8).
std::uint64_t canonical_order_code(Semilattice const& s);

std::vector<ElementMap> all_order_preserving_maps(Semilattice const& source, Semilattice const& target);
std::vector<ElementMap> all_monotone_operators(Semilattice const& s);
std::vector<Homomorphism> all_homomorphisms(Semilattice const& source, Semilattice const& target);

}  // namespace semidual
