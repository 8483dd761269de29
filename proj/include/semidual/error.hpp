#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semidual {

enum class ErrorKind {
  BadShape,
  NotIdempotent,
  NotCommutative,
  NotAssociative,
  BadUnit,
  NotMonotone,
  NotAHomomorphism,
  NotACongruence,
  NotProper,
  NotADownset,
  NotDisjoint,
  NotAnIdeal,
  YNotClosed,
  NotAnSSpace,
  NotSaturated,
  NotAnUpset,
  NotInExtension,
  NotOrderPreserving,
  NotComposable,
  NotInSX,
  NotOneToOne,
  NotAVietorisFamily,
  NotMIncreasing,
  CapExceeded,
};

std::string_view to_string(ErrorKind kind);

/// Raised when a construction's precondition fails.  `witness` carries the
/// indices that exhibit the failure (a triple for associativity, a pair for
/// monotonicity, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& message, std::vector<std::size_t> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  std::vector<std::size_t> const& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

}  // namespace semidual
