#include "semidual/error.hpp"

#include "semidual/report.hpp"

#include <algorithm>

namespace semidual {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::BadUnit: return "BadUnit";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::NotADownset: return "NotADownset";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::YNotClosed: return "YNotClosed";
    case ErrorKind::NotAnSSpace: return "NotAnSSpace";
    case ErrorKind::NotSaturated: return "NotSaturated";
    case ErrorKind::NotAnUpset: return "NotAnUpset";
    case ErrorKind::NotInExtension: return "NotInExtension";
    case ErrorKind::NotOrderPreserving: return "NotOrderPreserving";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::NotInSX: return "NotInSX";
    case ErrorKind::NotOneToOne: return "NotOneToOne";
    case ErrorKind::NotAVietorisFamily: return "NotAVietorisFamily";
    case ErrorKind::NotMIncreasing: return "NotMIncreasing";
    case ErrorKind::CapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string const& message, std::vector<std::size_t> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), witness_(std::move(witness)) {}

void Report::add(std::string name, bool pass, std::string witness) {
  checks_.push_back(Check{std::move(name), pass, std::move(witness)});
}

void Report::merge(Report const& other, std::string const& prefix) {
  for (auto const& c : other.checks_) checks_.push_back(Check{prefix + c.name, c.pass, c.witness});
}

bool Report::ok() const {
  return std::all_of(checks_.begin(), checks_.end(), [](Check const& c) { return c.pass; });
}

Check const* Report::first_failure() const {
  for (auto const& c : checks_)
    if (!c.pass) return &c;
  return nullptr;
}

}  // namespace semidual
