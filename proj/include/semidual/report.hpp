#pragma once

#include <string>
#include <vector>

namespace semidual {

struct Check {
  std::string name;
  bool pass = true;
  std::string witness;  // empty on success
};

/// Outcome of a verification: one entry per checked statement.
class Report {
 public:
  void add(std::string name, bool pass, std::string witness = {});
  void pass(std::string name) { add(std::move(name), true); }
  void fail(std::string name, std::string witness) { add(std::move(name), false, std::move(witness)); }
  /// Appends the checks of `other`, prefixing their names.
  void merge(Report const& other, std::string const& prefix = {});

  bool ok() const;
  std::vector<Check> const& checks() const { return checks_; }
  /// First failing check, or nullptr.
  Check const* first_failure() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace semidual
