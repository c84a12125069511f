#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cuntz {

enum class Outcome { pass, fail, inconclusive };

const char* to_string(Outcome o) noexcept;

/// One named relation checked over a parameter range. `witness` holds the
/// first counterexample in sweep order, rendered symbolically.
struct CheckResult {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  Outcome outcome = Outcome::pass;
  std::optional<std::string> witness;
  std::size_t cases = 0;

  bool passed() const noexcept { return outcome == Outcome::pass; }
};

class Report {
 public:
  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void append(const Report& other);

  const std::vector<CheckResult>& checks() const noexcept { return checks_; }

  /// True iff every check passed (inconclusive counts as not passed).
  bool passed() const noexcept;
  /// True iff some check is a definite failure.
  bool failed() const noexcept;
  const CheckResult* first_failure() const noexcept;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace cuntz
