#include "cuntz/report.hpp"

#include <algorithm>

namespace cuntz {

const char* to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::inconclusive:
      return "inconclusive";
  }
  return "?";
}

void Report::append(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::passed() const noexcept {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const CheckResult& c) { return c.passed(); });
}

bool Report::failed() const noexcept {
  return std::any_of(checks_.begin(), checks_.end(), [](const CheckResult& c) {
    return c.outcome == Outcome::fail;
  });
}

const CheckResult* Report::first_failure() const noexcept {
  for (const auto& c : checks_)
    if (!c.passed()) return &c;
  return nullptr;
}

}  // namespace cuntz
