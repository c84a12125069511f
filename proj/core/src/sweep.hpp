#pragma once

// Internal helpers shared by the verification suites.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuntz/parallel.hpp"
#include "cuntz/report.hpp"

namespace cuntz::detail {

using Params = std::vector<std::pair<std::string, std::string>>;

/// Runs `count` independent cases; a case returns a witness on failure. The
/// reported witness is the first failing case in index order.
inline CheckResult sweep(std::string name, Params params, std::size_t count,
                         unsigned jobs,
                         const std::function<std::optional<std::string>(
                             std::size_t)>& case_fn) {
  CheckResult r;
  r.check = std::move(name);
  r.params = std::move(params);
  r.cases = count;
  auto results = parallel_map(count, jobs, case_fn);
  for (auto& w : results)
    if (w) {
      r.outcome = Outcome::fail;
      r.witness = std::move(*w);
      break;
    }
  return r;
}

inline CheckResult single(std::string name, Params params,
                          std::optional<std::string> witness) {
  CheckResult r;
  r.check = std::move(name);
  r.params = std::move(params);
  r.cases = 1;
  if (witness) {
    r.outcome = Outcome::fail;
    r.witness = std::move(witness);
  }
  return r;
}

}  // namespace cuntz::detail
