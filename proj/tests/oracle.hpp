#pragma once

// Reference action of O_d on l^2(N) through mu_i(n) = d(n-1)+i, written
// directly on machine integers and independent of the library's own
// representation code. Two elements are taken to agree when their actions
// agree on e_1..e_K.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "cuntz/element.hpp"
#include "cuntz/text.hpp"

namespace cuntz::oracle {

using Vector = std::map<std::uint64_t, mpq_class>;

inline std::optional<std::uint64_t> act(const Monomial& m, unsigned d,
                                        std::uint64_t n) {
  // (s_b1 ... s_bk)* = s_bk* ... s_b1*, so s_b1* acts first.
  for (Letter b : m.annihilate) {
    if (n < b || (n - b) % d != 0) return std::nullopt;
    n = (n - b) / d + 1;
  }
  for (auto it = m.create.rbegin(); it != m.create.rend(); ++it)
    n = d * (n - 1) + *it;
  return n;
}

inline Vector act(const Element& x, std::uint64_t n) {
  Vector out;
  for (const auto& [m, c] : x.terms())
    if (auto k = act(m, x.alphabet(), n)) {
      out[*k] += c;
      if (out[*k] == 0) out.erase(*k);
    }
  return out;
}

/// Empty string when x and y act identically on e_1..e_K, else a description.
inline std::string compare(const Element& x, const Element& y,
                           std::uint64_t K = 64) {
  for (std::uint64_t n = 1; n <= K; ++n)
    if (act(x, n) != act(y, n))
      return "actions differ on e_" + std::to_string(n) + " for " +
             to_string(x) + " vs " + to_string(y);
  return {};
}

inline bool vanishes(const Element& x, std::uint64_t K = 64) {
  for (std::uint64_t n = 1; n <= K; ++n)
    if (!act(x, n).empty()) return false;
  return true;
}

}  // namespace cuntz::oracle
