#include "cuntz/monomial.hpp"

#include <algorithm>
#include <string>

#include "cuntz/error.hpp"

namespace cuntz {

std::optional<Monomial> multiply(const Monomial& x, const Monomial& y) {
  // s_A (s_B)* s_C (s_D)*: the inner (s_B)* s_C cancels letter by letter
  // from the front of both words.
  const Word& b = x.annihilate;
  const Word& c = y.create;
  const std::size_t common = std::min(b.size(), c.size());
  if (!std::equal(b.begin(), b.begin() + static_cast<long>(common),
                  c.begin()))
    return std::nullopt;

  Monomial out;
  if (b.size() <= c.size()) {
    out.create = x.create;
    out.create.insert(out.create.end(), c.begin() + static_cast<long>(common),
                      c.end());
    out.annihilate = y.annihilate;
  } else {
    out.create = x.create;
    out.annihilate = y.annihilate;
    out.annihilate.insert(out.annihilate.end(),
                          b.begin() + static_cast<long>(common), b.end());
  }
  return out;
}

std::optional<Monomial> monomial_mul(const Monomial& x, const Monomial& y,
                                     unsigned d) {
  check_alphabet(x, d);
  check_alphabet(y, d);
  return multiply(x, y);
}

Monomial adjoint(const Monomial& x) { return {x.annihilate, x.create}; }

void check_alphabet(const Monomial& x, unsigned d) {
  auto bad = [d](Letter l) { return l < 1 || l > d; };
  for (const Word* w : {&x.create, &x.annihilate}) {
    if (auto it = std::find_if(w->begin(), w->end(), bad); it != w->end())
      throw IndexOutOfRange("generator index " + std::to_string(*it) +
                            " outside {1.." + std::to_string(d) + "}");
  }
}

namespace {

void words_of_length(unsigned d, std::size_t len, std::vector<Word>& out) {
  Word w(len, 1);
  while (true) {
    out.push_back(w);
    std::size_t pos = len;
    while (pos > 0 && w[pos - 1] == d) w[--pos] = 1;
    if (pos == 0) return;
    ++w[pos - 1];
  }
}

}  // namespace

std::vector<Monomial> monomials_up_to_depth(unsigned d,
                                            std::size_t max_depth) {
  std::vector<std::vector<Word>> by_len(max_depth + 1);
  for (std::size_t len = 0; len <= max_depth; ++len)
    words_of_length(d, len, by_len[len]);

  std::vector<Monomial> out;
  for (std::size_t total = 0; total <= max_depth; ++total)
    for (std::size_t na = 0; na <= total; ++na)
      for (const Word& a : by_len[na])
        for (const Word& b : by_len[total - na]) out.push_back({a, b});
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

}  // namespace cuntz
