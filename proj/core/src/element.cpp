#include "cuntz/element.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <utility>
#include <vector>

#include "cuntz/error.hpp"

namespace cuntz {

namespace {

std::atomic<std::size_t> g_max_terms{0};

}  // namespace

void enforce_limit(std::size_t terms) {
  const std::size_t limit = g_max_terms.load(std::memory_order_relaxed);
  if (limit != 0 && terms > limit) throw ResourceLimitError(terms, limit);
}

void set_max_terms(std::size_t limit) noexcept {
  g_max_terms.store(limit, std::memory_order_relaxed);
}

std::size_t max_terms() noexcept {
  return g_max_terms.load(std::memory_order_relaxed);
}

Element::Element(unsigned d) : d_(d) {
  if (d < 2)
    throw std::invalid_argument("alphabet size must be >= 2, got " +
                                std::to_string(d));
}

Element::Element(unsigned d, const Monomial& m, const Coefficient& c)
    : Element(d) {
  check_alphabet(m, d);
  add_term(m, c);
}

Element Element::generator(unsigned d, Letter i) {
  return Element(d, Monomial::generator(i));
}

Element Element::generator_adjoint(unsigned d, Letter i) {
  return Element(d, Monomial::generator_adjoint(i));
}

void Element::add_term(const Monomial& m, const Coefficient& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Element::add_term(Monomial&& m, const Coefficient& c) {
  if (c == 0) return;
  auto it = terms_.lower_bound(m);
  if (it != terms_.end() && it->first == m) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.emplace_hint(it, std::move(m), c);
  }
}

Element& Element::operator+=(const Element& y) {
  require_same_alphabet(*this, y);
  for (const auto& [m, c] : y.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& y) {
  require_same_alphabet(*this, y);
  for (const auto& [m, c] : y.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Coefficient& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Element operator*(const Element& x, const Element& y) {
  require_same_alphabet(x, y);
  Element out(x.d_);
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_)
      if (auto m = multiply(mx, my)) out.add_term(std::move(*m), cx * cy);
  enforce_limit(out.size());
  return out;
}

void require_same_alphabet(const Element& x, const Element& y) {
  if (x.alphabet() != y.alphabet())
    throw AlphabetMismatch(x.alphabet(), y.alphabet());
}

Element adjoint(const Element& x) {
  Element out(x.alphabet());
  for (const auto& [m, c] : x.terms()) out.add_term(adjoint(m), c);
  return out;
}

Element commutator(const Element& x, const Element& y) {
  return x * y - y * x;
}

Element anticommutator(const Element& x, const Element& y) {
  return x * y + y * x;
}

Element raise_monomial(const Monomial& x, unsigned d) {
  Element out(d);
  for (Letter i = 1; i <= d; ++i) {
    Monomial m = x;
    m.create.push_back(i);
    m.annihilate.push_back(i);
    out.add_term(std::move(m), 1);
  }
  return out;
}

namespace {

// Adds c * x raised by `extra` letters: sum over words w of length extra of
// s_{A w} (s_{B w})*.
void add_raised(Element& out, const Monomial& x, const Coefficient& c,
                std::size_t extra, unsigned d) {
  if (extra == 0) {
    out.add_term(x, c);
    return;
  }
  Word w(extra, 1);
  while (true) {
    Monomial m = x;
    m.create.insert(m.create.end(), w.begin(), w.end());
    m.annihilate.insert(m.annihilate.end(), w.begin(), w.end());
    out.add_term(std::move(m), c);
    std::size_t pos = extra;
    while (pos > 0 && w[pos - 1] == d) w[--pos] = 1;
    if (pos == 0) return;
    ++w[pos - 1];
  }
}


// Collapses every complete sibling group sum_i c s_{A i} (s_{B i})* back to
// c s_A (s_B)*, level by level. `level` holds terms of one excess class that
// all share the same creation length.
void lower_into(Element& out, TermMap level, unsigned d) {
  while (!level.empty()) {
    struct Group {
      std::vector<std::pair<Letter, Coefficient>> members;
    };
    std::map<Monomial, Group, MonomialOrder> groups;
    TermMap next;
    for (const auto& [m, c] : level) {
      if (m.create.empty() || m.annihilate.empty() ||
          m.create.back() != m.annihilate.back()) {
        out.add_term(m, c);
        continue;
      }
      Monomial parent{Word(m.create.begin(), m.create.end() - 1),
                      Word(m.annihilate.begin(), m.annihilate.end() - 1)};
      groups[parent].members.emplace_back(m.create.back(), c);
    }
    for (auto& [parent, g] : groups) {
      const bool complete =
          g.members.size() == d &&
          std::all_of(g.members.begin(), g.members.end(),
                      [&](const auto& e) { return e.second == g.members[0].second; });
      if (complete) {
        next.emplace(parent, g.members[0].second);
        continue;
      }
      for (const auto& [letter, c] : g.members) {
        Monomial m = parent;
        m.create.push_back(letter);
        m.annihilate.push_back(letter);
        out.add_term(std::move(m), c);
      }
    }
    level = std::move(next);
  }
}

}  // namespace

Element normal_form(const Element& x) {
  const unsigned d = x.alphabet();
  // Terms are ordered by excess first, then creation length, so the last
  // term of each excess class carries the maximal creation length.
  std::map<long, std::size_t> target;
  for (const auto& [m, c] : x.terms()) target[m.excess()] = m.create.size();

  std::size_t expected = 0;
  for (const auto& [m, c] : x.terms()) {
    std::size_t extra = target[m.excess()] - m.create.size();
    std::size_t n = 1;
    for (std::size_t k = 0; k < extra; ++k) n *= d;
    expected += n;
  }
  enforce_limit(expected);

  // Raised terms of one excess class form a fixed-shape basis expansion,
  // which is unique; lowering it again yields the shortest such form.
  std::map<long, Element> raised;
  for (const auto& [m, c] : x.terms())
    add_raised(raised.try_emplace(m.excess(), d).first->second, m, c,
               target[m.excess()] - m.create.size(), d);

  Element out(d);
  for (auto& [g, e] : raised) lower_into(out, e.terms(), d);
  return out;
}

bool equals(const Element& x, const Element& y) {
  return normal_form(x - y).is_zero();
}

std::map<long, Element> grade_decompose(const Element& x) {
  std::map<long, Element> out;
  for (const auto& [m, c] : x.terms())
    out.try_emplace(m.excess(), x.alphabet()).first->second.add_term(m, c);
  return out;
}

bool is_u1_invariant(const Element& x) {
  return std::all_of(x.terms().begin(), x.terms().end(),
                     [](const auto& t) { return t.first.excess() == 0; });
}

}  // namespace cuntz
