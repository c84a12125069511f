#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>

#include "cuntz/monomial.hpp"

namespace cuntz {

/// Exact rational scalar, always kept canonical (lowest terms).
using Coefficient = mpq_class;

using TermMap = std::map<Monomial, Coefficient, MonomialOrder>;

/// Cap on the number of terms any product or normal form may produce.
/// Zero disables the cap. Process-wide; read atomically.
void set_max_terms(std::size_t limit) noexcept;
std::size_t max_terms() noexcept;
/// Throws ResourceLimitError if `terms` exceeds the cap.
void enforce_limit(std::size_t terms);

/// A finite linear combination of Cuntz words over the alphabet {1..d}.
///
/// No stored coefficient is zero. Multiplication only applies s_i* s_j =
/// delta_ij I; the completeness relation is applied by normal_form, so two
/// Elements can differ term-wise and still be equal (see equals).
class Element {
 public:
  explicit Element(unsigned d);
  Element(unsigned d, const Monomial& m, const Coefficient& c = 1);

  static Element zero(unsigned d) { return Element(d); }
  static Element identity(unsigned d) {
    return Element(d, Monomial::identity());
  }
  static Element generator(unsigned d, Letter i);
  static Element generator_adjoint(unsigned d, Letter i);

  unsigned alphabet() const noexcept { return d_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c * m, pruning the entry if it cancels to zero.
  void add_term(const Monomial& m, const Coefficient& c);
  void add_term(Monomial&& m, const Coefficient& c);

  Element& operator+=(const Element& y);
  Element& operator-=(const Element& y);
  Element& operator*=(const Coefficient& c);

  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  friend Element operator-(Element x) { return x *= -1; }
  friend Element operator*(Element x, const Coefficient& c) { return x *= c; }
  friend Element operator*(const Coefficient& c, Element x) { return x *= c; }
  friend Element operator*(const Element& x, const Element& y);

  /// Term-wise identity (same stored representation), not algebraic equality.
  bool operator==(const Element& y) const = default;

 private:
  unsigned d_;
  TermMap terms_;
};

void require_same_alphabet(const Element& x, const Element& y);

Element adjoint(const Element& x);

Element commutator(const Element& x, const Element& y);
Element anticommutator(const Element& x, const Element& y);

/// x written with the completeness relation inserted once on the right:
/// sum_i s_{A i} (s_{B i})*.
Element raise_monomial(const Monomial& x, unsigned d);

/// Canonical form: per excess class, every word is raised to the longest
/// creation length present in that class, then like terms are merged.
Element normal_form(const Element& x);

/// Algebraic equality in O_d: normal_form(x - y) vanishes.
bool equals(const Element& x, const Element& y);

/// Terms grouped by excess |A| - |B|.
std::map<long, Element> grade_decompose(const Element& x);
bool is_u1_invariant(const Element& x);

}  // namespace cuntz
