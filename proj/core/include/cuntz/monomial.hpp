#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace cuntz {

/// A generator label in {1..d}.
using Letter = std::uint16_t;
using Word = std::vector<Letter>;

/// The Cuntz word s_A (s_B)* with A = create and B = annihilate.
///
/// The annihilation word is stored un-starred: annihilate = (b1..bn) means
/// (s_b1 ... s_bn)* = s_bn* ... s_b1*. The identity is (∅, ∅).
struct Monomial {
  Word create;
  Word annihilate;

  static Monomial identity() { return {}; }
  static Monomial generator(Letter i) { return {{i}, {}}; }
  static Monomial generator_adjoint(Letter i) { return {{}, {i}}; }

  bool is_identity() const noexcept {
    return create.empty() && annihilate.empty();
  }

  /// U(1) excess |A| - |B|.
  long excess() const noexcept {
    return static_cast<long>(create.size()) -
           static_cast<long>(annihilate.size());
  }

  std::size_t depth() const noexcept {
    return create.size() + annihilate.size();
  }

  bool operator==(const Monomial&) const = default;
};

/// Canonical term order: (excess, |A|, A, B).
struct MonomialOrder {
  bool operator()(const Monomial& x, const Monomial& y) const noexcept {
    if (auto g = x.excess() <=> y.excess(); g != 0) return g < 0;
    if (x.create.size() != y.create.size())
      return x.create.size() < y.create.size();
    if (x.create != y.create) return x.create < y.create;
    return x.annihilate < y.annihilate;
  }
};

/// Reduced product of two words; empty when s_i* s_j with i != j occurs.
std::optional<Monomial> multiply(const Monomial& x, const Monomial& y);

/// Same as multiply, but first checks every index against the alphabet.
std::optional<Monomial> monomial_mul(const Monomial& x, const Monomial& y,
                                     unsigned d);

Monomial adjoint(const Monomial& x);

/// Throws IndexOutOfRange unless every letter lies in {1..d}.
void check_alphabet(const Monomial& x, unsigned d);

/// All monomials with |A| + |B| <= max_depth over {1..d}, in canonical order.
std::vector<Monomial> monomials_up_to_depth(unsigned d, std::size_t max_depth);

}  // namespace cuntz
