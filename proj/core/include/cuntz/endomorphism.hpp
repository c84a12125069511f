#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cuntz/element.hpp"

namespace cuntz {

struct EndomorphismValidation;

/// A unital *-endomorphism of O_d, fixed by the images g_i of the generators.
///
/// Instances only come out of validate_endomorphism (or the named
/// constructors, which go through it), so the images always satisfy
/// g_i* g_j = delta_ij I and sum_i g_i g_i* = I.
class Endomorphism {
 public:
  static Endomorphism identity(unsigned d);
  /// X -> sum_i s_i X s_i*.
  static Endomorphism canonical(unsigned d);
  /// O_2 maps s1 -> s1 s1* + s2 s1 s2*, s2 -> s2 s2.
  static Endomorphism phi1();
  /// O_2 maps s1 -> s2 s1* + s1 s2 s2*, s2 -> s1 s1.
  static Endomorphism phi2();

  unsigned alphabet() const noexcept { return d_; }
  const std::vector<Element>& images() const noexcept { return images_; }
  const Element& image(Letter i) const { return images_.at(i - 1); }

  Element apply(const Element& x) const;
  Element apply(const Monomial& m) const;

 private:
  Endomorphism(unsigned d, std::vector<Element> images);
  friend EndomorphismValidation validate_endomorphism(
      std::vector<Element> images);

  unsigned d_;
  std::vector<Element> images_;
  std::vector<Element> adjoint_images_;
};

/// Outcome of checking candidate generator images.
struct EndomorphismValidation {
  std::variant<Endomorphism, std::vector<std::string>> result;

  bool ok() const noexcept { return result.index() == 0; }
  const Endomorphism& value() const { return std::get<0>(result); }
  const std::vector<std::string>& failures() const {
    return std::get<1>(result);
  }
};

EndomorphismValidation validate_endomorphism(std::vector<Element> images);

/// Like validate_endomorphism, but throws ValidationError listing failures.
Endomorphism make_endomorphism(std::vector<Element> images);

Element apply_endomorphism(const Endomorphism& e, const Element& x);

/// rho(x) = sum_i s_i x s_i*, computed directly by sandwiching.
Element canonical_endomorphism(const Element& x);

}  // namespace cuntz
