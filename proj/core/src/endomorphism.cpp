#include "cuntz/endomorphism.hpp"

#include <sstream>

#include "cuntz/error.hpp"
#include "cuntz/text.hpp"

namespace cuntz {

Endomorphism::Endomorphism(unsigned d, std::vector<Element> images)
    : d_(d), images_(std::move(images)) {
  adjoint_images_.reserve(images_.size());
  for (const auto& g : images_) adjoint_images_.push_back(adjoint(g));
}

Element Endomorphism::apply(const Monomial& m) const {
  Element out = Element::identity(d_);
  for (Letter a : m.create) out = out * images_.at(a - 1);
  for (auto it = m.annihilate.rbegin(); it != m.annihilate.rend(); ++it)
    out = out * adjoint_images_.at(*it - 1);
  return out;
}

Element Endomorphism::apply(const Element& x) const {
  if (x.alphabet() != d_) throw AlphabetMismatch(d_, x.alphabet());
  Element out(d_);
  for (const auto& [m, c] : x.terms()) out += apply(m) * c;
  return out;
}

EndomorphismValidation validate_endomorphism(std::vector<Element> images) {
  if (images.empty())
    return {std::vector<std::string>{"no generator images given"}};
  const unsigned d = images.front().alphabet();
  std::vector<std::string> failures;
  if (images.size() != d) {
    failures.push_back("expected " + std::to_string(d) + " images, got " +
                       std::to_string(images.size()));
    return {std::move(failures)};
  }
  for (const auto& g : images)
    if (g.alphabet() != d) throw AlphabetMismatch(d, g.alphabet());

  const Element id = Element::identity(d);
  const Element zero = Element::zero(d);
  Element completeness(d);
  for (unsigned i = 0; i < d; ++i) {
    const Element gi_star = adjoint(images[i]);
    for (unsigned j = 0; j < d; ++j) {
      const Element lhs = gi_star * images[j];
      if (!equals(lhs, i == j ? id : zero)) {
        std::ostringstream os;
        os << "g" << i + 1 << "* g" << j + 1 << " = " << normal_form(lhs)
           << ", expected " << (i == j ? "I" : "0");
        failures.push_back(os.str());
      }
    }
    completeness += images[i] * gi_star;
  }
  if (!equals(completeness, id))
    failures.push_back("sum_i g_i g_i* = " + to_string(normal_form(completeness)) +
                       ", expected I");

  if (!failures.empty()) return {std::move(failures)};
  return {Endomorphism(d, std::move(images))};
}

Endomorphism make_endomorphism(std::vector<Element> images) {
  auto v = validate_endomorphism(std::move(images));
  if (!v.ok()) {
    std::string msg = "not a unital *-endomorphism:";
    for (const auto& f : v.failures()) msg += "\n  " + f;
    throw ValidationError(msg);
  }
  return v.value();
}

Endomorphism Endomorphism::identity(unsigned d) {
  std::vector<Element> images;
  for (Letter i = 1; i <= d; ++i) images.push_back(Element::generator(d, i));
  return make_endomorphism(std::move(images));
}

Endomorphism Endomorphism::canonical(unsigned d) {
  std::vector<Element> images;
  for (Letter i = 1; i <= d; ++i)
    images.push_back(canonical_endomorphism(Element::generator(d, i)));
  return make_endomorphism(std::move(images));
}

Endomorphism Endomorphism::phi1() {
  return make_endomorphism({parse_element("s1 s1* + s2 s1 s2*", 2),
                            parse_element("s2 s2", 2)});
}

Endomorphism Endomorphism::phi2() {
  return make_endomorphism({parse_element("s2 s1* + s1 s2 s2*", 2),
                            parse_element("s1 s1", 2)});
}

Element apply_endomorphism(const Endomorphism& e, const Element& x) {
  return e.apply(x);
}

Element canonical_endomorphism(const Element& x) {
  const unsigned d = x.alphabet();
  Element out(d);
  for (const auto& [m, c] : x.terms())
    for (Letter i = 1; i <= d; ++i) {
      Monomial s = m;
      s.create.insert(s.create.begin(), i);
      s.annihilate.insert(s.annihilate.begin(), i);
      out.add_term(std::move(s), c);
    }
  return out;
}

}  // namespace cuntz
