#include "cuntz/parafermion.hpp"

#include <array>
#include <stdexcept>

#include "cuntz/error.hpp"
#include "cuntz/representation.hpp"
#include "cuntz/text.hpp"
#include "sweep.hpp"

namespace cuntz {

using detail::Params;

GreenSystem::GreenSystem(std::vector<RfsSystem> triads)
    : triads_(std::move(triads)) {
  if (triads_.empty()) throw std::invalid_argument("need at least one triad");
  for (const auto& t : triads_) {
    if (t.seed_count() != 1)
      throw std::invalid_argument("each Green triad carries exactly one seed");
    if (t.alphabet() != triads_.front().alphabet())
      throw AlphabetMismatch(triads_.front().alphabet(), t.alphabet());
  }
}

Element GreenSystem::green_component(std::size_t alpha, std::size_t n) const {
  if (alpha < 1 || alpha > triads_.size())
    throw std::out_of_range("Green component index out of range");
  return triads_[alpha - 1].embed_generator(n);
}

Element GreenSystem::parafermion_generator(std::size_t n) const {
  Element out(alphabet());
  for (std::size_t alpha = 1; alpha <= order(); ++alpha)
    out += green_component(alpha, n);
  return out;
}

GeneratorFamily GreenSystem::parafermion_family() const {
  GreenSystem self = *this;
  return GeneratorFamily(alphabet(), [self](std::size_t n) {
    return self.parafermion_generator(n);
  });
}

GeneratorFamily GreenSystem::component_family(std::size_t alpha) const {
  return triad(alpha).family();
}

GeneratorFamily GreenSystem::family_without(std::size_t alpha) const {
  GreenSystem self = *this;
  return GeneratorFamily(alphabet(), [self, alpha](std::size_t n) {
    Element out(self.alphabet());
    for (std::size_t b = 1; b <= self.order(); ++b)
      if (b != alpha) out += self.green_component(b, n);
    return out;
  });
}

// ---------------------------------------------------------------------------
// Constructions

GreenSystem build_standard_rpfs_p(unsigned p) {
  if (p < 1 || p > 15) throw std::out_of_range("order out of range");
  const unsigned d = 1u << p;
  std::vector<RfsSystem> triads;
  for (unsigned alpha = 1; alpha <= p; ++alpha) {
    Element a(d);
    for (std::size_t k = 1; k <= (std::size_t{1} << (p - alpha)); ++k)
      for (std::size_t l = 1; l <= (std::size_t{1} << (alpha - 1)); ++l) {
        const auto create =
            static_cast<Letter>((std::size_t{1} << alpha) * (k - 1) + l);
        const auto annihilate = static_cast<Letter>(
            (std::size_t{1} << (alpha - 1)) * (2 * k - 1) + l);
        a.add_term(Monomial{{create}, {annihilate}}, 1);
      }
    std::vector<int> signs;
    for (std::size_t i = 1; i <= d; ++i)
      signs.push_back(((i - 1) >> (alpha - 1)) % 2 == 0 ? 1 : -1);
    triads.emplace_back(std::vector<Element>{std::move(a)},
                        RecursiveMap::diagonal(signs),
                        Endomorphism::canonical(d));
  }
  return GreenSystem(std::move(triads));
}

GreenSystem standard_rpfs_p(unsigned p, unsigned p_max,
                            const VerifyOptions& opts) {
  if (p < 1 || p > p_max)
    throw std::out_of_range("p must lie in [1, " + std::to_string(p_max) +
                            "], got " + std::to_string(p));
  GreenSystem g = build_standard_rpfs_p(p);
  Report r = verify_green_system(g, opts);
  if (!r.passed()) {
    const CheckResult* f = r.first_failure();
    throw ValidationError("standard RPFS_" + std::to_string(p) + " fails " +
                          f->check +
                          (f->witness ? ": " + *f->witness : std::string{}));
  }
  return g;
}

GreenSystem standard_rpfs2(const VerifyOptions& opts) {
  const auto rho = Endomorphism::canonical(4);
  GreenSystem g({
      RfsSystem({parse_element("s1 s2* + s3 s4*", 4)},
                RecursiveMap::diagonal({1, -1, 1, -1}), rho),
      RfsSystem({parse_element("s1 s3* + s2 s4*", 4)},
                RecursiveMap::diagonal({1, 1, -1, -1}), rho),
  });
  Report r = verify_green_system(g, opts);
  if (!r.passed())
    throw ValidationError("standard RPFS_2 fails " + r.first_failure()->check);
  return g;
}

// ---------------------------------------------------------------------------
// System conditions

namespace {

std::string comp(std::size_t alpha, std::size_t n) {
  return "a" + std::to_string(n) + "^(" + std::to_string(alpha) + ")";
}

}  // namespace

Report verify_green_system(const GreenSystem& g, const VerifyOptions& opts,
                           std::size_t cross_depth) {
  const unsigned d = g.alphabet();
  const std::size_t p = g.order();
  const Params base{{"d", std::to_string(d)}, {"p", std::to_string(p)},
                    {"depth", std::to_string(opts.depth)}};
  Report r;

  // Tags a triad's report with its component index.
  auto tagged = [](Report part, std::size_t alpha) {
    Report out;
    for (CheckResult c : part.checks()) {
      c.params.emplace_back("component", std::to_string(alpha));
      out.add(std::move(c));
    }
    return out;
  };
  for (std::size_t a = 1; a <= p; ++a)
    r.append(tagged(verify_seed_condition(g.triad(a), opts.jobs), a));

  // Seeds of different components commute, also with adjoints.
  {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 1; a <= p; ++a)
      for (std::size_t b = 1; b <= p; ++b)
        if (a != b) pairs.emplace_back(a, b);
    r.add(detail::sweep(
        "green.seed_commutation", base, pairs.size(), opts.jobs,
        [&](std::size_t k) -> std::optional<std::string> {
          auto [a, b] = pairs[k];
          const Element& x = g.triad(a).seeds()[0];
          const Element& y = g.triad(b).seeds()[0];
          Element c1 = normal_form(commutator(x, y));
          if (!c1.is_zero())
            return "[" + comp(a, 1) + ", " + comp(b, 1) + "] = " +
                   witness_text(c1);
          Element c2 = normal_form(commutator(x, adjoint(y)));
          if (!c2.is_zero())
            return "[" + comp(a, 1) + ", " + comp(b, 1) + "*] = " +
                   witness_text(c2);
          return std::nullopt;
        }));
  }

  // Recursive conditions: anticommute with own map, commute with others.
  const auto xs = monomials_up_to_depth(d, opts.depth);
  for (std::size_t a = 1; a <= p; ++a)
    for (std::size_t b = 1; b <= p; ++b) {
      const int sign = a == b ? 1 : -1;
      const Element& seed = g.triad(a).seeds()[0];
      const RecursiveMap& zeta = g.triad(b).zeta();
      Params params = base;
      params.emplace_back("seed", std::to_string(a));
      params.emplace_back("map", std::to_string(b));
      const std::string name =
          a == b ? "green.recursive_anticommutation" : "green.recursive_commutation";
      CheckResult sampled = detail::sweep(
          name, params, xs.size(), opts.jobs,
          [&](std::size_t k) -> std::optional<std::string> {
            const Element zx = zeta.apply(Element(d, xs[k]));
            Element v = normal_form(seed * zx + zx * seed * sign);
            if (v.is_zero()) return std::nullopt;
            return "X = " + to_string(xs[k]) + ": " + witness_text(v);
          });
      CheckResult cert = detail::single(name + ".certificate", params,
                                        sandwich_certificate(seed, zeta, sign));
      if (!cert.passed() && sampled.passed())
        cert.outcome = Outcome::inconclusive;
      r.add(std::move(cert));
      r.add(std::move(sampled));
    }

  for (std::size_t a = 1; a <= p; ++a) {
    CheckResult adj = detail::single(
        "green.adjoint_certificate", base,
        g.triad(a).zeta().is_self_adjoint()
            ? std::nullopt
            : std::optional<std::string>("zeta_" + std::to_string(a) +
                                         " is not self-adjoint"));
    adj.params.emplace_back("map", std::to_string(a));
    r.add(std::move(adj));
    r.append(tagged(verify_normalization(g.triad(a), opts.depth, opts.jobs), a));
  }

  // [X, Y] = 0 implies [zeta_a(X), zeta_b(Y)] = 0.
  const auto ys = monomials_up_to_depth(d, cross_depth);
  std::vector<std::pair<std::size_t, std::size_t>> commuting;
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (equals(Element(d, ys[i]) * Element(d, ys[j]),
                 Element(d, ys[j]) * Element(d, ys[i])))
        commuting.emplace_back(i, j);
  Params cross = base;
  cross.back() = {"depth", std::to_string(cross_depth)};
  r.add(detail::sweep(
      "green.cross_commutation", cross, commuting.size() * p * p, opts.jobs,
      [&](std::size_t k) -> std::optional<std::string> {
        const auto [i, j] = commuting[k / (p * p)];
        const std::size_t a = (k % (p * p)) / p + 1, b = k % p + 1;
        const Element zx = g.triad(a).zeta().apply(Element(d, ys[i]));
        const Element zy = g.triad(b).zeta().apply(Element(d, ys[j]));
        Element c = normal_form(commutator(zx, zy));
        if (c.is_zero()) return std::nullopt;
        return "X = " + to_string(ys[i]) + ", Y = " + to_string(ys[j]) +
               ": [zeta_" + std::to_string(a) + "(X), zeta_" +
               std::to_string(b) + "(Y)] = " + witness_text(c);
      }));
  return r;
}

Report verify_green_relations(const GreenSystem& g, std::size_t L,
                              unsigned jobs) {
  if (L < 1) throw std::invalid_argument("L must be >= 1");
  const unsigned d = g.alphabet();
  const std::size_t p = g.order();
  for (std::size_t a = 1; a <= p; ++a)
    for (std::size_t n = 1; n <= L; ++n) g.green_component(a, n);

  struct Case {
    std::size_t a, b, m, n;
  };
  std::vector<Case> cases;
  for (std::size_t a = 1; a <= p; ++a)
    for (std::size_t b = 1; b <= p; ++b)
      for (std::size_t m = 1; m <= L; ++m)
        for (std::size_t n = 1; n <= L; ++n) cases.push_back({a, b, m, n});

  const Params params{{"p", std::to_string(p)}, {"L", std::to_string(L)}};
  const Element id = Element::identity(d);
  Report r;
  r.add(detail::sweep(
      "green.relations", params, cases.size(), jobs,
      [&](std::size_t k) -> std::optional<std::string> {
        const auto [a, b, m, n] = cases[k];
        const Element x = g.green_component(a, m);
        const Element y = g.green_component(b, n);
        const Element y_star = adjoint(y);
        if (a == b) {
          Element e1 = anticommutator(x, y_star);
          if (m == n) e1 -= id;
          if (auto nf = normal_form(e1); !nf.is_zero())
            return "{" + comp(a, m) + ", " + comp(b, n) + "*} - delta I = " +
                   witness_text(nf);
          if (auto nf = normal_form(anticommutator(x, y)); !nf.is_zero())
            return "{" + comp(a, m) + ", " + comp(b, n) + "} = " +
                   witness_text(nf);
        } else {
          if (auto nf = normal_form(commutator(x, y)); !nf.is_zero())
            return "[" + comp(a, m) + ", " + comp(b, n) + "] = " +
                   witness_text(nf);
          if (auto nf = normal_form(commutator(x, y_star)); !nf.is_zero())
            return "[" + comp(a, m) + ", " + comp(b, n) + "*] = " +
                   witness_text(nf);
        }
        return std::nullopt;
      }));
  return r;
}

// ---------------------------------------------------------------------------
// Parafermion relations

Report verify_trilinear(const GeneratorFamily& family, std::size_t L,
                        unsigned jobs) {
  if (L < 1) throw std::invalid_argument("L must be >= 1");
  const unsigned d = family.alphabet();
  std::vector<Element> a, a_star;
  for (std::size_t n = 1; n <= L; ++n) {
    a.push_back(family(n));
    a_star.push_back(adjoint(a.back()));
  }
  // Inner commutators in normal form, indexed [m][n].
  auto inner = [&](const std::vector<Element>& x, const std::vector<Element>& y) {
    std::vector<std::vector<Element>> out(L);
    for (std::size_t m = 0; m < L; ++m)
      for (std::size_t n = 0; n < L; ++n)
        out[m].push_back(normal_form(commutator(x[m], y[n])));
    return out;
  };
  const auto aa = inner(a, a);
  const auto sa = inner(a_star, a);
  const auto ss = inner(a_star, a_star);

  const Params params{{"d", std::to_string(d)}, {"L", std::to_string(L)}};
  const std::size_t cases = L * L * L;
  auto idx = [L](std::size_t k) {
    return std::array<std::size_t, 3>{k / (L * L), (k / L) % L, k % L};
  };
  auto label = [](const char* form, std::size_t l, std::size_t m, std::size_t n) {
    return std::string(form) + " with l=" + std::to_string(l + 1) +
           ", m=" + std::to_string(m + 1) + ", n=" + std::to_string(n + 1);
  };

  Report r;
  r.add(detail::sweep(
      "trilinear.double_commutator", params, cases, jobs,
      [&](std::size_t k) -> std::optional<std::string> {
        auto [l, m, n] = idx(k);
        Element v = normal_form(commutator(a[l], aa[m][n]));
        if (v.is_zero()) return std::nullopt;
        return label("[a_l, [a_m, a_n]]", l, m, n) + " = " + witness_text(v);
      }));
  r.add(detail::sweep(
      "trilinear.number", params, cases, jobs,
      [&](std::size_t k) -> std::optional<std::string> {
        auto [l, m, n] = idx(k);
        Element v = commutator(a[l], sa[m][n]);
        if (l == m) v -= a[n] * 2;
        if (auto nf = normal_form(v); !nf.is_zero())
          return label("[a_l, [a_m*, a_n]] - 2 d_lm a_n", l, m, n) + " = " +
                 witness_text(nf);
        return std::nullopt;
      }));
  r.add(detail::sweep(
      "trilinear.double_commutator_adjoint", params, cases, jobs,
      [&](std::size_t k) -> std::optional<std::string> {
        auto [l, m, n] = idx(k);
        Element v = normal_form(commutator(a_star[l], ss[m][n]));
        if (v.is_zero()) return std::nullopt;
        return label("[a_l*, [a_m*, a_n*]]", l, m, n) + " = " + witness_text(v);
      }));
  r.add(detail::sweep(
      "trilinear.number_adjoint", params, cases, jobs,
      [&](std::size_t k) -> std::optional<std::string> {
        auto [l, m, n] = idx(k);
        // [a_l*, [a_n*, a_m]] = -2 d_lm a_n*, with [a_n*, a_m] = sa[n][m].
        Element v = commutator(a_star[l], sa[n][m]);
        if (l == m) v += a_star[n] * 2;
        if (auto nf = normal_form(v); !nf.is_zero())
          return label("[a_l*, [a_n*, a_m]] + 2 d_lm a_n*", l, m, n) + " = " +
                 witness_text(nf);
        return std::nullopt;
      }));
  r.add(detail::sweep(
      "trilinear.mixed", params, cases, jobs,
      [&](std::size_t k) -> std::optional<std::string> {
        auto [l, m, n] = idx(k);
        Element v = commutator(a[l], ss[m][n]);
        if (l == m) v -= a_star[n] * 2;
        if (l == n) v += a_star[m] * 2;
        if (auto nf = normal_form(v); !nf.is_zero())
          return label("[a_l, [a_m*, a_n*]] - 2 d_lm a_n* + 2 d_ln a_m*", l, m,
                       n) +
                 " = " + witness_text(nf);
        return std::nullopt;
      }));
  return r;
}

Report verify_trilinear(const GreenSystem& g, std::size_t L, unsigned jobs) {
  return verify_trilinear(g.parafermion_family(), L, jobs);
}

Element number_operator(const Element& a) {
  return commutator(adjoint(a), a) * Coefficient(1, 2);
}

Report verify_spectrum_polynomial(const GeneratorFamily& family,
                                  std::size_t order, std::size_t L,
                                  unsigned jobs) {
  if (L < 1) throw std::invalid_argument("L must be >= 1");
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  const unsigned d = family.alphabet();
  for (std::size_t n = 1; n <= L; ++n) family(n);
  const Element id = Element::identity(d);
  Report r;
  r.add(detail::sweep(
      "spectrum_polynomial",
      {{"p", std::to_string(order)}, {"L", std::to_string(L)}}, L, jobs,
      [&](std::size_t k) -> std::optional<std::string> {
        const Element N = normal_form(number_operator(family(k + 1)));
        Element prod = id;
        for (std::size_t j = 0; j <= order; ++j) {
          const Coefficient shift =
              Coefficient(static_cast<long>(j)) -
              Coefficient(static_cast<long>(order), 2);
          prod = normal_form(prod * (N + id * shift));
        }
        if (prod.is_zero()) return std::nullopt;
        return "n=" + std::to_string(k + 1) + ": product = " +
               witness_text(prod);
      }));
  return r;
}

Report verify_spectrum_polynomial(const GreenSystem& g, std::size_t L,
                                  unsigned jobs) {
  return verify_spectrum_polynomial(g.parafermion_family(), g.order(), L, jobs);
}

Report verify_parafermion_vacuum(const GeneratorFamily& family,
                                 std::size_t order, std::size_t L,
                                 unsigned jobs) {
  if (L < 1) throw std::invalid_argument("L must be >= 1");
  for (std::size_t n = 1; n <= L; ++n) family(n);
  const StateVector vacuum = StateVector::basis(1);
  const Params params{{"p", std::to_string(order)}, {"L", std::to_string(L)}};
  Report r;
  r.add(detail::sweep(
      "parafermion.vacuum", params, L, jobs,
      [&](std::size_t k) -> std::optional<std::string> {
        StateVector v = rep_apply(family(k + 1), vacuum);
        if (v.is_zero()) return std::nullopt;
        return "a" + std::to_string(k + 1) + " e_1 = " + to_string(v);
      }));
  r.add(detail::sweep(
      "parafermion.vacuum_pairing", params, L * L, jobs,
      [&](std::size_t k) -> std::optional<std::string> {
        const std::size_t m = k / L + 1, n = k % L + 1;
        StateVector v = rep_apply(family(m), rep_apply(adjoint(family(n)), vacuum));
        StateVector expected;
        if (m == n) expected.add(1, static_cast<long>(order));
        if (v == expected) return std::nullopt;
        return "a" + std::to_string(m) + " a" + std::to_string(n) +
               "* e_1 = " + to_string(v) + ", expected " + to_string(expected);
      }));
  return r;
}

Report verify_parafermion_vacuum(const GreenSystem& g, std::size_t L,
                                 unsigned jobs) {
  return verify_parafermion_vacuum(g.parafermion_family(), g.order(), L, jobs);
}

// ---------------------------------------------------------------------------
// Klein transformation

Element klein_factor(const GeneratorFamily& family,
                     const std::vector<std::size_t>& modes) {
  const unsigned d = family.alphabet();
  const Element id = Element::identity(d);
  Element out = id;
  for (std::size_t k : modes) {
    const Element a = family(k);
    out = out * (id - adjoint(a) * a * 2);
  }
  return out;
}

Element klein_factor(const RfsSystem& sys,
                     const std::vector<std::size_t>& modes) {
  return klein_factor(sys.family(), modes);
}

Report verify_klein_identities(std::size_t L, std::size_t depth,
                               unsigned jobs) {
  if (L < 1) throw std::invalid_argument("L must be >= 1");
  const RfsSystem car = standard_rfs_p(2);
  const GreenSystem green = build_standard_rpfs_p(2);
  const GeneratorFamily A = car.family();
  const unsigned d = car.alphabet();

  auto modes = [](std::size_t count, std::size_t offset) {
    std::vector<std::size_t> out;  // 2k - offset for k = 1..count
    for (std::size_t k = 1; k <= count; ++k) out.push_back(2 * k - offset);
    return out;
  };

  Report r;
  const Element& a1 = green.triad(1).seeds()[0];
  const Element& a2 = green.triad(2).seeds()[0];
  r.add(detail::single(
      "klein.first_seed", {},
      equals(a1, car.seeds()[0])
          ? std::nullopt
          : std::optional<std::string>("a^(1) = " + to_string(a1) +
                                       " but a_1 = " +
                                       to_string(car.seeds()[0]))));
  {
    const Element rhs = klein_factor(A, {1}) * car.seeds()[1];
    r.add(detail::single(
        "klein.second_seed", {},
        equals(a2, rhs) ? std::nullopt
                        : std::optional<std::string>(
                              "(I - 2 a_1* a_1) a_2 = " +
                              witness_text(normal_form(rhs)))));
  }

  const auto xs = monomials_up_to_depth(d, depth);
  const Params params{{"L", std::to_string(L)}, {"depth", std::to_string(depth)}};
  for (std::size_t alpha = 1; alpha <= 2; ++alpha) {
    // zeta_1 picks up the even modes, zeta_2 the odd ones.
    const std::size_t offset = alpha == 1 ? 0 : 1;
    std::vector<Element> factors;
    for (std::size_t n = 1; n <= L; ++n)
      factors.push_back(klein_factor(A, modes(n - 1, offset)));
    r.add(detail::sweep(
        "klein.zeta_" + std::to_string(alpha), params, L * xs.size(), jobs,
        [&](std::size_t k) -> std::optional<std::string> {
          const std::size_t n = k / xs.size() + 1;
          const Element x(d, xs[k % xs.size()]);
          const Element lhs = green.triad(alpha).zeta().power(n - 1, x);
          const Element rhs = factors[n - 1] * car.zeta().power(n - 1, x);
          if (equals(lhs, rhs)) return std::nullopt;
          return "n=" + std::to_string(n) + ", X = " + to_string(x) +
                 ": zeta_" + std::to_string(alpha) + "^{n-1}(X) = " +
                 witness_text(normal_form(lhs)) + " but Klein form = " +
                 witness_text(normal_form(rhs));
        }));
  }

  r.add(detail::sweep(
      "klein.green_components", params, 2 * L, jobs,
      [&](std::size_t k) -> std::optional<std::string> {
        const std::size_t alpha = k / L + 1, n = k % L + 1;
        const Element lhs = green.green_component(alpha, n);
        const Element rhs =
            alpha == 1 ? klein_factor(A, modes(n - 1, 0)) * A(2 * n - 1)
                       : klein_factor(A, modes(n, 1)) * A(2 * n);
        if (equals(lhs, rhs)) return std::nullopt;
        return comp(alpha, n) + " = " + witness_text(normal_form(lhs)) +
               " but Klein form = " + witness_text(normal_form(rhs));
      }));
  return r;
}

PfaContainment pfa_containment(const GreenSystem& g) {
  const std::size_t full = std::size_t{g.alphabet()} * g.alphabet();
  PfaContainment out;
  out.parafermion = span_dimension({g.parafermion_generator(1)}, 1, 2 * full);
  std::vector<Element> comps;
  for (std::size_t a = 1; a <= g.order(); ++a)
    comps.push_back(g.green_component(a, 1));
  out.green = span_dimension(comps, 1, 2 * full);
  return out;
}

}  // namespace cuntz
