#include "cuntz/rfs.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "cuntz/error.hpp"
#include "cuntz/rank.hpp"
#include "cuntz/text.hpp"
#include "sweep.hpp"

namespace cuntz {

using detail::Params;

// ---------------------------------------------------------------------------
// RecursiveMap

RecursiveMap::RecursiveMap(unsigned d, std::vector<Sandwich> terms)
    : d_(d), terms_(std::move(terms)) {
  if (d < 2) throw std::invalid_argument("alphabet size must be >= 2");
  for (const auto& t : terms_) {
    if (t.sign != 1 && t.sign != -1)
      throw std::invalid_argument("recursive map signs must be +1 or -1");
    check_alphabet(Monomial{{t.left}, {t.right}}, d);
  }
}

RecursiveMap RecursiveMap::diagonal(const std::vector<int>& signs) {
  std::vector<Sandwich> terms;
  for (std::size_t i = 0; i < signs.size(); ++i)
    terms.push_back({signs[i], static_cast<Letter>(i + 1),
                     static_cast<Letter>(i + 1)});
  return RecursiveMap(static_cast<unsigned>(signs.size()), std::move(terms));
}

Element RecursiveMap::apply(const Element& x) const {
  if (x.alphabet() != d_) throw AlphabetMismatch(d_, x.alphabet());
  Element out(d_);
  for (const auto& t : terms_)
    for (const auto& [m, c] : x.terms()) {
      Monomial s = m;
      s.create.insert(s.create.begin(), t.left);
      s.annihilate.insert(s.annihilate.begin(), t.right);
      out.add_term(std::move(s), c * t.sign);
    }
  enforce_limit(out.size());
  return out;
}

Element RecursiveMap::power(std::size_t n, const Element& x) const {
  Element out = x;
  for (std::size_t k = 0; k < n; ++k) out = apply(out);
  return out;
}

RecursiveMap RecursiveMap::with_flipped_sign(std::size_t term) const {
  RecursiveMap out = *this;
  out.terms_.at(term).sign = -out.terms_.at(term).sign;
  return out;
}

bool RecursiveMap::is_self_adjoint() const {
  std::multiset<std::tuple<int, Letter, Letter>> fwd, rev;
  for (const auto& t : terms_) {
    fwd.emplace(t.sign, t.left, t.right);
    rev.emplace(t.sign, t.right, t.left);
  }
  return fwd == rev;
}

Element apply_zeta(const RecursiveMap& z, const Element& x) {
  return z.apply(x);
}

Element zeta_power(const RecursiveMap& z, std::size_t n, const Element& x) {
  return z.power(n, x);
}

// ---------------------------------------------------------------------------
// RfsSystem

struct RfsSystem::Memo {
  std::mutex mutex;
  std::map<std::pair<std::size_t, std::size_t>, Element> powers;
};

RfsSystem::RfsSystem(std::vector<Element> seeds, RecursiveMap zeta,
                     Endomorphism phi)
    : seeds_(std::move(seeds)),
      zeta_(std::move(zeta)),
      phi_(std::move(phi)),
      memo_(std::make_shared<Memo>()) {
  if (seeds_.empty()) throw std::invalid_argument("system needs a seed");
  for (const auto& a : seeds_)
    if (a.alphabet() != zeta_.alphabet())
      throw AlphabetMismatch(zeta_.alphabet(), a.alphabet());
  if (phi_.alphabet() != zeta_.alphabet())
    throw AlphabetMismatch(zeta_.alphabet(), phi_.alphabet());
}

Element RfsSystem::seed_power(std::size_t seed, std::size_t power) const {
  if (seed >= seeds_.size()) throw std::out_of_range("seed index");
  // Find the highest cached power at or below the request and continue
  // from there.
  std::size_t from = 0;
  Element value = seeds_[seed];
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->powers.upper_bound({seed, power});
    if (it != memo_->powers.begin()) {
      --it;
      if (it->first.first == seed) {
        from = it->first.second;
        value = it->second;
      }
    }
  }
  for (std::size_t k = from; k < power; ++k) {
    value = zeta_.apply(value);
    std::lock_guard lock(memo_->mutex);
    memo_->powers.try_emplace({seed, k + 1}, value);
  }
  return value;
}

Element RfsSystem::embed_generator(std::size_t n) const {
  if (n < 1) throw std::out_of_range("generator index must be >= 1");
  const std::size_t p = seeds_.size();
  return seed_power((n - 1) % p, (n - 1) / p);
}

GeneratorFamily RfsSystem::family() const {
  RfsSystem self = *this;
  return GeneratorFamily(alphabet(), [self](std::size_t n) {
    return self.embed_generator(n);
  });
}

// ---------------------------------------------------------------------------
// Constructions

int floor_sign(std::size_t x, unsigned count) {
  std::size_t exponent = 0;
  for (unsigned m = 1; m <= count; ++m) exponent += x >> (m - 1);
  return exponent % 2 == 0 ? 1 : -1;
}

RfsSystem standard_rfs_o2() {
  return RfsSystem({parse_element("s1 s2*", 2)},
                   RecursiveMap::diagonal({1, -1}),
                   Endomorphism::canonical(2));
}

RfsSystem generalized_rfs_o2d(const std::vector<Letter>& first,
                              const std::vector<Letter>& second,
                              const std::vector<int>& eps,
                              const std::vector<int>& eps_prime,
                              const VerifyOptions& opts) {
  const std::size_t half = first.size();
  if (half == 0 || second.size() != half || eps.size() != half ||
      eps_prime.size() != half)
    throw std::invalid_argument(
        "split parts and sign lists must share one nonzero length");
  const unsigned d = static_cast<unsigned>(2 * half);
  std::vector<bool> seen(d + 1, false);
  for (const auto* part : {&first, &second})
    for (Letter l : *part) {
      if (l < 1 || l > d || seen[l])
        throw std::invalid_argument("split is not a disjoint cover of {1.." +
                                    std::to_string(d) + "}");
      seen[l] = true;
    }
  if (first[0] != 1) throw std::invalid_argument("first part must start at 1");
  if (eps[0] != 1 || eps_prime[0] != 1)
    throw std::invalid_argument("leading signs must be +1");
  for (const auto* signs : {&eps, &eps_prime})
    for (int s : *signs)
      if (s != 1 && s != -1)
        throw std::invalid_argument("signs must be +1 or -1");

  Element seed(d);
  std::vector<Sandwich> zeta;
  for (std::size_t k = 0; k < half; ++k) {
    seed.add_term(Monomial{{first[k]}, {second[k]}}, eps[k]);
    zeta.push_back({eps_prime[k], first[k], first[k]});
    zeta.push_back({-eps_prime[k], second[k], second[k]});
  }
  RfsSystem sys({seed}, RecursiveMap(d, std::move(zeta)),
                Endomorphism::canonical(d));
  Report r = verify_rfs(sys, opts);
  if (!r.passed()) {
    const CheckResult* f = r.first_failure();
    throw ValidationError("generalized system fails " + f->check +
                          (f->witness ? ": " + *f->witness : std::string{}));
  }
  return sys;
}

RfsSystem standard_rfs_p(unsigned p, unsigned p_max) {
  if (p < 1 || p > p_max)
    throw std::out_of_range("p must lie in [1, " + std::to_string(p_max) +
                            "], got " + std::to_string(p));
  const unsigned d = 1u << p;
  std::vector<Element> seeds;
  for (unsigned i = 1; i <= p; ++i) {
    Element a(d);
    for (std::size_t k = 1; k <= (std::size_t{1} << (p - i)); ++k)
      for (std::size_t l = 1; l <= (std::size_t{1} << (i - 1)); ++l) {
        const auto create = static_cast<Letter>((std::size_t{1} << i) * (k - 1) + l);
        const auto annihilate =
            static_cast<Letter>((std::size_t{1} << (i - 1)) * (2 * k - 1) + l);
        a.add_term(Monomial{{create}, {annihilate}}, floor_sign(l - 1, i - 1));
      }
    seeds.push_back(std::move(a));
  }
  std::vector<int> signs;
  for (std::size_t i = 1; i <= d; ++i) signs.push_back(floor_sign(i - 1, p));
  return RfsSystem(std::move(seeds), RecursiveMap::diagonal(signs),
                   Endomorphism::canonical(d));
}

// ---------------------------------------------------------------------------
// Verification

std::string witness_text(const Element& x, std::size_t limit) {
  std::string s = to_string(x);
  if (s.size() > limit) s = s.substr(0, limit) + " ... (" +
                            std::to_string(x.size()) + " terms)";
  return s;
}

namespace {

std::string seed_name(std::size_t i) { return "a" + std::to_string(i + 1); }

Params depth_params(const RfsSystem& sys, std::size_t depth) {
  return {{"d", std::to_string(sys.alphabet())},
          {"seeds", std::to_string(sys.seed_count())},
          {"depth", std::to_string(depth)}};
}

}  // namespace

Report verify_seed_condition(const RfsSystem& sys, unsigned jobs) {
  const unsigned d = sys.alphabet();
  const std::size_t p = sys.seed_count();
  const Element id = Element::identity(d);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i; j < p; ++j) pairs.emplace_back(i, j);

  const Params params{{"d", std::to_string(d)}, {"seeds", std::to_string(p)}};
  Report r;
  r.add(detail::sweep(
      "seed.anticommutator", params, pairs.size(), jobs,
      [&](std::size_t k) -> std::optional<std::string> {
        auto [i, j] = pairs[k];
        Element ac = anticommutator(sys.seeds()[i], sys.seeds()[j]);
        Element nf = normal_form(ac);
        if (nf.is_zero()) return std::nullopt;
        return "{" + seed_name(i) + ", " + seed_name(j) +
               "} = " + witness_text(nf);
      }));
  r.add(detail::sweep(
      "seed.adjoint_anticommutator", params, p * p, jobs,
      [&](std::size_t k) -> std::optional<std::string> {
        const std::size_t i = k / p, j = k % p;
        Element ac = anticommutator(sys.seeds()[i], adjoint(sys.seeds()[j]));
        Element diff = ac - (i == j ? id : Element::zero(d));
        if (normal_form(diff).is_zero()) return std::nullopt;
        return "{" + seed_name(i) + ", " + seed_name(j) +
               "*} = " + witness_text(normal_form(ac)) + ", expected " +
               (i == j ? "I" : "0");
      }));
  return r;
}

std::optional<std::string> tensor_certificate(
    const std::vector<std::pair<Element, Element>>& terms) {
  if (terms.empty()) return std::nullopt;
  const unsigned d = terms.front().first.alphabet();

  // Raise each side, per excess class, to a common creation length: the
  // resulting fixed-shape words are linearly independent, so the tensor
  // vanishes iff every coefficient below does.
  std::map<long, std::size_t> left_len, right_len;
  for (const auto& [l, r] : terms) {
    for (const auto& [m, c] : l.terms()) {
      auto& len = left_len[m.excess()];
      len = std::max(len, m.create.size());
    }
    for (const auto& [m, c] : r.terms()) {
      auto& len = right_len[m.excess()];
      len = std::max(len, m.create.size());
    }
  }
  auto raise = [d](const Element& x, const std::map<long, std::size_t>& len) {
    Element out(d);
    for (const auto& [m, c] : x.terms()) {
      Element piece(d, m, c);
      while (piece.terms().begin()->first.create.size() < len.at(m.excess())) {
        Element next(d);
        for (const auto& [pm, pc] : piece.terms())
          next += raise_monomial(pm, d) * pc;
        piece = std::move(next);
      }
      out += piece;
    }
    return out;
  };

  std::map<std::pair<Monomial, Monomial>, Coefficient,
           decltype([](const auto& x, const auto& y) {
             MonomialOrder o;
             if (o(x.first, y.first)) return true;
             if (o(y.first, x.first)) return false;
             return o(x.second, y.second);
           })>
      acc;
  for (const auto& [l, r] : terms) {
    const Element lr = raise(l, left_len);
    const Element rr = raise(r, right_len);
    for (const auto& [ml, cl] : lr.terms())
      for (const auto& [mr, cr] : rr.terms()) {
        auto [it, inserted] = acc.try_emplace({ml, mr}, 0);
        it->second += cl * cr;
        if (it->second == 0) acc.erase(it);
      }
  }
  if (acc.empty()) return std::nullopt;
  const auto& [key, c] = *acc.begin();
  return "surviving tensor " + to_string(c) + " (" + to_string(key.first) +
         ") x (" + to_string(key.second) + "), " + std::to_string(acc.size()) +
         " nonzero";
}

std::optional<std::string> sandwich_certificate(const Element& a,
                                                const RecursiveMap& zeta,
                                                int sign) {
  // a zeta(X) + sign zeta(X) a = sum_t sign_t [(a s_u) X s_v* + sign s_u X (s_v* a)]
  const unsigned d = a.alphabet();
  std::vector<std::pair<Element, Element>> terms;
  for (const auto& t : zeta.terms()) {
    const Element su = Element::generator(d, t.left);
    const Element sv_star = Element::generator_adjoint(d, t.right);
    terms.emplace_back(a * su * t.sign, sv_star);
    terms.emplace_back(su * (t.sign * sign), sv_star * a);
  }
  return tensor_certificate(terms);
}

Report verify_recursive_condition(const RfsSystem& sys, std::size_t depth,
                                  unsigned jobs) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  const unsigned d = sys.alphabet();
  const auto xs = monomials_up_to_depth(d, depth);
  const Params params = depth_params(sys, depth);
  Report r;

  for (std::size_t i = 0; i < sys.seed_count(); ++i) {
    const Element& a = sys.seeds()[i];
    Params pi = params;
    pi.emplace_back("seed", std::to_string(i + 1));
    CheckResult sampled = detail::sweep(
        "recursive.anticommutator", pi, xs.size(), jobs,
        [&](std::size_t k) -> std::optional<std::string> {
          const Element x(d, xs[k]);
          Element nf = normal_form(anticommutator(a, sys.zeta().apply(x)));
          if (nf.is_zero()) return std::nullopt;
          return "X = " + to_string(xs[k]) + ": {" + seed_name(i) +
                 ", zeta(X)} = " + witness_text(nf);
        });
    CheckResult cert =
        detail::single("recursive.certificate", pi,
                       sandwich_certificate(a, sys.zeta(), +1));
    if (!cert.passed() && sampled.passed())
      cert.outcome = Outcome::inconclusive;
    r.add(std::move(cert));
    r.add(std::move(sampled));
  }

  r.add(detail::single(
      "recursive.adjoint_certificate", params,
      sys.zeta().is_self_adjoint()
          ? std::nullopt
          : std::optional<std::string>("sandwich terms not symmetric under "
                                       "(u, v) -> (v, u)")));
  r.add(detail::sweep(
      "recursive.adjoint", params, xs.size(), jobs,
      [&](std::size_t k) -> std::optional<std::string> {
        const Element x(d, xs[k]);
        const Element lhs = adjoint(sys.zeta().apply(x));
        const Element rhs = sys.zeta().apply(adjoint(x));
        if (equals(lhs, rhs)) return std::nullopt;
        return "X = " + to_string(xs[k]) + ": zeta(X)* = " + witness_text(lhs) +
               " but zeta(X*) = " + witness_text(rhs);
      }));
  return r;
}

Report verify_normalization(const RfsSystem& sys, std::size_t depth,
                            unsigned jobs) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  const unsigned d = sys.alphabet();
  const auto xs = monomials_up_to_depth(d, depth);
  std::vector<Element> zx;
  zx.reserve(xs.size());
  for (const auto& m : xs) zx.push_back(sys.zeta().apply(Element(d, m)));

  const std::size_t n = xs.size();
  Report r;
  r.add(detail::sweep(
      "normalization", depth_params(sys, depth), n * n, jobs,
      [&](std::size_t k) -> std::optional<std::string> {
        const std::size_t i = k / n, j = k % n;
        const Element lhs = zx[i] * zx[j];
        Element rhs(d);
        if (auto xy = multiply(xs[i], xs[j])) rhs = sys.phi().apply(*xy);
        if (equals(lhs, rhs)) return std::nullopt;
        return "X = " + to_string(xs[i]) + ", Y = " + to_string(xs[j]) +
               ": zeta(X) zeta(Y) = " + witness_text(normal_form(lhs)) +
               " but phi(XY) = " + witness_text(normal_form(rhs));
      }));
  return r;
}

Report verify_rfs(const RfsSystem& sys, const VerifyOptions& opts) {
  Report r = verify_seed_condition(sys, opts.jobs);
  r.append(verify_recursive_condition(sys, opts.depth, opts.jobs));
  r.append(verify_normalization(sys, opts.depth, opts.jobs));
  return r;
}

Report verify_car(const GeneratorFamily& family, std::size_t N,
                  unsigned jobs) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  const unsigned d = family.alphabet();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t m = 1; m <= N; ++m)
    for (std::size_t n = m; n <= N; ++n) pairs.emplace_back(m, n);
  // Warm the cache in order so parallel cases only read it.
  for (std::size_t n = 1; n <= N; ++n) family(n);

  const Params params{{"d", std::to_string(d)}, {"N", std::to_string(N)}};
  const Element id = Element::identity(d);
  Report r;
  r.add(detail::sweep(
      "car.anticommutator", params, pairs.size(), jobs,
      [&](std::size_t k) -> std::optional<std::string> {
        auto [m, n] = pairs[k];
        Element nf = normal_form(anticommutator(family(m), family(n)));
        if (nf.is_zero()) return std::nullopt;
        return "{A" + std::to_string(m) + ", A" + std::to_string(n) +
               "} = " + witness_text(nf);
      }));
  r.add(detail::sweep(
      "car.adjoint_anticommutator", params, pairs.size(), jobs,
      [&](std::size_t k) -> std::optional<std::string> {
        auto [m, n] = pairs[k];
        Element ac = anticommutator(family(m), adjoint(family(n)));
        if (m == n) ac -= id;
        Element nf = normal_form(ac);
        if (nf.is_zero()) return std::nullopt;
        return "{A" + std::to_string(m) + ", A" + std::to_string(n) +
               "*} - delta I = " + witness_text(nf);
      }));
  return r;
}

Report verify_car(const RfsSystem& sys, std::size_t N, unsigned jobs) {
  return verify_car(sys.family(), N, jobs);
}

GeneratorFamily compose_with_endomorphism(const RfsSystem& sys,
                                          const Endomorphism& e) {
  if (e.alphabet() != sys.alphabet())
    throw AlphabetMismatch(sys.alphabet(), e.alphabet());
  return sys.family().transformed(
      [e](const Element& x) { return e.apply(x); });
}

// ---------------------------------------------------------------------------
// Span / rank

namespace {

using Coordinates = std::map<Monomial, Coefficient, MonomialOrder>;

Coordinates matrix_unit_coordinates(const Element& x, std::size_t k) {
  const unsigned d = x.alphabet();
  Element raised(d);
  for (const auto& [m, c] : x.terms()) {
    if (m.excess() != 0 || m.create.size() > k)
      throw std::domain_error("word term " + to_string(m) +
                              " lies outside the depth-" + std::to_string(k) +
                              " matrix units");
    Element piece(d, m, c);
    for (std::size_t len = m.create.size(); len < k; ++len) {
      Element next(d);
      for (const auto& [pm, pc] : piece.terms())
        next += raise_monomial(pm, d) * pc;
      piece = std::move(next);
    }
    raised += piece;
  }
  return Coordinates(raised.terms().begin(), raised.terms().end());
}

}  // namespace

SpanDimension span_dimension(const std::vector<Element>& generators,
                             std::size_t k, std::size_t max_word_length,
                             std::size_t basis_cap) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  const unsigned d = generators.front().alphabet();
  std::size_t full = 1;
  for (std::size_t i = 0; i < 2 * k; ++i) {
    full *= d;
    if (basis_cap != 0 && full > basis_cap)
      throw ResourceLimitError(full, basis_cap);
  }

  std::vector<Element> letters;
  for (const auto& g : generators) {
    letters.push_back(g);
    letters.push_back(adjoint(g));
  }

  SpanDimension out;
  out.full = full;
  out.generators = generators.size();
  out.max_word_length = max_word_length;

  RowEchelon<Monomial, MonomialOrder> echelon;
  std::vector<Element> frontier{Element::identity(d)};
  echelon.insert(matrix_unit_coordinates(frontier.front(), k));
  for (std::size_t len = 1; len <= max_word_length && !frontier.empty() &&
                            echelon.rank() < full;
       ++len) {
    std::vector<Element> next;
    for (const auto& w : frontier)
      for (const auto& g : letters) {
        Element prod = w * g;
        if (prod.is_zero()) continue;
        if (echelon.insert(matrix_unit_coordinates(prod, k)))
          next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  out.rank = echelon.rank();
  return out;
}

SpanDimension span_dimension_check(const RfsSystem& sys, std::size_t k,
                                   std::size_t basis_cap) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const std::size_t count = sys.seed_count() * k;
  std::vector<Element> gens;
  for (std::size_t n = 1; n <= count; ++n) gens.push_back(sys.embed_generator(n));
  return span_dimension(gens, k, 2 * count, basis_cap);
}

}  // namespace cuntz
