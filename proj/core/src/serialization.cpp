#include "cuntz/serialization.hpp"

#include "cuntz/error.hpp"
#include "cuntz/text.hpp"

namespace cuntz {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + '"');
  return *it;
}

long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<long>();
}

unsigned alphabet_of(const Json& j) {
  const long d = integer(field(j, "d"), "d");
  if (d < 2 || d > 65535) throw ParseError("d must lie in [2, 65535]");
  return static_cast<unsigned>(d);
}

Word word(const Json& j, unsigned d) {
  if (!j.is_array()) throw ParseError("letters must be an array");
  Word w;
  for (const auto& x : j) {
    const long i = integer(x, "letter");
    if (i < 1 || i > static_cast<long>(d))
      throw ParseError("letter " + std::to_string(i) + " outside {1.." +
                       std::to_string(d) + "}");
    w.push_back(static_cast<Letter>(i));
  }
  return w;
}

Coefficient coefficient(const Json& j) {
  if (j.is_string()) return parse_coefficient(j.get<std::string>());
  if (j.is_number_integer()) return Coefficient(j.get<long>());
  throw ParseError("coefficient must be a string \"p/q\"");
}

Json letters(const Word& w) {
  Json out = Json::array();
  for (Letter l : w) out.push_back(l);
  return out;
}

Json zeta_json(const RecursiveMap& z) {
  Json out = Json::array();
  for (const auto& t : z.terms())
    out.push_back({{"sign", t.sign}, {"left", t.left}, {"right", t.right}});
  return out;
}

RecursiveMap zeta_from_json(const Json& j, unsigned d) {
  if (!j.is_array()) throw ParseError("zeta must be an array of sandwiches");
  std::vector<Sandwich> terms;
  for (const auto& t : j) {
    const long sign = integer(field(t, "sign"), "sign");
    const long left = integer(field(t, "left"), "left");
    const long right = integer(field(t, "right"), "right");
    if (sign != 1 && sign != -1) throw ParseError("sign must be 1 or -1");
    if (left < 1 || right < 1 || left > static_cast<long>(d) ||
        right > static_cast<long>(d))
      throw ParseError("zeta letter out of range");
    terms.push_back({static_cast<int>(sign), static_cast<Letter>(left),
                     static_cast<Letter>(right)});
  }
  return RecursiveMap(d, std::move(terms));
}

Json phi_json(const Endomorphism& e) {
  if (e.images() == Endomorphism::canonical(e.alphabet()).images())
    return "rho";
  return to_json(e);
}

Endomorphism phi_from_json(const Json& j, unsigned d) {
  if (j.is_string()) {
    if (j.get<std::string>() != "rho")
      throw ParseError("phi must be \"rho\" or an endomorphism object");
    return Endomorphism::canonical(d);
  }
  Endomorphism e = endomorphism_from_json(j);
  if (e.alphabet() != d) throw AlphabetMismatch(d, e.alphabet());
  return e;
}

Element element_over(const Json& j, unsigned d) {
  Element x = element_from_json(j);
  if (x.alphabet() != d) throw AlphabetMismatch(d, x.alphabet());
  return x;
}

void expect_type(const Json& j, const char* type) {
  if (auto it = j.find("type"); it != j.end() && *it != type)
    throw ParseError(std::string("expected \"type\": \"") + type + '"');
}

}  // namespace

Json to_json(const Element& x) {
  Json terms = Json::array();
  for (const auto& [m, c] : x.terms())
    terms.push_back({{"coeff", to_string(c)},
                     {"create", letters(m.create)},
                     {"annihilate", letters(m.annihilate)}});
  return {{"d", x.alphabet()}, {"terms", std::move(terms)}};
}

Element element_from_json(const Json& j) {
  const unsigned d = alphabet_of(j);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("terms must be an array");
  Element x(d);
  for (const auto& t : terms)
    x.add_term(Monomial{word(field(t, "create"), d),
                        word(field(t, "annihilate"), d)},
               coefficient(field(t, "coeff")));
  return x;
}

Json to_json(const StateVector& v) {
  Json terms = Json::array();
  for (const auto& [n, c] : v.terms())
    terms.push_back({{"index", n.get_str()}, {"coeff", to_string(c)}});
  return {{"terms", std::move(terms)}};
}

StateVector state_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("terms must be an array");
  StateVector v;
  for (const auto& t : terms) {
    const Json& idx = field(t, "index");
    BasisIndex n;
    if (idx.is_string()) {
      if (n.set_str(idx.get<std::string>(), 10) != 0)
        throw ParseError("index must be a decimal string");
    } else {
      n = integer(idx, "index");
    }
    if (n < 1) throw ParseError("index must be >= 1");
    v.add(n, coefficient(field(t, "coeff")));
  }
  return v;
}

Json to_json(const Endomorphism& e) {
  Json images = Json::array();
  for (const auto& g : e.images()) images.push_back(to_json(g));
  return {{"d", e.alphabet()}, {"images", std::move(images)}};
}

Endomorphism endomorphism_from_json(const Json& j) {
  const unsigned d = alphabet_of(j);
  const Json& images = field(j, "images");
  if (!images.is_array() || images.size() != d)
    throw ParseError("images must be an array of d elements");
  std::vector<Element> gs;
  for (const auto& g : images) gs.push_back(element_over(g, d));
  return make_endomorphism(std::move(gs));
}

Json to_json(const RfsSystem& sys) {
  Json seeds = Json::array();
  for (const auto& a : sys.seeds()) seeds.push_back(to_json(a));
  return {{"type", "rfs"},
          {"d", sys.alphabet()},
          {"seeds", std::move(seeds)},
          {"zeta", zeta_json(sys.zeta())},
          {"phi", phi_json(sys.phi())}};
}

RfsSystem rfs_from_json(const Json& j) {
  expect_type(j, "rfs");
  const unsigned d = alphabet_of(j);
  const Json& seeds = field(j, "seeds");
  if (!seeds.is_array() || seeds.empty())
    throw ParseError("seeds must be a nonempty array");
  std::vector<Element> as;
  for (const auto& a : seeds) as.push_back(element_over(a, d));
  return RfsSystem(std::move(as), zeta_from_json(field(j, "zeta"), d),
                   phi_from_json(field(j, "phi"), d));
}

Json to_json(const GreenSystem& g) {
  Json triads = Json::array();
  for (const auto& t : g.triads())
    triads.push_back({{"seed", to_json(t.seeds()[0])},
                      {"zeta", zeta_json(t.zeta())},
                      {"phi", phi_json(t.phi())}});
  return {{"type", "rpfs"}, {"d", g.alphabet()}, {"triads", std::move(triads)}};
}

GreenSystem green_from_json(const Json& j) {
  expect_type(j, "rpfs");
  const unsigned d = alphabet_of(j);
  const Json& triads = field(j, "triads");
  if (!triads.is_array() || triads.empty())
    throw ParseError("triads must be a nonempty array");
  std::vector<RfsSystem> ts;
  for (const auto& t : triads)
    ts.emplace_back(std::vector<Element>{element_over(field(t, "seed"), d)},
                    zeta_from_json(field(t, "zeta"), d),
                    phi_from_json(field(t, "phi"), d));
  return GreenSystem(std::move(ts));
}

Json to_json(const CheckResult& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json out = {{"check", r.check},
              {"params", std::move(params)},
              {"pass", r.passed()},
              {"outcome", to_string(r.outcome)},
              {"cases", std::to_string(r.cases)}};
  if (r.witness) out["witness"] = *r.witness;
  return out;
}

std::string to_json_lines(const Report& r) {
  std::string out;
  for (const auto& c : r.checks()) out += to_json(c).dump() + '\n';
  return out;
}

}  // namespace cuntz
