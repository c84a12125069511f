// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "cuntz/element.hpp"
#include "cuntz/endomorphism.hpp"
#include "cuntz/parafermion.hpp"
#include "cuntz/representation.hpp"
#include "cuntz/rfs.hpp"
#include "cuntz/text.hpp"
#include "random_elements.hpp"

using namespace cuntz;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void require(const Report& r) {
    if (const CheckResult* f = r.first_failure())
      fail(f->check + (f->witness ? ": " + *f->witness : std::string(" ") +
                                                            to_string(f->outcome)));
  }
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

Verdict a1() {
  Verdict o;
  o.require(verify_car(standard_rfs_o2(), 8, jobs()));
  return o;
}

Verdict a2() {
  Verdict o;
  const RfsSystem sys = standard_rfs_o2();
  const auto k1 = span_dimension_check(sys, 1);
  const auto k2 = span_dimension_check(sys, 2);
  if (k1.rank != 4) o.fail("rank at k=1 is " + std::to_string(k1.rank));
  if (k2.rank != 16) o.fail("rank at k=2 is " + std::to_string(k2.rank));
  return o;
}

Verdict a3() {
  Verdict o;
  const std::vector<RfsSystem> systems{standard_rfs_o2(), standard_rfs_p(2),
                                       standard_rfs_p(3)};
  const std::vector<std::string> names{"std-o2", "std-rfs-p:2", "std-rfs-p:3"};
  for (unsigned mask = 1; mask < 64; ++mask) {
    std::vector<std::size_t> modes;
    for (std::size_t b = 0; b < 6; ++b)
      if (mask >> b & 1u) modes.push_back(b + 1);
    const ModeSet m(modes);
    const StateVector expected = StateVector::basis(fock_index(m));
    for (std::size_t s = 0; s < systems.size(); ++s) {
      const StateVector got = fock_build(systems[s], m);
      if (!(got == expected))
        o.fail(names[s] + " mask " + std::to_string(mask) + ": " +
               to_string(got) + " != " + to_string(expected));
    }
  }
  return o;
}

// Flips the coefficient of the k-th stored term.
Element flip_term(const Element& x, std::size_t k) {
  Element out(x.alphabet());
  std::size_t i = 0;
  for (const auto& [m, c] : x.terms()) out.add_term(m, i++ == k ? -c : c);
  return out;
}

bool some_suite_fails(const RfsSystem& sys, std::size_t depth) {
  if (!verify_seed_condition(sys, jobs()).passed()) return true;
  if (!verify_recursive_condition(sys, depth, jobs()).passed()) return true;
  return !verify_normalization(sys, depth, jobs()).passed();
}

Verdict a4() {
  Verdict o;
  for (unsigned p = 1; p <= 3; ++p) {
    const RfsSystem sys = standard_rfs_p(p);
    o.require(verify_rfs(sys, {2, jobs()}));
    o.require(verify_car(sys, 3 * p, jobs()));
    std::size_t mutants = 0, equivalent = 0;
    for (std::size_t i = 0; i < sys.seed_count(); ++i)
      for (std::size_t k = 0; k < sys.seeds()[i].size(); ++k) {
        auto seeds = sys.seeds();
        seeds[i] = flip_term(seeds[i], k);
        if (!some_suite_fails(RfsSystem(seeds, sys.zeta(), sys.phi()), 2)) {
          // A one-term seed flips to -a_i, which is again a fermion; such a
          // mutant must then survive every suite, CAR included.
          const RfsSystem m(seeds, sys.zeta(), sys.phi());
          if (sys.seeds()[i].size() == 1 &&
              equals(seeds[i], sys.seeds()[i] * Coefficient(-1)) &&
              verify_car(m, 3 * p, jobs()).passed()) {
            ++equivalent;
            continue;
          }
          o.fail("p=" + std::to_string(p) + ": seed " + std::to_string(i + 1) +
                 " term " + std::to_string(k + 1) + " flip survives");
        }
        ++mutants;
      }
    for (std::size_t t = 0; t < sys.zeta().terms().size(); ++t) {
      ++mutants;
      if (!some_suite_fails(
              RfsSystem(sys.seeds(), sys.zeta().with_flipped_sign(t), sys.phi()),
              2))
        o.fail("p=" + std::to_string(p) + ": zeta sign " + std::to_string(t + 1) +
               " flip survives");
    }
    if (o.ok)
      o.detail += (o.detail.empty() ? "" : ", ") + std::string("p=") +
                  std::to_string(p) + ": " + std::to_string(mutants) +
                  " mutants killed" +
                  (equivalent ? " (" + std::to_string(equivalent) +
                                    " global-sign mutant equivalent)"
                              : std::string());
  }
  return o;
}

Verdict a5() {
  Verdict o;
  const GreenSystem g = standard_rpfs2();
  o.require(verify_trilinear(g, 4, jobs()));
  o.require(verify_spectrum_polynomial(g, 3, jobs()));
  o.require(verify_parafermion_vacuum(g, 4, jobs()));
  return o;
}

Verdict a6() {
  Verdict o;
  o.require(verify_klein_identities(3, 2, jobs()));
  return o;
}

Verdict a7() {
  Verdict o;
  for (const auto& e : {Endomorphism::phi1(), Endomorphism::phi2()})
    if (auto v = validate_endomorphism(e.images()); !v.ok())
      o.fail("endomorphism check: " + v.failures().front());
  const RfsSystem sys = standard_rfs_o2();
  o.require(verify_car(compose_with_endomorphism(sys, Endomorphism::phi1()), 4,
                       jobs()));
  const auto grades =
      grade_decompose(Endomorphism::phi1().apply(sys.embed_generator(1)));
  bool off_zero = false;
  for (const auto& [g, part] : grades)
    if (g != 0 && !part.is_zero()) off_zero = true;
  if (!off_zero) o.fail("phi1(A_1) is U(1)-invariant");
  return o;
}

Verdict a8() {
  Verdict o;
  const GeneratorFamily f = bogoliubov_family(standard_rfs_o2(), ModeSet({1, 2}));
  const StateVector e4 = StateVector::basis(4);
  for (std::size_t n = 1; n <= 6; ++n)
    if (auto v = rep_apply(f(n), e4); !v.is_zero())
      o.fail("A'_" + std::to_string(n) + " e_4 = " + to_string(v));
  o.require(verify_car(f, 4, jobs()));
  return o;
}

Verdict a9(const nlohmann::json& cfg) {
  Verdict o;
  const auto seed = cfg.at("seed").get<std::uint64_t>();
  const auto count = cfg.at("elements").get<std::size_t>();
  const auto depth = cfg.at("max_depth").get<std::size_t>();
  const auto max_index = cfg.at("max_index").get<long>();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> alphabet(2, 4);
  std::size_t comparisons = 0;
  for (std::size_t k = 0; k < count && o.ok; ++k) {
    const unsigned d = alphabet(rng);
    const Element x = sample::random_element(rng, d, depth);
    const Element y = sample::random_element(rng, d, depth);
    const Element nx = normal_form(x);
    const Element xy = x * y;
    for (long n = 1; n <= max_index; ++n) {
      const StateVector e = StateVector::basis(n);
      ++comparisons;
      if (!(rep_apply(x, e) == rep_apply(nx, e)))
        o.fail("normal form changes the action of " + to_string(x) +
               " on e_" + std::to_string(n));
      if (!(rep_apply(xy, e) == rep_apply(x, rep_apply(y, e))))
        o.fail("product action differs for x = " + to_string(x) +
               ", y = " + to_string(y) + " on e_" + std::to_string(n));
    }
  }
  if (o.ok)
    o.detail = "seed " + std::to_string(seed) + ", " +
               std::to_string(comparisons) + " comparisons";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  nlohmann::json cfg;
  {
    const std::string path = argc > 1 ? argv[1] : "acceptance.json";
    std::ifstream in(path);
    if (!in) {
      std::cerr << "cannot open " << path << '\n';
      return 2;
    }
    in >> cfg;
  }

  struct Criterion {
    const char* id;
    const char* title;
    double budget;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {"A1", "CAR relations, standard O_2 system, m <= n <= 8", 10, a1},
      {"A2", "span rank 4 at k=1 and 16 at k=2", 10, a2},
      {"A3", "Fock binary index for all subsets of {1..6}, O_2 and RFS_2/RFS_3", 30, a3},
      {"A4", "RFS_p suites p=1..3 at depth 2, CAR to 3p, sign mutants killed", 60, a4},
      {"A5", "trilinear L=4, spectrum polynomial n<=3, vacuum pairing L=4 (p=2)", 60, a5},
      {"A6", "Klein identities n<=3, monomial depth 2", 30, a6},
      {"A7", "phi1/phi2 endomorphisms, CAR of phi1 family, grade witness", 10, a7},
      {"A8", "Bogoliubov flip {1,2}: vacuum e_4 and CAR m,n<=4", 10, a8},
      {"A9", "Rep(1) coherence on random elements", 60,
       [&] { return a9(cfg.at("a9")); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (o.ok && secs > c.budget)
      o.fail("took " + std::to_string(secs) + " s, budget " +
             std::to_string(c.budget) + " s");
    std::ostringstream line;
    line << c.id << ' ' << (o.ok ? "PASS" : "FAIL") << "  " << c.title << "  ["
         << std::fixed << std::setprecision(2) << secs << " s]";
    if (!o.detail.empty()) line << "  " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
