// cuntz: command-line front end to the core library.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
// schema error, 3 the term cap was hit.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "cuntz/element.hpp"
#include "cuntz/endomorphism.hpp"
#include "cuntz/error.hpp"
#include "cuntz/parafermion.hpp"
#include "cuntz/representation.hpp"
#include "cuntz/rfs.hpp"
#include "cuntz/serialization.hpp"
#include "cuntz/text.hpp"

using namespace cuntz;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kResource = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "text";
  unsigned jobs = 1;
  std::size_t max_terms = 0;
};

using System = std::variant<RfsSystem, GreenSystem>;

bool is_builtin(const std::string& spec) { return spec.rfind("std-", 0) == 0; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

unsigned parse_order(const std::string& spec, const std::string& prefix) {
  const std::string rest = spec.substr(prefix.size());
  if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("bad system spec " + spec);
  return static_cast<unsigned>(std::stoul(rest));
}

System load_system(const std::string& spec) {
  try {
    if (spec == "std-o2") return standard_rfs_o2();
    if (spec.rfind("std-rfs-p:", 0) == 0)
      return standard_rfs_p(parse_order(spec, "std-rfs-p:"));
    if (spec.rfind("std-rpfs:", 0) == 0)
      return standard_rpfs_p(parse_order(spec, "std-rpfs:"));
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  if (is_builtin(spec)) throw UsageError("unknown built-in system " + spec);
  const Json j = read_json_file(spec);
  if (j.is_object() && j.value("type", "") == "rpfs") return green_from_json(j);
  return rfs_from_json(j);
}

// Element from a JSON file path, else parsed as text over alphabet d.
Element load_element(const std::string& arg, std::optional<unsigned> d) {
  if (std::ifstream probe(arg); probe.good())
    return element_from_json(read_json_file(arg));
  if (!d) throw UsageError("--d is required for a text element");
  return parse_element(arg, *d);
}

std::vector<std::size_t> parse_modes(const std::string& text) {
  std::vector<std::size_t> modes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item.find_first_not_of("0123456789 ") != std::string::npos)
      throw UsageError("bad mode list: " + text);
    modes.push_back(std::stoul(item));
  }
  return modes;
}

void print_element(const Config& cfg, const Element& x) {
  if (cfg.format == "json")
    std::cout << to_json(x).dump() << '\n';
  else
    std::cout << to_string(x) << '\n';
}

int emit_report(const Config& cfg, const Report& r) {
  if (cfg.format == "json") {
    std::cout << to_json_lines(r);
  } else {
    for (const auto& c : r.checks()) {
      std::string params;
      for (const auto& [k, v] : c.params) params += ' ' + k + '=' + v;
      std::string status = to_string(c.outcome);
      for (auto& ch : status) ch = static_cast<char>(std::toupper(ch));
      std::cout << status << "  " << c.check << params << "  (" << c.cases
                << (c.cases == 1 ? " case)" : " cases)") << '\n';
      if (c.witness) std::cout << "    witness: " << *c.witness << '\n';
    }
  }
  return r.passed() ? kPass : kFail;
}

// A JSON-loaded RFS is validated before it is used for construction output.
int require_valid(const Config& cfg, const System& sys, std::size_t depth) {
  Report r;
  if (const auto* rfs = std::get_if<RfsSystem>(&sys))
    r = verify_rfs(*rfs, {depth, cfg.jobs});
  else
    r = verify_green_system(std::get<GreenSystem>(sys), {depth, cfg.jobs});
  if (r.passed()) return kPass;
  std::cerr << "system fails validation:\n";
  const CheckResult* f = r.first_failure();
  std::cerr << "  " << f->check << ": " << f->witness.value_or(to_string(f->outcome))
            << '\n';
  return kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic computation in Cuntz algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", cfg.jobs, "Worker threads for sweeps")
      ->check(CLI::Range(1u, 1024u));
  auto* cap = app.add_option("--max-terms", cfg.max_terms,
                             "Term cap per element (0 = none; default from "
                             "CUNTZ_MAX_TERMS, else 2000000)");

  std::string system_spec;
  std::size_t n = 1, N = 8, L = 4, depth = 2;
  std::optional<std::size_t> alpha;
  std::optional<unsigned> d;
  std::string suite = "all", modes_text, element_arg, vector_arg, endo_arg;
  std::optional<std::string> index_arg;

  auto* embed = app.add_subcommand("embed", "Print the n-th generator of a system");
  embed->add_option("--system", system_spec, "std-o2, std-rfs-p:<p>, std-rpfs:<p> or a JSON file")
      ->required();
  embed->add_option("--n", n, "Generator index (>= 1)")->check(CLI::PositiveNumber);
  embed->add_option("--alpha", alpha, "Green component instead of the parafermion generator")
      ->check(CLI::PositiveNumber);
  embed->add_option("--depth", depth, "Validation depth for JSON systems");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--system", system_spec, "System spec (not needed for klein)");
  verify->add_option("--suite", suite, "Suite name")
      ->check(CLI::IsMember({"seed", "recursive", "normalization", "rfs", "car",
                             "vacuum", "green", "relations", "trilinear",
                             "spectrum", "parafermion", "klein", "all"}));
  verify->add_option("--N", N, "CAR range")->check(CLI::PositiveNumber);
  verify->add_option("--L", L, "Parafermion / Green range")->check(CLI::PositiveNumber);
  verify->add_option("--depth", depth, "Monomial depth |A|+|B| for sweeps");

  auto* fock = app.add_subcommand("fock", "Fock basis vector for a set of modes");
  fock->add_option("--system", system_spec, "RFS system spec")->required();
  fock->add_option("--modes", modes_text, "Comma-separated increasing modes (default: vacuum)");

  auto* apply = app.add_subcommand("apply", "Apply an element in the standard representation");
  apply->add_option("--element", element_arg, "Element JSON file or text")->required();
  apply->add_option("--d", d, "Alphabet size for a text element");
  auto* vec_opt = apply->add_option("--vector", vector_arg, "State vector JSON file");
  apply->add_option("--index", index_arg, "Basis index n, for e_n")->excludes(vec_opt);

  auto* nf = app.add_subcommand("normal-form", "Print the normal form of an element");
  nf->add_option("element", element_arg, "Element JSON file or text")->required();
  nf->add_option("--d", d, "Alphabet size for a text element");

  auto* endo = app.add_subcommand("endo-apply", "Apply an endomorphism to an element");
  endo->add_option("--endo", endo_arg, "rho, phi1, phi2 or a JSON file")->required();
  endo->add_option("element", element_arg, "Element JSON file or text")->required();
  endo->add_option("--d", d, "Alphabet size for a text element");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  if (cap->count() == 0) {
    cfg.max_terms = 2'000'000;
    if (const char* env = std::getenv("CUNTZ_MAX_TERMS")) {
      try {
        cfg.max_terms = std::stoul(env);
      } catch (const std::exception&) {
        std::cerr << "CUNTZ_MAX_TERMS must be a non-negative integer\n";
        return kUsage;
      }
    }
  }
  set_max_terms(cfg.max_terms);

  try {
    if (*embed) {
      const System sys = load_system(system_spec);
      if (!is_builtin(system_spec))
        if (int rc = require_valid(cfg, sys, depth); rc != kPass) return rc;
      if (const auto* rfs = std::get_if<RfsSystem>(&sys)) {
        if (alpha) throw UsageError("--alpha applies to parafermion systems");
        print_element(cfg, normal_form(rfs->embed_generator(n)));
      } else {
        const auto& g = std::get<GreenSystem>(sys);
        if (alpha && *alpha > g.order())
          throw UsageError("--alpha exceeds the order of the system");
        print_element(cfg, normal_form(alpha ? g.green_component(*alpha, n)
                                             : g.parafermion_generator(n)));
      }
      return kPass;
    }

    if (*verify) {
      if (suite == "klein")
        return emit_report(cfg, verify_klein_identities(L, depth, cfg.jobs));
      if (system_spec.empty()) throw UsageError("--system is required");
      const System sys = load_system(system_spec);
      Report r;
      if (const auto* rfs = std::get_if<RfsSystem>(&sys)) {
        const bool all = suite == "all";
        if (suite == "seed" || suite == "rfs" || all)
          r.append(verify_seed_condition(*rfs, cfg.jobs));
        if (suite == "recursive" || suite == "rfs" || all)
          r.append(verify_recursive_condition(*rfs, depth, cfg.jobs));
        if (suite == "normalization" || suite == "rfs" || all)
          r.append(verify_normalization(*rfs, depth, cfg.jobs));
        if (suite == "car" || all) r.append(verify_car(*rfs, N, cfg.jobs));
        if (suite == "vacuum" || all) r.append(verify_vacuum(*rfs, N, cfg.jobs));
        if (r.checks().empty())
          throw UsageError("suite " + suite + " does not apply to an RFS");
      } else {
        const auto& g = std::get<GreenSystem>(sys);
        const bool all = suite == "all";
        if (suite == "green" || all)
          r.append(verify_green_system(g, {depth, cfg.jobs}));
        if (suite == "relations" || all)
          r.append(verify_green_relations(g, L, cfg.jobs));
        if (suite == "trilinear" || suite == "parafermion" || all)
          r.append(verify_trilinear(g, L, cfg.jobs));
        if (suite == "spectrum" || suite == "parafermion" || all)
          r.append(verify_spectrum_polynomial(g, L, cfg.jobs));
        if (suite == "vacuum" || suite == "parafermion" || all)
          r.append(verify_parafermion_vacuum(g, L, cfg.jobs));
        if (r.checks().empty())
          throw UsageError("suite " + suite + " does not apply to a parafermion system");
      }
      return emit_report(cfg, r);
    }

    if (*fock) {
      const System sys = load_system(system_spec);
      const auto* rfs = std::get_if<RfsSystem>(&sys);
      if (!rfs) throw UsageError("fock needs an RFS system");
      if (!is_builtin(system_spec))
        if (int rc = require_valid(cfg, sys, depth); rc != kPass) return rc;
      const ModeSet modes(parse_modes(modes_text));
      const BasisIndex index = fock_index(modes);
      const StateVector built = fock_build(*rfs, modes);
      const bool match = built == StateVector::basis(index);
      const BasisIndex bits = index - 1;
      const std::string occupancy = bits == 0 ? "0" : bits.get_str(2);
      if (cfg.format == "json") {
        Json modes_json = Json::array();
        for (std::size_t m : modes.modes()) modes_json.push_back(std::to_string(m));
        std::cout << Json{{"index", index.get_str()},
                          {"occupancy", occupancy},
                          {"modes", std::move(modes_json)},
                          {"vector", to_json(built)},
                          {"match", match}}
                         .dump()
                  << '\n';
      } else {
        std::cout << "e_" << index.get_str() << "  (N-1 = " << occupancy
                  << " in binary)\n";
        if (!match) std::cout << "    built vector: " << to_string(built) << '\n';
      }
      return match ? kPass : kFail;
    }

    if (*apply) {
      const Element x = load_element(element_arg, d);
      StateVector v;
      if (index_arg) {
        BasisIndex idx;
        if (idx.set_str(*index_arg, 10) != 0 || idx < 1)
          throw UsageError("--index must be a positive integer");
        v = StateVector::basis(idx);
      } else if (!vector_arg.empty()) {
        v = state_from_json(read_json_file(vector_arg));
      } else {
        throw UsageError("one of --vector or --index is required");
      }
      const StateVector out = rep_apply(x, v);
      if (cfg.format == "json")
        std::cout << to_json(out).dump() << '\n';
      else
        std::cout << to_string(out) << '\n';
      return kPass;
    }

    if (*nf) {
      print_element(cfg, normal_form(load_element(element_arg, d)));
      return kPass;
    }

    if (*endo) {
      const Element x = load_element(element_arg, d);
      std::optional<Endomorphism> e;
      if (endo_arg == "rho") e = Endomorphism::canonical(x.alphabet());
      else if (endo_arg == "phi1") e = Endomorphism::phi1();
      else if (endo_arg == "phi2") e = Endomorphism::phi2();
      else e = endomorphism_from_json(read_json_file(endo_arg));
      print_element(cfg, normal_form(apply_endomorphism(*e, x)));
      return kPass;
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const ValidationError& e) {
    std::cerr << "validation failed: " << e.what() << '\n';
    return kFail;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // ParseError, AlphabetMismatch and malformed mode sets.
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
