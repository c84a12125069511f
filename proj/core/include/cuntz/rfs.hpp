#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cuntz/element.hpp"
#include "cuntz/endomorphism.hpp"
#include "cuntz/family.hpp"
#include "cuntz/report.hpp"

namespace cuntz {

/// One term sign * s_left X s_right* of a recursive map.
struct Sandwich {
  int sign = 1;
  Letter left = 1;
  Letter right = 1;

  bool operator==(const Sandwich&) const = default;
};

/// The linear map X -> sum_t sign_t s_{u_t} X s_{v_t}*.
class RecursiveMap {
 public:
  RecursiveMap(unsigned d, std::vector<Sandwich> terms);

  /// X -> sum_i signs[i-1] s_i X s_i*.
  static RecursiveMap diagonal(const std::vector<int>& signs);

  unsigned alphabet() const noexcept { return d_; }
  const std::vector<Sandwich>& terms() const noexcept { return terms_; }

  Element apply(const Element& x) const;
  Element power(std::size_t n, const Element& x) const;

  RecursiveMap with_flipped_sign(std::size_t term) const;

  /// True iff the map commutes with the adjoint for every X, i.e. the
  /// sandwich multiset is closed under (u, v) -> (v, u) with equal signs.
  bool is_self_adjoint() const;

  bool operator==(const RecursiveMap&) const = default;

 private:
  unsigned d_;
  std::vector<Sandwich> terms_;
};

Element apply_zeta(const RecursiveMap& z, const Element& x);
Element zeta_power(const RecursiveMap& z, std::size_t n, const Element& x);

/// A recursive fermion system: p seeds a_1..a_p, a recursive map zeta and a
/// normalizing endomorphism phi, all over one alphabet. The CAR generator
/// with index p(q-1)+i is zeta^{q-1}(a_i).
///
/// Construction only checks that the parts fit together; the defining
/// relations are checked by the verify_* functions below. Powers of zeta
/// applied to the seeds are cached per (seed, power) and shared by copies.
class RfsSystem {
 public:
  RfsSystem(std::vector<Element> seeds, RecursiveMap zeta, Endomorphism phi);

  unsigned alphabet() const noexcept { return zeta_.alphabet(); }
  std::size_t seed_count() const noexcept { return seeds_.size(); }
  const std::vector<Element>& seeds() const noexcept { return seeds_; }
  const RecursiveMap& zeta() const noexcept { return zeta_; }
  const Endomorphism& phi() const noexcept { return phi_; }

  /// zeta^power(a_{seed}) with seed counted from zero.
  Element seed_power(std::size_t seed, std::size_t power) const;

  Element embed_generator(std::size_t n) const;
  GeneratorFamily family() const;

 private:
  struct Memo;

  std::vector<Element> seeds_;
  RecursiveMap zeta_;
  Endomorphism phi_;
  std::shared_ptr<Memo> memo_;
};

/// Validation depth/range defaults used by the constructors that validate.
struct VerifyOptions {
  std::size_t depth = 2;
  unsigned jobs = 1;
};

/// O_2 with a = s1 s2*, zeta(X) = s1 X s1* - s2 X s2*, phi = rho.
RfsSystem standard_rfs_o2();

/// The system in O_{2h} built from an ordered split of {1..2h} into
/// `first` (i_1 = 1, ...) and `second` (j_1, ...), with seed
/// sum_k eps_k s_{i_k} s_{j_k}* and recursive map
/// sum_k eps'_k (s_{i_k} X s_{i_k}* - s_{j_k} X s_{j_k}*). Validated before
/// it is returned; throws std::invalid_argument on a malformed split and
/// ValidationError if a condition fails.
RfsSystem generalized_rfs_o2d(const std::vector<Letter>& first,
                              const std::vector<Letter>& second,
                              const std::vector<int>& eps,
                              const std::vector<int>& eps_prime,
                              const VerifyOptions& opts = {});

/// The p-seed system in O_{2^p} from the closed floor-exponent formulas.
RfsSystem standard_rfs_p(unsigned p, unsigned p_max = 6);

/// Sign (-1)^{sum_{m=1}^{count} floor(x / 2^{m-1})}.
int floor_sign(std::size_t x, unsigned count);

/// {a_i, a_j} = 0 and {a_i, a_j*} = delta_ij I for all seed pairs.
Report verify_seed_condition(const RfsSystem& sys, unsigned jobs = 1);

/// {a_i, zeta(X)} = 0 and zeta(X)* = zeta(X*): formal certificate plus a
/// sweep over monomials X with |A| + |B| <= depth.
Report verify_recursive_condition(const RfsSystem& sys, std::size_t depth,
                                  unsigned jobs = 1);

/// zeta(X) zeta(Y) = phi(XY) for monomials X, Y up to `depth`.
Report verify_normalization(const RfsSystem& sys, std::size_t depth,
                            unsigned jobs = 1);

/// Seed, recursive and normalization conditions in that order.
Report verify_rfs(const RfsSystem& sys, const VerifyOptions& opts = {});

/// CAR relations {A_m, A_n} = 0, {A_m, A_n*} = delta_mn I for m <= n <= N.
Report verify_car(const GeneratorFamily& family, std::size_t N,
                  unsigned jobs = 1);
Report verify_car(const RfsSystem& sys, std::size_t N, unsigned jobs = 1);

/// n -> e(A_n).
GeneratorFamily compose_with_endomorphism(const RfsSystem& sys,
                                          const Endomorphism& e);

/// Whether sum_t (L_t (x) R_t) vanishes in the algebraic tensor product
/// O_d (x) O_d; returns the first surviving basis tensor when it does not.
/// Vanishing implies sum_t L_t X R_t = 0 for every X.
std::optional<std::string> tensor_certificate(
    const std::vector<std::pair<Element, Element>>& terms);

/// Certificate for a zeta(X) + sign * zeta(X) a = 0 for all X
/// (sign = +1: anticommutes, -1: commutes).
std::optional<std::string> sandwich_certificate(const Element& a,
                                                const RecursiveMap& zeta,
                                                int sign);

struct SpanDimension {
  std::size_t rank = 0;
  std::size_t full = 0;  ///< d^{2k}
  std::size_t generators = 0;
  std::size_t max_word_length = 0;

  bool spans() const noexcept { return rank == full; }
};

/// Rank over Q of all words in A_1..A_{pk} and their adjoints (length up to
/// 2pk, identity included), expressed in the depth-k matrix units
/// s_A s_B* with |A| = |B| = k. Throws ResourceLimitError if d^{2k}
/// exceeds basis_cap and std::domain_error if a word leaves that space.
SpanDimension span_dimension_check(const RfsSystem& sys, std::size_t k,
                                   std::size_t basis_cap = 1u << 16);

/// Same computation for an arbitrary list of generators (adjoints added).
SpanDimension span_dimension(const std::vector<Element>& generators,
                             std::size_t k, std::size_t max_word_length,
                             std::size_t basis_cap = 1u << 16);

/// Renders an element for a witness line, truncated to `limit` characters.
std::string witness_text(const Element& x, std::size_t limit = 240);

}  // namespace cuntz
