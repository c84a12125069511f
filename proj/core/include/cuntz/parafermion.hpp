#pragma once

#include <cstddef>
#include <vector>

#include "cuntz/element.hpp"
#include "cuntz/family.hpp"
#include "cuntz/report.hpp"
#include "cuntz/rfs.hpp"

namespace cuntz {

/// p triads (a^(alpha), zeta_alpha, phi_alpha) in O_{2^p}; Green component
/// a_n^(alpha) is zeta_alpha^{n-1}(a^(alpha)). Each triad is stored as a
/// one-seed RfsSystem, which carries the power cache.
class GreenSystem {
 public:
  explicit GreenSystem(std::vector<RfsSystem> triads);

  std::size_t order() const noexcept { return triads_.size(); }
  unsigned alphabet() const noexcept { return triads_.front().alphabet(); }
  const std::vector<RfsSystem>& triads() const noexcept { return triads_; }
  const RfsSystem& triad(std::size_t alpha) const {
    return triads_.at(alpha - 1);
  }

  /// zeta_alpha^{n-1}(a^(alpha)), alpha and n counted from one.
  Element green_component(std::size_t alpha, std::size_t n) const;
  /// sum_alpha green_component(alpha, n).
  Element parafermion_generator(std::size_t n) const;
  GeneratorFamily parafermion_family() const;
  GeneratorFamily component_family(std::size_t alpha) const;

  /// The same system with Green component `alpha` left out of every
  /// parafermion generator (for mutation runs).
  GeneratorFamily family_without(std::size_t alpha) const;

 private:
  std::vector<RfsSystem> triads_;
};

/// Standard order-2 system in O_4 (validated).
GreenSystem standard_rpfs2(const VerifyOptions& opts = {1, 1});

/// Closed-formula order-p system in O_{2^p}, validated at opts.depth.
/// Throws std::out_of_range for p outside [1, p_max] and ValidationError if
/// a condition fails.
GreenSystem standard_rpfs_p(unsigned p, unsigned p_max = 4,
                            const VerifyOptions& opts = {1, 1});

/// Unvalidated closed-formula construction.
GreenSystem build_standard_rpfs_p(unsigned p);

/// Seed, recursive and normalization conditions of the triads, including
/// cross-component commutation and preservation of commuting pairs
/// (X, Y with [X, Y] = 0 and |X|, |Y| <= cross_depth).
Report verify_green_system(const GreenSystem& g, const VerifyOptions& opts,
                           std::size_t cross_depth = 1);

/// Green relations on the components: anticommutation within a component,
/// commutation across components, for m, n <= L.
Report verify_green_relations(const GreenSystem& g, std::size_t L,
                              unsigned jobs = 1);

/// Trilinear relations for l, m, n <= L together with their adjoints and
/// the mixed form [a_l, [a_m*, a_n*]] = 2 d_lm a_n* - 2 d_ln a_m*.
Report verify_trilinear(const GeneratorFamily& family, std::size_t L,
                        unsigned jobs = 1);
Report verify_trilinear(const GreenSystem& g, std::size_t L, unsigned jobs = 1);

/// prod_{k=0}^{p} (N_n + (k - p/2) I) = 0 with N_n = [a_n*, a_n] / 2.
Report verify_spectrum_polynomial(const GeneratorFamily& family,
                                  std::size_t order, std::size_t L,
                                  unsigned jobs = 1);
Report verify_spectrum_polynomial(const GreenSystem& g, std::size_t L,
                                  unsigned jobs = 1);

Element number_operator(const Element& a);

/// In the standard representation: a_n e_1 = 0, a_m a_n* e_1 = p d_mn e_1.
Report verify_parafermion_vacuum(const GeneratorFamily& family,
                                 std::size_t order, std::size_t L,
                                 unsigned jobs = 1);
Report verify_parafermion_vacuum(const GreenSystem& g, std::size_t L,
                                 unsigned jobs = 1);

/// prod over `modes` (increasing) of (I - 2 A_k* A_k).
Element klein_factor(const GeneratorFamily& family,
                     const std::vector<std::size_t>& modes);
Element klein_factor(const RfsSystem& sys,
                     const std::vector<std::size_t>& modes);

/// Klein-transformation identities between the standard RFS_2 and the
/// standard RPFS_2 for n <= L, with monomials X up to `depth`.
Report verify_klein_identities(std::size_t L, std::size_t depth = 2,
                               unsigned jobs = 1);

/// Rank of the algebra generated by parafermion_generator(1) inside the
/// depth-1 matrix units, next to the rank generated by all first Green
/// components. The first is strictly smaller for p >= 2.
struct PfaContainment {
  SpanDimension parafermion;
  SpanDimension green;
};
PfaContainment pfa_containment(const GreenSystem& g);

}  // namespace cuntz
