#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cuntz/element.hpp"
#include "cuntz/family.hpp"
#include "cuntz/report.hpp"
#include "cuntz/rfs.hpp"

namespace cuntz {

/// Label n >= 1 of the basis vector e_n. Arbitrary precision.
using BasisIndex = mpz_class;

struct BasisIndexLess {
  bool operator()(const BasisIndex& a, const BasisIndex& b) const {
    return cmp(a, b) < 0;
  }
};

/// A finite combination sum_n c_n e_n with no zero amplitudes stored.
class StateVector {
 public:
  using Terms = std::map<BasisIndex, Coefficient, BasisIndexLess>;

  StateVector() = default;
  static StateVector basis(const BasisIndex& n);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Throws std::invalid_argument for n < 1.
  void add(const BasisIndex& n, const Coefficient& c);

  StateVector& operator+=(const StateVector& v);
  StateVector& operator*=(const Coefficient& c);
  friend StateVector operator*(const Coefficient& c, StateVector v) {
    return v *= c;
  }

  bool operator==(const StateVector& v) const { return terms_ == v.terms_; }

 private:
  Terms terms_;
};

std::string to_string(const StateVector& v);

/// Strictly increasing positive mode labels n_1 < ... < n_k.
class ModeSet {
 public:
  ModeSet() = default;
  /// Throws std::invalid_argument unless strictly increasing and positive.
  explicit ModeSet(std::vector<std::size_t> modes);

  const std::vector<std::size_t>& modes() const noexcept { return modes_; }
  bool empty() const noexcept { return modes_.empty(); }
  std::size_t size() const noexcept { return modes_.size(); }
  bool contains(std::size_t n) const;

  bool operator==(const ModeSet&) const = default;

 private:
  std::vector<std::size_t> modes_;
};

/// s_i e_n = e_{d(n-1)+i}.
StateVector apply_generator(Letter i, const StateVector& v, unsigned d);
/// s_i* e_N = e_{(N-i)/d+1} when N = i mod d, else 0.
StateVector apply_generator_adjoint(Letter i, const StateVector& v,
                                    unsigned d);

/// The standard permutation representation of x on v.
StateVector rep_apply(const Element& x, const StateVector& v);

/// sum_j 2^{n_j - 1} + 1.
BasisIndex fock_index(const ModeSet& m);
/// Inverse of fock_index: the binary digits of N - 1.
ModeSet decode_index(const BasisIndex& N);

/// A*_{n_1} ... A*_{n_k} e_1 for the family's generators.
StateVector fock_build(const GeneratorFamily& family, const ModeSet& m);
StateVector fock_build(const RfsSystem& sys, const ModeSet& m);

/// A_n e_1 = 0 for all n <= N.
Report verify_vacuum(const GeneratorFamily& family, std::size_t N,
                     unsigned jobs = 1);
Report verify_vacuum(const RfsSystem& sys, std::size_t N, unsigned jobs = 1);

/// A'_n = A_n* for n in `flip`, A_n otherwise.
GeneratorFamily bogoliubov_family(const GeneratorFamily& family,
                                  const ModeSet& flip);
GeneratorFamily bogoliubov_family(const RfsSystem& sys, const ModeSet& flip);

/// A Fock mode of an RFS_p: generation m >= 1 and seed i in 1..p.
struct SeedMode {
  std::size_t generation;
  std::size_t seed;
};

/// sum_j 2^{p(m_j - 1) + i_j - 1} + 1. Throws std::invalid_argument unless
/// the flat indices p(m_j - 1) + i_j strictly increase and 1 <= i_j <= p.
BasisIndex rfs_p_fock_index(const std::vector<SeedMode>& modes, unsigned p);

/// The same index through per-generation digits M = sum 2^{i-1} over the
/// seeds occupied in that generation: sum_m M_m 2^{p(m-1)} + 1.
BasisIndex rfs_p_digit_index(const std::vector<SeedMode>& modes, unsigned p);

}  // namespace cuntz
