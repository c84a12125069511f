#include "cuntz/representation.hpp"

#include <algorithm>
#include <stdexcept>

#include "cuntz/error.hpp"
#include "cuntz/text.hpp"
#include "sweep.hpp"

namespace cuntz {

StateVector StateVector::basis(const BasisIndex& n) {
  StateVector v;
  v.add(n, 1);
  return v;
}

void StateVector::add(const BasisIndex& n, const Coefficient& c) {
  if (n < 1) throw std::invalid_argument("basis index must be >= 1");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

StateVector& StateVector::operator+=(const StateVector& v) {
  for (const auto& [n, c] : v.terms_) add(n, c);
  return *this;
}

StateVector& StateVector::operator*=(const Coefficient& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [n, amp] : terms_) amp *= c;
  return *this;
}

std::string to_string(const StateVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [n, c] : v.terms()) {
    const bool negative = sgn(c) < 0;
    const Coefficient mag = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + ' ';
    out += "e_" + n.get_str();
  }
  return out;
}

ModeSet::ModeSet(std::vector<std::size_t> modes) : modes_(std::move(modes)) {
  for (std::size_t k = 0; k < modes_.size(); ++k) {
    if (modes_[k] < 1) throw std::invalid_argument("modes must be >= 1");
    if (k > 0 && modes_[k] <= modes_[k - 1])
      throw std::invalid_argument("modes must be strictly increasing");
  }
}

bool ModeSet::contains(std::size_t n) const {
  return std::binary_search(modes_.begin(), modes_.end(), n);
}

namespace {

void check_letter(Letter i, unsigned d) {
  if (i < 1 || i > d)
    throw IndexOutOfRange("generator index " + std::to_string(i) +
                          " outside {1.." + std::to_string(d) + "}");
}

BasisIndex create_index(const BasisIndex& n, Letter i, unsigned d) {
  return BasisIndex(d) * (n - 1) + i;
}

// Returns false when s_i* annihilates e_N.
bool annihilate_index(BasisIndex& n, Letter i, unsigned d) {
  BasisIndex shifted = n - i;
  if (shifted < 0) return false;
  BasisIndex q, r;
  mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), shifted.get_mpz_t(), d);
  if (r != 0) return false;
  n = q + 1;
  return true;
}

}  // namespace

StateVector apply_generator(Letter i, const StateVector& v, unsigned d) {
  check_letter(i, d);
  StateVector out;
  for (const auto& [n, c] : v.terms()) out.add(create_index(n, i, d), c);
  return out;
}

StateVector apply_generator_adjoint(Letter i, const StateVector& v,
                                    unsigned d) {
  check_letter(i, d);
  StateVector out;
  for (const auto& [n, c] : v.terms()) {
    BasisIndex m = n;
    if (annihilate_index(m, i, d)) out.add(m, c);
  }
  return out;
}

StateVector rep_apply(const Element& x, const StateVector& v) {
  const unsigned d = x.alphabet();
  StateVector out;
  for (const auto& [m, c] : x.terms()) {
    check_alphabet(m, d);
    for (const auto& [n0, amp] : v.terms()) {
      // (s_b1 ... s_bn)* acts with s_b1* first; then s_am, ..., s_a1.
      BasisIndex n = n0;
      bool alive = true;
      for (Letter b : m.annihilate)
        if (!annihilate_index(n, b, d)) {
          alive = false;
          break;
        }
      if (!alive) continue;
      for (auto it = m.create.rbegin(); it != m.create.rend(); ++it)
        n = create_index(n, *it, d);
      out.add(n, c * amp);
    }
  }
  return out;
}

BasisIndex fock_index(const ModeSet& m) {
  BasisIndex n = 1;
  for (std::size_t mode : m.modes()) {
    BasisIndex bit;
    mpz_ui_pow_ui(bit.get_mpz_t(), 2, mode - 1);
    n += bit;
  }
  return n;
}

ModeSet decode_index(const BasisIndex& N) {
  if (N < 1) throw std::invalid_argument("basis index must be >= 1");
  const BasisIndex bits = N - 1;
  std::vector<std::size_t> modes;
  const std::size_t width = mpz_sizeinbase(bits.get_mpz_t(), 2);
  for (std::size_t b = 0; b < width; ++b)
    if (mpz_tstbit(bits.get_mpz_t(), b)) modes.push_back(b + 1);
  return ModeSet(std::move(modes));
}

StateVector fock_build(const GeneratorFamily& family, const ModeSet& m) {
  StateVector v = StateVector::basis(1);
  const auto& modes = m.modes();
  for (auto it = modes.rbegin(); it != modes.rend(); ++it)
    v = rep_apply(adjoint(family(*it)), v);
  return v;
}

StateVector fock_build(const RfsSystem& sys, const ModeSet& m) {
  return fock_build(sys.family(), m);
}

Report verify_vacuum(const GeneratorFamily& family, std::size_t N,
                     unsigned jobs) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  for (std::size_t n = 1; n <= N; ++n) family(n);
  const StateVector vacuum = StateVector::basis(1);
  Report r;
  r.add(detail::sweep(
      "vacuum", {{"d", std::to_string(family.alphabet())},
                 {"N", std::to_string(N)}},
      N, jobs, [&](std::size_t k) -> std::optional<std::string> {
        StateVector out = rep_apply(family(k + 1), vacuum);
        if (out.is_zero()) return std::nullopt;
        return "A" + std::to_string(k + 1) + " e_1 = " + to_string(out);
      }));
  return r;
}

Report verify_vacuum(const RfsSystem& sys, std::size_t N, unsigned jobs) {
  return verify_vacuum(sys.family(), N, jobs);
}

GeneratorFamily bogoliubov_family(const GeneratorFamily& family,
                                  const ModeSet& flip) {
  GeneratorFamily base = family;
  return GeneratorFamily(family.alphabet(), [base, flip](std::size_t n) {
    return flip.contains(n) ? adjoint(base(n)) : base(n);
  });
}

GeneratorFamily bogoliubov_family(const RfsSystem& sys, const ModeSet& flip) {
  return bogoliubov_family(sys.family(), flip);
}

namespace {

void check_seed_modes(const std::vector<SeedMode>& modes, unsigned p) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  std::size_t prev = 0;
  for (const auto& [m, i] : modes) {
    if (m < 1 || i < 1 || i > p)
      throw std::invalid_argument("need generation >= 1 and 1 <= seed <= p");
    const std::size_t flat = p * (m - 1) + i;
    if (flat <= prev)
      throw std::invalid_argument("flat mode indices must strictly increase");
    prev = flat;
  }
}

}  // namespace

BasisIndex rfs_p_fock_index(const std::vector<SeedMode>& modes, unsigned p) {
  check_seed_modes(modes, p);
  BasisIndex n = 1;
  for (const auto& [m, i] : modes) {
    BasisIndex bit;
    mpz_ui_pow_ui(bit.get_mpz_t(), 2, p * (m - 1) + i - 1);
    n += bit;
  }
  return n;
}

BasisIndex rfs_p_digit_index(const std::vector<SeedMode>& modes, unsigned p) {
  check_seed_modes(modes, p);
  std::map<std::size_t, unsigned long> digits;
  for (const auto& [m, i] : modes) digits[m] += 1ul << (i - 1);
  BasisIndex n = 1;
  for (const auto& [m, digit] : digits) {
    BasisIndex place;
    mpz_ui_pow_ui(place.get_mpz_t(), 2, p * (m - 1));
    n += place * digit;
  }
  return n;
}

}  // namespace cuntz
