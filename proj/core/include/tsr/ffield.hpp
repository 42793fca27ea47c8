#ifndef TSR_FFIELD_HPP
#define TSR_FFIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tsr {

// F_q with q = p^k, elements encoded as integers in [0,q): the code of
// sum c_i x^i is sum c_i p^i. Multiplication goes through exp/log tables for
// the first multiplicative generator; omega is the canonical element of
// multiplicative order m, realizing the lift omega^j <-> zeta_m^j.
class FField {
public:
  // minimal k with m | p^k - 1; throws FieldTooLarge when q would exceed the cap
  static std::shared_ptr<const FField> build(int64_t p, int m);

  int64_t p() const { return p_; }
  int k() const { return k_; }
  int64_t q() const { return q_; }
  int m() const { return m_; }
  int64_t omega() const { return omega_; }
  const std::vector<int64_t>& modulus() const { return modulus_; }

  int64_t add(int64_t a, int64_t b) const;
  int64_t sub(int64_t a, int64_t b) const;
  int64_t neg(int64_t a) const;
  int64_t mul(int64_t a, int64_t b) const;
  int64_t inv(int64_t a) const;
  int64_t pow(int64_t a, int64_t e) const;
  int64_t from_int(int64_t r) const;  // prime-field embedding

  // multiplicative order of a nonzero element
  int64_t mult_order(int64_t a) const;

  // discrete log base omega for elements of mu_m; -1 when not a power of omega
  int omega_log(int64_t a) const;

  std::string element_str(int64_t a) const;

private:
  FField() = default;
  int64_t p_ = 2;
  int k_ = 1;
  int64_t q_ = 2;
  int m_ = 1;
  int64_t omega_ = 1;
  int64_t generator_ = 1;
  std::vector<int64_t> modulus_;     // degree k monic: coeffs c0..ck
  std::vector<int64_t> exp_;         // exp_[i] = g^i, i in [0, q-1)
  std::vector<int64_t> log_;         // log_[exp_[i]] = i
  int64_t mulmod(int64_t a, int64_t b) const;  // table-free polynomial product
};

using FFieldPtr = std::shared_ptr<const FField>;

}  // namespace tsr

#endif
