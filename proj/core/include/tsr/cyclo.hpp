#ifndef TSR_CYCLO_HPP
#define TSR_CYCLO_HPP

#include <string>
#include <vector>

#include "tsr/rat.hpp"

namespace tsr {

int euler_phi(int m);

// monic cyclotomic polynomial, coefficient vector c[0] + c[1] x + ...
const std::vector<Rat>& cyclotomic_polynomial(int m);

// Element of Q(zeta_m) on the power basis 1, z, ..., z^{phi(m)-1} reduced
// modulo the m-th cyclotomic polynomial. The conductor is fixed per value;
// mixed-conductor arithmetic promotes through rationals only.
class Cyclo {
public:
  Cyclo() : m_(1), c_(1, Rat(0)) {}
  explicit Cyclo(const Rat& r, int m = 1);
  static Cyclo zeta(int m);              // z itself
  static Cyclo zeta_power(int m, long k);  // z^k reduced, k may be negative

  int conductor() const { return m_; }
  const std::vector<Rat>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws NotFixed-style error when irrational

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator-() const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo inverse() const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  // Galois twist z -> z^a, requires gcd(a,m)=1
  Cyclo galois(long a) const;

  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  // "a0 + a1*z + a2*z^2" with z = exp(2*pi*i/m)
  std::string str() const;

  // rebase into Q(zeta_m') where the current conductor divides m'
  Cyclo promoted(int m2) const;

private:
  int m_;
  std::vector<Rat> c_;
  void reduce_inplace(std::vector<Rat>& poly) const;
  static Cyclo from_poly(int m, std::vector<Rat> poly);
  friend std::pair<Cyclo, Cyclo> to_common_conductor(const Cyclo& a, const Cyclo& b);
};

std::pair<Cyclo, Cyclo> to_common_conductor(const Cyclo& a, const Cyclo& b);

}  // namespace tsr

#endif
