#ifndef TSR_FPOLY_HPP
#define TSR_FPOLY_HPP

#include <random>
#include <vector>

#include "tsr/ffield.hpp"

namespace tsr {

// Dense polynomial over an FField, coefficient vector c[0] + c[1] x + ...
// with no trailing zeros (zero polynomial = empty vector).
class FPoly {
public:
  FPoly() = default;
  FPoly(FFieldPtr F, std::vector<int64_t> coeffs);
  static FPoly zero(FFieldPtr F) { return FPoly(std::move(F), {}); }
  static FPoly constant(FFieldPtr F, int64_t c);
  static FPoly x(FFieldPtr F);

  const FFieldPtr& field() const { return F_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  int64_t coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
  }
  const std::vector<int64_t>& coeffs() const { return c_; }
  int64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  FPoly operator+(const FPoly& o) const;
  FPoly operator-(const FPoly& o) const;
  FPoly operator*(const FPoly& o) const;
  FPoly scaled(int64_t s) const;
  FPoly monic() const;
  std::pair<FPoly, FPoly> divmod(const FPoly& o) const;
  FPoly operator%(const FPoly& o) const { return divmod(o).second; }
  FPoly operator/(const FPoly& o) const { return divmod(o).first; }
  bool operator==(const FPoly& o) const { return c_ == o.c_; }

  FPoly derivative() const;
  int64_t eval(int64_t x) const;

private:
  FFieldPtr F_;
  std::vector<int64_t> c_;
  void trim();
};

FPoly fpoly_gcd(FPoly a, FPoly b);
FPoly fpoly_powmod(const FPoly& base, int64_t e, const FPoly& mod);
// x^(q^d) mod f, by repeated q-power
FPoly fpoly_frobenius_power(const FPoly& f, int d);

// complete factorization into monic irreducibles with multiplicities,
// deterministic for a fixed rng state
std::vector<std::pair<FPoly, int>> fpoly_factor(const FPoly& f, std::mt19937_64& rng);

}  // namespace tsr

#endif
