#include "tsr/cyclo.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "tsr/errors.hpp"

namespace tsr {

int euler_phi(int m) {
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using Poly = std::vector<Rat>;  // c[0] + c[1] x + ...

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

// division with remainder; divisor need not be monic
std::pair<Poly, Poly> divmod(Poly f, const Poly& g) {
  if (g.empty()) throw DivisionByZero("polynomial division by zero");
  trim(f);
  Poly q;
  if (f.size() >= g.size()) q.assign(f.size() - g.size() + 1, Rat(0));
  while (f.size() >= g.size()) {
    Rat coef = f.back() / g.back();
    size_t shift = f.size() - g.size();
    q[shift] = coef;
    for (size_t i = 0; i < g.size(); ++i) f[shift + i] -= coef * g[i];
    trim(f);
  }
  trim(q);
  return {q, f};
}

}  // namespace

const std::vector<Rat>& cyclotomic_polynomial(int m) {
  static std::map<int, Poly> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // (x^m - 1) / prod of lower cyclotomic polynomials over divisors
  Poly num(m + 1, Rat(0));
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto [q, r] = divmod(num, cyclotomic_polynomial(d));
    if (!r.empty()) throw InternalInconsistency("cyclotomic division had a remainder");
    num = std::move(q);
  }
  return cache.emplace(m, std::move(num)).first->second;
}

Cyclo::Cyclo(const Rat& r, int m) : m_(m), c_(euler_phi(m), Rat(0)) { c_[0] = r; }

void Cyclo::reduce_inplace(std::vector<Rat>& poly) const {
  const Poly& phi = cyclotomic_polynomial(m_);
  auto [q, r] = divmod(poly, phi);
  (void)q;
  r.resize(euler_phi(m_), Rat(0));
  poly = std::move(r);
}

Cyclo Cyclo::from_poly(int m, std::vector<Rat> poly) {
  Cyclo z(Rat(0), m);
  z.reduce_inplace(poly);
  z.c_ = std::move(poly);
  return z;
}

Cyclo Cyclo::zeta(int m) { return zeta_power(m, 1); }

Cyclo Cyclo::zeta_power(int m, long k) {
  long e = k % m;
  if (e < 0) e += m;
  std::vector<Rat> poly(static_cast<size_t>(e) + 1, Rat(0));
  poly[static_cast<size_t>(e)] = 1;
  return from_poly(m, std::move(poly));
}

bool Cyclo::is_zero() const {
  for (const Rat& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclo::rational_value() const {
  if (!is_rational()) throw InternalInconsistency("cyclotomic value is not rational: " + str());
  return c_[0];
}

std::pair<Cyclo, Cyclo> to_common_conductor(const Cyclo& a, const Cyclo& b) {
  if (a.m_ == b.m_) return {a, b};
  int m = std::lcm(a.m_, b.m_);
  return {a.promoted(m), b.promoted(m)};
}

Cyclo Cyclo::promoted(int m2) const {
  if (m2 == m_) return *this;
  if (m2 % m_ != 0) throw InternalInconsistency("conductor promotion must go to a multiple");
  int stride = m2 / m_;
  std::vector<Rat> poly(static_cast<size_t>(euler_phi(m_) - 1) * stride + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) poly[i * stride] = c_[i];
  return from_poly(m2, std::move(poly));
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  auto [a, b] = to_common_conductor(*this, o);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
  auto [a, b] = to_common_conductor(*this, o);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
  return a;
}

Cyclo Cyclo::operator-() const {
  Cyclo a = *this;
  for (Rat& x : a.c_) x = -x;
  return a;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  auto [a, b] = to_common_conductor(*this, o);
  std::vector<Rat> prod = mul(a.c_, b.c_);
  return from_poly(a.m_, std::move(prod));
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic value");
  if (is_rational()) {
    Cyclo r(Rat(1) / c_[0], m_);
    return r;
  }
  // extended Euclid in Q[x]: u*f + v*phi = gcd (a nonzero constant)
  Poly f = c_;
  trim(f);
  Poly g = cyclotomic_polynomial(m_);
  Poly u0{Rat(1)}, u1{};
  Poly a = f, b = g;
  while (!b.empty()) {
    auto [q, r] = divmod(a, b);
    Poly u2 = u0;
    Poly qu = mul(q, u1);
    u2.resize(std::max(u2.size(), qu.size()), Rat(0));
    for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    trim(u2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.size() != 1) throw InternalInconsistency("cyclotomic gcd is not constant");
  Rat scale = Rat(1) / a[0];
  for (Rat& x : u0) x *= scale;
  // u0 now satisfies u0 * f == 1 mod phi
  Cyclo inv = from_poly(m_, u0);
  return inv;
}

Cyclo Cyclo::galois(long a) const {
  long r = a % m_;
  if (r < 0) r += m_;
  if (std::gcd(static_cast<long>(m_), r == 0 ? static_cast<long>(m_) : r) != 1 && m_ > 1)
    throw InternalInconsistency("galois exponent not coprime to conductor");
  std::vector<Rat> poly(static_cast<size_t>(m_), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    size_t e = (i * static_cast<size_t>(r)) % static_cast<size_t>(m_);
    poly[e] += c_[i];
  }
  return from_poly(m_, std::move(poly));
}

bool Cyclo::operator==(const Cyclo& o) const {
  auto [a, b] = to_common_conductor(*this, o);
  return a.c_ == b.c_;
}

std::string Cyclo::str() const {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rat v = c_[i];
    if (!any) {
      if (v < 0) {
        os << "-";
        v = -v;
      }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (i == 0) {
      os << rat_str(v);
    } else {
      if (v != 1) os << rat_str(v) << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    any = true;
  }
  if (!any) return "0";
  return os.str();
}

}  // namespace tsr
