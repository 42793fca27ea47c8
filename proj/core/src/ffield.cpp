#include "tsr/ffield.hpp"

#include <numeric>
#include <sstream>

#include "tsr/errors.hpp"

namespace tsr {

namespace {

constexpr int64_t kFieldCap = int64_t(1) << 22;

std::vector<int64_t> digits_of(int64_t code, int64_t p, int len) {
  std::vector<int64_t> d(len, 0);
  for (int i = 0; i < len && code > 0; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

int64_t code_of(const std::vector<int64_t>& d, int64_t p) {
  int64_t c = 0;
  for (size_t i = d.size(); i-- > 0;) c = c * p + d[i];
  return c;
}

// remainder of a*b modulo the monic polynomial mod (degree k), coefficients mod p
int64_t polymulmod(int64_t a, int64_t b, int64_t p, const std::vector<int64_t>& mod) {
  const int k = static_cast<int>(mod.size()) - 1;
  std::vector<int64_t> da = digits_of(a, p, k), db = digits_of(b, p, k);
  std::vector<int64_t> prod(2 * k - 1 > 0 ? 2 * k - 1 : 1, 0);
  for (int i = 0; i < k; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  for (int d = static_cast<int>(prod.size()) - 1; d >= k; --d) {
    int64_t coef = prod[d];
    if (coef == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < k; ++i)
      prod[d - k + i] = ((prod[d - k + i] - coef * mod[i]) % p + p * p) % p;
  }
  prod.resize(k);
  return code_of(prod, p);
}

bool poly_divides(const std::vector<int64_t>& g, std::vector<int64_t> f, int64_t p) {
  // g monic; returns remainder-is-zero
  const int dg = static_cast<int>(g.size()) - 1;
  while (static_cast<int>(f.size()) - 1 >= dg) {
    int64_t lead = f.back();
    if (lead != 0) {
      int shift = static_cast<int>(f.size()) - 1 - dg;
      for (int i = 0; i <= dg; ++i)
        f[shift + i] = ((f[shift + i] - lead * g[i]) % p + p * p) % p;
    }
    f.pop_back();
  }
  for (int64_t c : f)
    if (c != 0) return false;
  return true;
}

bool is_irreducible(const std::vector<int64_t>& f, int64_t p) {
  const int k = static_cast<int>(f.size()) - 1;
  if (k == 1) return true;
  for (int d = 1; 2 * d <= k; ++d) {
    int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int64_t c = 0; c < count; ++c) {
      std::vector<int64_t> g = digits_of(c, p, d);
      g.push_back(1);  // monic degree d
      if (poly_divides(g, f, p)) return false;
    }
  }
  return true;
}

std::vector<int64_t> prime_factors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::shared_ptr<const FField> FField::build(int64_t p, int m) {
  if (m < 1) throw InternalInconsistency("conductor must be positive");
  if (m % p == 0 && m > 1) throw InternalInconsistency("conductor not coprime to p");
  auto F = std::shared_ptr<FField>(new FField);
  F->p_ = p;
  F->m_ = m;
  int k = 1;
  int64_t q = p;
  while ((q - 1) % m != 0) {
    ++k;
    if (q > kFieldCap / p)
      throw FieldTooLarge("splitting field exceeds the size cap");
    q *= p;
  }
  if (q > kFieldCap) throw FieldTooLarge("splitting field exceeds the size cap");
  F->k_ = k;
  F->q_ = q;

  // first irreducible monic polynomial of degree k in code order
  for (int64_t c = 0; c < q; ++c) {
    std::vector<int64_t> f = digits_of(c, p, k);
    f.push_back(1);
    if (is_irreducible(f, p)) {
      F->modulus_ = std::move(f);
      break;
    }
  }
  if (F->modulus_.empty()) throw InternalInconsistency("no irreducible modulus found");

  // first multiplicative generator in code order
  auto pow_nt = [&](int64_t a, int64_t e) {
    int64_t r = 1;
    int64_t base = a;
    while (e > 0) {
      if (e & 1) r = polymulmod(r, base, p, F->modulus_);
      base = polymulmod(base, base, p, F->modulus_);
      e >>= 1;
    }
    return r;
  };
  std::vector<int64_t> fac = prime_factors(q - 1);
  int64_t g = 0;
  for (int64_t cand = 1; cand < q; ++cand) {
    bool ok = true;
    for (int64_t ell : fac)
      if (pow_nt(cand, (q - 1) / ell) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      g = cand;
      break;
    }
  }
  if (g == 0) throw InternalInconsistency("no multiplicative generator found");
  F->generator_ = g;

  F->exp_.assign(static_cast<size_t>(q - 1), 0);
  F->log_.assign(static_cast<size_t>(q), -1);
  int64_t acc = 1;
  for (int64_t i = 0; i < q - 1; ++i) {
    F->exp_[static_cast<size_t>(i)] = acc;
    F->log_[static_cast<size_t>(acc)] = i;
    acc = polymulmod(acc, g, p, F->modulus_);
  }
  if (acc != 1) throw InternalInconsistency("generator order mismatch");
  F->omega_ = m == 1 ? 1 : F->exp_[static_cast<size_t>((q - 1) / m)];
  return F;
}

int64_t FField::mulmod(int64_t a, int64_t b) const { return polymulmod(a, b, p_, modulus_); }

int64_t FField::add(int64_t a, int64_t b) const {
  if (k_ == 1) return (a + b) % p_;
  int64_t out = 0;
  int64_t scale = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

int64_t FField::neg(int64_t a) const {
  if (k_ == 1) return (p_ - a) % p_;
  int64_t out = 0;
  int64_t scale = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

int64_t FField::sub(int64_t a, int64_t b) const { return add(a, neg(b)); }

int64_t FField::mul(int64_t a, int64_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[static_cast<size_t>((log_[static_cast<size_t>(a)] + log_[static_cast<size_t>(b)]) %
                                  (q_ - 1))];
}

int64_t FField::inv(int64_t a) const {
  if (a == 0) throw DivisionByZero("inverse of zero field element");
  int64_t l = log_[static_cast<size_t>(a)];
  return exp_[static_cast<size_t>((q_ - 1 - l) % (q_ - 1))];
}

int64_t FField::pow(int64_t a, int64_t e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw DivisionByZero("negative power of zero");
    return 0;
  }
  int64_t l = log_[static_cast<size_t>(a)];
  int64_t ee = ((e % (q_ - 1)) + (q_ - 1)) % (q_ - 1);
  return exp_[static_cast<size_t>((l * ee) % (q_ - 1))];
}

int64_t FField::from_int(int64_t r) const {
  int64_t v = ((r % p_) + p_) % p_;
  return v;
}

int64_t FField::mult_order(int64_t a) const {
  if (a == 0) throw DivisionByZero("order of zero");
  int64_t l = log_[static_cast<size_t>(a)];
  if (l == 0) return 1;
  return (q_ - 1) / std::gcd(q_ - 1, l);
}

int FField::omega_log(int64_t a) const {
  if (a == 0) return -1;
  if (m_ == 1) return a == 1 ? 0 : -1;
  int64_t l = log_[static_cast<size_t>(a)];
  int64_t step = (q_ - 1) / m_;
  if (l % step != 0) return -1;
  return static_cast<int>(l / step);
}

std::string FField::element_str(int64_t a) const {
  if (k_ == 1) return std::to_string(a);
  std::ostringstream os;
  os << a << "#";  // code with a marker noting the non-prime field
  return os.str();
}

}  // namespace tsr
