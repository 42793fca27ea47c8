#include "tsr/fpoly.hpp"

#include "tsr/errors.hpp"

namespace tsr {

FPoly::FPoly(FFieldPtr F, std::vector<int64_t> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) {
  trim();
}

void FPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FPoly FPoly::constant(FFieldPtr F, int64_t c) { return FPoly(std::move(F), {c}); }

FPoly FPoly::x(FFieldPtr F) { return FPoly(std::move(F), {0, 1}); }

FPoly FPoly::operator+(const FPoly& o) const {
  const FField& F = *F_;
  std::vector<int64_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = F.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return FPoly(F_, std::move(c));
}

FPoly FPoly::operator-(const FPoly& o) const {
  const FField& F = *F_;
  std::vector<int64_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = F.sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return FPoly(F_, std::move(c));
}

FPoly FPoly::operator*(const FPoly& o) const {
  if (is_zero() || o.is_zero()) return zero(F_);
  const FField& F = *F_;
  std::vector<int64_t> c(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(c_[i], o.c_[j]));
  }
  return FPoly(F_, std::move(c));
}

FPoly FPoly::scaled(int64_t s) const {
  const FField& F = *F_;
  std::vector<int64_t> c = c_;
  for (int64_t& x : c) x = F.mul(x, s);
  return FPoly(F_, std::move(c));
}

FPoly FPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(F_->inv(leading()));
}

std::pair<FPoly, FPoly> FPoly::divmod(const FPoly& o) const {
  if (o.is_zero()) throw DivisionByZero("polynomial division by zero");
  const FField& F = *F_;
  std::vector<int64_t> rem = c_;
  int dr = static_cast<int>(rem.size()) - 1;
  const int dg = o.degree();
  if (dr < dg) return {zero(F_), *this};
  std::vector<int64_t> quo(dr - dg + 1, 0);
  int64_t lead_inv = F.inv(o.leading());
  for (int d = dr; d >= dg; --d) {
    int64_t c = rem[d];
    if (c == 0) continue;
    int64_t f = F.mul(c, lead_inv);
    quo[d - dg] = f;
    for (int i = 0; i <= dg; ++i)
      rem[d - dg + i] = F.sub(rem[d - dg + i], F.mul(f, o.c_[i]));
  }
  return {FPoly(F_, std::move(quo)), FPoly(F_, std::move(rem))};
}

FPoly FPoly::derivative() const {
  const FField& F = *F_;
  if (c_.size() <= 1) return zero(F_);
  std::vector<int64_t> c(c_.size() - 1, 0);
  for (size_t i = 1; i < c_.size(); ++i) {
    int64_t n = F.from_int(static_cast<int64_t>(i));
    c[i - 1] = F.mul(c_[i], n);
  }
  return FPoly(F_, std::move(c));
}

int64_t FPoly::eval(int64_t x) const {
  const FField& F = *F_;
  int64_t acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c_[i]);
  return acc;
}

FPoly fpoly_gcd(FPoly a, FPoly b) {
  while (!b.is_zero()) {
    FPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

FPoly fpoly_powmod(const FPoly& base, int64_t e, const FPoly& mod) {
  FPoly result = FPoly::constant(base.field(), 1);
  FPoly b = base % mod;
  while (e > 0) {
    if (e & 1) result = (result * b) % mod;
    b = (b * b) % mod;
    e >>= 1;
  }
  return result;
}

namespace {

// coefficientwise p-th root: f(x) = g(x^p) -> g
FPoly pth_root(const FPoly& f) {
  const FFieldPtr& Fp = f.field();
  const int64_t p = Fp->p();
  const int64_t root_exp = Fp->q() / p;  // a^(q/p) is the p-th root in F_q
  std::vector<int64_t> c;
  for (int i = 0; i * p <= f.degree(); ++i)
    c.push_back(Fp->pow(f.coeff(static_cast<int>(i * p)), root_exp));
  return FPoly(Fp, std::move(c));
}

FPoly random_poly_below(const FFieldPtr& F, int degree_bound, std::mt19937_64& rng) {
  std::vector<int64_t> c(static_cast<size_t>(degree_bound), 0);
  for (auto& x : c) x = static_cast<int64_t>(rng() % static_cast<uint64_t>(F->q()));
  return FPoly(F, std::move(c));
}

// equal-degree splitting of a squarefree monic g, all of whose irreducible
// factors have degree d
void equal_degree(const FPoly& g, int d, std::mt19937_64& rng, std::vector<FPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const FFieldPtr& F = g.field();
  const int64_t q = F->q();
  for (int attempt = 0; attempt < 512; ++attempt) {
    FPoly r = random_poly_below(F, g.degree(), rng);
    if (r.is_zero()) continue;
    FPoly h = FPoly::zero(F);
    if (F->p() == 2) {
      // trace map over F_2: sum of r^(2^j), j < k*d
      int64_t steps = static_cast<int64_t>(F->k()) * d;
      FPoly t = r % g;
      FPoly acc = t;
      for (int64_t j = 1; j < steps; ++j) {
        t = (t * t) % g;
        acc = acc + t;
      }
      h = acc;
    } else {
      // norm to F_q then power to (q-1)/2
      FPoly nrm = r % g;
      FPoly fro = nrm;
      for (int j = 1; j < d; ++j) {
        fro = fpoly_powmod(fro, q, g);
        nrm = (nrm * fro) % g;
      }
      h = fpoly_powmod(nrm, (q - 1) / 2, g) - FPoly::constant(F, 1);
    }
    FPoly s = fpoly_gcd(h, g);
    if (s.degree() > 0 && s.degree() < g.degree()) {
      equal_degree(s, d, rng, out);
      equal_degree(g / s, d, rng, out);
      return;
    }
  }
  throw ChopBudgetExceeded("equal-degree splitting failed to find a splitter");
}

}  // namespace

FPoly fpoly_frobenius_power(const FPoly& f, int d) {
  const FFieldPtr& F = f.field();
  FPoly h = FPoly::x(F) % f;
  for (int j = 0; j < d; ++j) h = fpoly_powmod(h, F->q(), f);
  return h;
}

std::vector<std::pair<FPoly, int>> fpoly_factor(const FPoly& f_in, std::mt19937_64& rng) {
  std::vector<std::pair<FPoly, int>> out;
  if (f_in.is_zero()) throw DivisionByZero("factoring the zero polynomial");
  const FFieldPtr& F = f_in.field();
  FPoly f = f_in.monic();
  int outer = 1;
  while (f.degree() > 0) {
    FPoly fp = f.derivative();
    if (fp.is_zero()) {
      f = pth_root(f);
      outer *= static_cast<int>(F->p());
      continue;
    }
    FPoly u = (f / fpoly_gcd(f, fp)).monic();  // distinct irreducible factors, once each

    // distinct-degree split of u
    std::vector<std::pair<FPoly, int>> by_degree;
    FPoly rest = u;
    FPoly h = FPoly::x(F) % rest;
    for (int d = 1; rest.degree() >= 2 * d; ++d) {
      h = fpoly_powmod(h, F->q(), rest);
      FPoly g = fpoly_gcd(h - FPoly::x(F), rest);
      if (g.degree() > 0) {
        by_degree.emplace_back(g, d);
        rest = (rest / g).monic();
        h = h % rest;
      }
    }
    if (rest.degree() > 0) by_degree.emplace_back(rest, rest.degree());

    for (auto& [g, d] : by_degree) {
      std::vector<FPoly> irr;
      equal_degree(g, d, rng, irr);
      for (FPoly& q : irr) {
        int e = 0;
        while ((f % q).is_zero()) {
          f = (f / q).monic();
          ++e;
        }
        out.emplace_back(std::move(q), e * outer);
      }
    }
  }
  return out;
}

}  // namespace tsr
