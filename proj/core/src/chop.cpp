#include "tsr/chop.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "tsr/errors.hpp"

namespace tsr {

namespace {

constexpr int kAttemptBudget = 64;

RowSpace spin(const std::vector<FMatrix>& gens, const FFieldPtr& F,
              const std::vector<int64_t>& seed_vec, int dim) {
  RowSpace W(F, dim);
  W.insert(seed_vec);
  std::vector<std::vector<int64_t>> frontier{seed_vec};
  while (!frontier.empty()) {
    std::vector<std::vector<int64_t>> next;
    for (const auto& v : frontier)
      for (const FMatrix& g : gens) {
        std::vector<int64_t> img = g.apply(v);
        if (W.insert(img)) next.push_back(std::move(img));
      }
    frontier = std::move(next);
  }
  return W;
}

// restriction of the action to the span W (coordinates in W's basis)
GModule sub_module(const GModule& M, const RowSpace& W) {
  const FFieldPtr& F = M.field();
  const int d = W.dimension();
  std::vector<FMatrix> gens;
  for (const FMatrix& g : M.gen_matrices()) {
    FMatrix m(F, d, d);
    for (int j = 0; j < d; ++j) {
      std::vector<int64_t> coords = W.coordinates(g.apply(W.basis()[j]));
      for (int i = 0; i < d; ++i) m.at(i, j) = coords[i];
    }
    gens.push_back(std::move(m));
  }
  return GModule(M.group(), F, d, std::move(gens));
}

// action induced on M / span(W), coordinates on the non-pivot positions
GModule quotient_module(const GModule& M, const RowSpace& W) {
  const FFieldPtr& F = M.field();
  const int n = M.dim();
  std::vector<char> is_pivot(n, 0);
  for (int p : W.pivots()) is_pivot[p] = 1;
  std::vector<int> free_pos;
  for (int i = 0; i < n; ++i)
    if (!is_pivot[i]) free_pos.push_back(i);
  const int d = static_cast<int>(free_pos.size());
  auto reduce_mod_W = [&](std::vector<int64_t> v) {
    for (size_t r = 0; r < W.basis().size(); ++r) {
      int64_t f = v[W.pivots()[r]];
      if (f == 0) continue;
      for (int i = 0; i < n; ++i) v[i] = F->sub(v[i], F->mul(f, W.basis()[r][i]));
    }
    return v;
  };
  std::vector<FMatrix> gens;
  for (const FMatrix& g : M.gen_matrices()) {
    FMatrix m(F, d, d);
    for (int j = 0; j < d; ++j) {
      std::vector<int64_t> e(n, 0);
      e[free_pos[j]] = 1;
      std::vector<int64_t> img = reduce_mod_W(g.apply(e));
      for (int i = 0; i < d; ++i) m.at(i, j) = img[free_pos[i]];
    }
    gens.push_back(std::move(m));
  }
  return GModule(M.group(), F, d, std::move(gens));
}

FMatrix random_algebra_element(const GModule& M, std::mt19937_64& rng, int richness) {
  const FFieldPtr& F = M.field();
  const int n = M.dim();
  const auto& gens = M.gen_matrices();
  FMatrix theta(F, n, n);
  const int terms = 2 + richness;
  for (int t = 0; t < terms; ++t) {
    int len = 1 + static_cast<int>(rng() % static_cast<uint64_t>(1 + richness % 3));
    FMatrix w = FMatrix::identity(F, n);
    for (int l = 0; l < len; ++l) w = w * gens[rng() % gens.size()];
    int64_t c = static_cast<int64_t>(1 + rng() % static_cast<uint64_t>(F->q() - 1));
    theta = theta + w.scaled(c);
  }
  return theta;
}

struct SplitOutcome {
  bool split = false;
  bool certified = false;
  GModule sub, quot;
};

// subspace spanned by vectors orthogonal to all rows in Wt (the dual spin)
RowSpace perp_space(const FFieldPtr& F, const RowSpace& Wt, int n) {
  FMatrix rows(F, Wt.dimension(), n);
  for (int i = 0; i < Wt.dimension(); ++i)
    for (int j = 0; j < n; ++j) rows.at(i, j) = Wt.basis()[i][j];
  RowSpace out(F, n);
  for (auto& v : rows.kernel_basis()) out.insert(v);
  return out;
}

SplitOutcome try_split(const GModule& M, std::mt19937_64& rng) {
  const FFieldPtr& F = M.field();
  const int n = M.dim();
  SplitOutcome out;
  if (n <= 1) {
    out.certified = true;
    return out;
  }
  std::vector<FMatrix> tgens;
  for (const FMatrix& g : M.gen_matrices()) tgens.push_back(g.transposed());

  for (int attempt = 0; attempt < kAttemptBudget; ++attempt) {
    FMatrix theta = random_algebra_element(M, rng, attempt);
    FPoly cp = theta.charpoly();
    auto factors = fpoly_factor(cp, rng);
    std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
      if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
      return a.first.coeffs() < b.first.coeffs();
    });
    for (const auto& [g, mult] : factors) {
      FMatrix A = poly_eval_matrix(g, theta);
      auto ker = A.kernel_basis();
      if (ker.empty()) throw InternalInconsistency("charpoly factor with trivial kernel");
      for (const auto& v : ker) {
        RowSpace W = spin(M.gen_matrices(), F, v, n);
        if (W.dimension() < n) {
          out.split = true;
          out.sub = sub_module(M, W);
          out.quot = quotient_module(M, W);
          return out;
        }
        // with minimal nullity one vector decides; otherwise keep scanning
        if (static_cast<int>(ker.size()) == g.degree()) break;
      }
      if (static_cast<int>(ker.size()) == g.degree()) {
        auto tker = A.transposed().kernel_basis();
        if (tker.empty()) throw InternalInconsistency("transposed kernel vanished");
        RowSpace Wt = spin(tgens, F, tker[0], n);
        if (Wt.dimension() < n) {
          RowSpace W = perp_space(F, Wt, n);
          out.split = true;
          out.sub = sub_module(M, W);
          out.quot = quotient_module(M, W);
          return out;
        }
        out.certified = true;  // Norton certificate complete
        return out;
      }
    }
  }
  throw ChopBudgetExceeded("no splitting element found within the attempt budget");
}

std::vector<std::vector<int64_t>> fingerprint(const GModule& S) {
  const Group& H = S.group();
  const int64_t p = S.field()->p();
  std::vector<std::vector<int64_t>> fp;
  for (const ConjClass& c : pprime_classes(H, p))
    fp.push_back(S.matrix_of(c.representative).charpoly().coeffs());
  return fp;
}

}  // namespace

std::vector<std::pair<GModule, int>> chop(const GModule& M, uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<GModule> stack{M};
  std::vector<GModule> irreducibles;
  while (!stack.empty()) {
    GModule X = std::move(stack.back());
    stack.pop_back();
    if (X.dim() == 0) continue;
    SplitOutcome r = try_split(X, rng);
    if (r.certified) {
      irreducibles.push_back(std::move(X));
    } else {
      stack.push_back(std::move(r.quot));
      stack.push_back(std::move(r.sub));
    }
  }
  // group by character fingerprint
  std::map<std::vector<std::vector<int64_t>>, int> slot;
  std::vector<std::pair<GModule, int>> out;
  for (GModule& S : irreducibles) {
    auto fp = fingerprint(S);
    auto it = slot.find(fp);
    if (it == slot.end()) {
      slot.emplace(std::move(fp), static_cast<int>(out.size()));
      out.emplace_back(std::move(S), 1);
    } else {
      ++out[it->second].second;
    }
  }
  return out;
}

}  // namespace tsr
