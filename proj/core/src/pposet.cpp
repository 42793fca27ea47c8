#include "tsr/pposet.hpp"

#include <algorithm>

#include "tsr/errors.hpp"

namespace tsr {

namespace {

bool is_p_group(const Subgroup& S, int64_t p) {
  int o = S.order();
  while (o % p == 0) o /= static_cast<int>(p);
  return o == 1;
}

}  // namespace

PosetSlice fixed_subposet(const Group& G, const SubgroupLattice& L, int64_t p, int g,
                          int lower_idx, int upper_idx, bool open_lower, bool open_upper) {
  (void)G;
  const Subgroup& lower = L.all[lower_idx];
  const Subgroup& upper = L.all[upper_idx];
  if (!upper.contains_subgroup(lower))
    throw InternalInconsistency("poset slice bounds are not nested");
  PosetSlice S;
  S.lattice = &L;
  for (int i : L.subgroups_below(upper_idx)) {
    const Subgroup& R = L.all[i];
    if (!is_p_group(R, p)) continue;
    if (!R.contains_subgroup(lower)) continue;
    if (open_lower && R.order() == lower.order()) continue;
    if (open_upper && R.order() == upper.order()) continue;
    if (!R.normalized_by(g)) continue;
    S.elems.push_back(i);
  }
  return S;
}

long reduced_euler(const PosetSlice& S) {
  // w(x) = sum over chains ending at x of (-1)^(len-1); chi = -1 + sum w
  const int n = static_cast<int>(S.elems.size());
  std::vector<long> w(n, 0);
  long total = -1;
  // elems are sorted by (order, set-lex), so a < b in the poset implies a
  // comes earlier; a single ascending pass suffices
  for (int b = 0; b < n; ++b) {
    long acc = 1;
    for (int a = 0; a < b; ++a)
      if (S.leq(a, b)) acc -= w[a];
    w[b] = acc;
    total += acc;
  }
  return total;
}

bool has_conical_contraction(const Group& G, const SubgroupLattice& L, const PosetSlice& S,
                             int lower_idx, int D_idx) {
  const Subgroup& lower = L.all[lower_idx];
  const Subgroup& D = L.all[D_idx];
  if (D.members().subset_of(lower.members())) return false;
  auto join_idx_in_slice = [&](int a_idx) -> bool {
    Subgroup J = join(L.all[a_idx], D);
    (void)G;
    for (int e : S.elems)
      if (L.all[e].members() == J.members()) return true;
    return false;
  };
  for (int e : S.elems)
    if (!join_idx_in_slice(e)) return false;
  return join_idx_in_slice(lower_idx);
}

const std::vector<int>& MobiusCache::p_subgroups_below(int idx) {
  auto it = p_below_.find(idx);
  if (it != p_below_.end()) return it->second;
  std::vector<int> out;
  for (int i : L_->subgroups_below(idx))
    if (is_p_group(L_->all[i], p_)) out.push_back(i);
  return p_below_.emplace(idx, std::move(out)).first->second;
}

long MobiusCache::mu(int g, int P_idx, int Q_idx) {
  const Subgroup& P = L_->all[P_idx];
  const Subgroup& Q = L_->all[Q_idx];
  if (!P.normalized_by(g) || !Q.normalized_by(g))
    throw NotFixed("Moebius arguments must be fixed by the acting element");
  if (P_idx == Q_idx) return 1;
  if (!Q.contains_subgroup(P)) return 0;
  auto key = std::make_tuple(g, P_idx, Q_idx);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  long acc = 0;
  for (int r : p_subgroups_below(Q_idx)) {
    if (r == Q_idx) continue;
    const Subgroup& R = L_->all[r];
    if (!R.contains_subgroup(P)) continue;
    if (!R.normalized_by(g)) continue;
    acc -= mu(g, P_idx, r);
  }
  memo_.emplace(key, acc);
  return acc;
}

}  // namespace tsr
