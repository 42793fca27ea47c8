#include "tsr/subgroup.hpp"

#include <algorithm>
#include <map>

#include "tsr/errors.hpp"

namespace tsr {

Bitset element_closure(const Group& G, const std::vector<int>& seed) {
  Bitset seen(G.order());
  std::vector<int> frontier;
  seen.set(G.identity());
  frontier.push_back(G.identity());
  std::vector<int> gens;
  for (int s : seed)
    if (!seen.test(s)) {
      seen.set(s);
      frontier.push_back(s);
      gens.push_back(s);
    }
  for (size_t i = 0; i < frontier.size(); ++i) {
    for (int g : gens) {
      int x = G.mul(frontier[i], g);
      if (!seen.test(x)) {
        seen.set(x);
        frontier.push_back(x);
      }
      x = G.mul(g, frontier[i]);
      if (!seen.test(x)) {
        seen.set(x);
        frontier.push_back(x);
      }
    }
  }
  return seen;
}

Subgroup Subgroup::from_members(const Group& G, Bitset members) {
  Subgroup H;
  H.parent_ = &G;
  H.members_ = std::move(members);
  H.order_ = H.members_.count();
  // recover a small generating list greedily
  Bitset got(G.order());
  got.set(G.identity());
  int covered = 1;
  for (int e : H.members_.indices()) {
    if (got.test(e)) continue;
    H.gens_.push_back(e);
    std::vector<int> seed = H.gens_;
    got = element_closure(G, seed);
    covered = got.count();
    if (covered == H.order_) break;
  }
  return H;
}

Subgroup Subgroup::from_generators(const Group& G, const std::vector<int>& gen_elems) {
  Bitset m = element_closure(G, gen_elems);
  Subgroup H = from_members(G, std::move(m));
  return H;
}

Subgroup Subgroup::trivial(const Group& G) {
  Bitset m(G.order());
  m.set(G.identity());
  return from_members(G, std::move(m));
}

Subgroup Subgroup::whole(const Group& G) {
  Bitset m(G.order());
  for (int i = 0; i < G.order(); ++i) m.set(i);
  return from_members(G, std::move(m));
}

Subgroup Subgroup::conjugated(int g) const {
  const Group& G = *parent_;
  Bitset m(G.order());
  for (int e : members_.indices()) m.set(G.conj(g, e));
  Subgroup H;
  H.parent_ = parent_;
  H.members_ = std::move(m);
  H.order_ = order_;
  for (int e : gens_) H.gens_.push_back(G.conj(g, e));
  return H;
}

bool Subgroup::normalized_by(int g) const {
  const Group& G = *parent_;
  for (int e : gens_)
    if (!members_.test(G.conj(g, e))) return false;
  // generators conjugate back in, hence the whole subgroup does
  return true;
}

bool Subgroup::is_normal_in(const Subgroup& N) const {
  for (int g : N.gens_)
    if (!normalized_by(g)) return false;
  return true;
}

bool Subgroup::canonical_less(const Subgroup& o) const {
  if (order_ != o.order_) return order_ < o.order_;
  return members_.set_less(o.members_);
}

Subgroup join(const Subgroup& A, const Subgroup& B) {
  std::vector<int> seed = A.generator_elems();
  for (int e : B.generator_elems()) seed.push_back(e);
  return Subgroup::from_generators(A.parent(), seed);
}

Subgroup normalizer(const Group& G, const Subgroup& H) {
  Bitset m(G.order());
  for (int g = 0; g < G.order(); ++g)
    if (H.normalized_by(g)) m.set(g);
  return Subgroup::from_members(G, std::move(m));
}

Subgroup centralizer_in(const Group& G, const Subgroup& H, int s) {
  Bitset m(G.order());
  for (int g : H.member_indices())
    if (G.mul(g, s) == G.mul(s, g)) m.set(g);
  return Subgroup::from_members(G, std::move(m));
}

Subgroup frattini(const Subgroup& P, const std::vector<Subgroup>& subgroups_of_P) {
  if (P.order() == 1) return P;
  // maximal proper subgroups of P
  std::vector<const Subgroup*> proper;
  for (const auto& S : subgroups_of_P)
    if (S.order() < P.order()) proper.push_back(&S);
  std::vector<const Subgroup*> maximal;
  for (const Subgroup* S : proper) {
    bool is_max = true;
    for (const Subgroup* T : proper)
      if (T != S && T->contains_subgroup(*S) && T->order() > S->order()) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(S);
  }
  Bitset m = P.members();
  for (const Subgroup* S : maximal) m = m.intersect(S->members());
  return Subgroup::from_members(P.parent(), std::move(m));
}

int SubgroupLattice::index_of(const Bitset& members) const {
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i].members() == members) return static_cast<int>(i);
  throw InternalInconsistency("subgroup not found in lattice");
}

std::vector<int> SubgroupLattice::subgroups_below(int i) const {
  std::vector<int> out;
  for (size_t j = 0; j < all.size(); ++j)
    if (all[i].contains_subgroup(all[j])) out.push_back(static_cast<int>(j));
  return out;
}

SubgroupLattice enumerate_subgroups(const Group& G) {
  const int n = G.order();
  // seed: trivial plus all cyclic subgroups
  std::map<Bitset, Subgroup> found;
  Subgroup triv = Subgroup::trivial(G);
  found.emplace(triv.members(), triv);
  std::vector<Subgroup> frontier;
  for (int e = 0; e < n; ++e) {
    Subgroup C = Subgroup::from_generators(G, {e});
    if (found.emplace(C.members(), C).second) frontier.push_back(C);
  }
  // close under joins with cyclic subgroups
  std::vector<Subgroup> cyclics = frontier;
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& H : frontier) {
      for (const Subgroup& C : cyclics) {
        if (H.contains_subgroup(C)) continue;
        Subgroup J = join(H, C);
        if (found.emplace(J.members(), J).second) next.push_back(J);
      }
    }
    frontier = std::move(next);
  }

  SubgroupLattice L;
  for (auto& [m, H] : found) L.all.push_back(H);
  std::sort(L.all.begin(), L.all.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.canonical_less(b); });

  const int count = static_cast<int>(L.all.size());
  std::map<Bitset, int> index;
  for (int i = 0; i < count; ++i) index.emplace(L.all[i].members(), i);

  L.class_of.assign(count, -1);
  L.witness.assign(count, -1);
  for (int i = 0; i < count; ++i) {
    if (L.class_of[i] >= 0) continue;
    // i is minimal in its class since we scan in canonical order
    int cls = static_cast<int>(L.classes.size());
    std::vector<int> members{i};
    L.class_of[i] = cls;
    L.witness[i] = G.identity();
    for (int g = 0; g < n; ++g) {
      Subgroup K = L.all[i].conjugated(g);
      int j = index.at(K.members());
      if (L.class_of[j] < 0) {
        L.class_of[j] = cls;
        // ^g all[i] == all[j], so ^(g^-1) all[j] == all[i]
        L.witness[j] = G.inv(g);
        members.push_back(j);
      }
    }
    std::sort(members.begin() + 1, members.end());
    L.classes.push_back(std::move(members));
  }

  L.normalizer_idx.assign(count, -1);
  for (int i = 0; i < count; ++i) {
    Subgroup N = normalizer(G, L.all[i]);
    L.normalizer_idx[i] = index.at(N.members());
  }
  return L;
}

std::vector<int> p_subgroup_indices(const SubgroupLattice& L, int64_t p) {
  std::vector<int> out;
  for (size_t i = 0; i < L.all.size(); ++i) {
    int o = L.all[i].order();
    while (o % p == 0) o /= static_cast<int>(p);
    if (o == 1) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> p_class_rep_indices(const SubgroupLattice& L, int64_t p) {
  std::vector<int> out;
  for (int i : p_subgroup_indices(L, p))
    if (L.canonical_index(i) == i) out.push_back(i);
  return out;
}

int frattini_index(const SubgroupLattice& L, int pSubIdx) {
  const Subgroup& P = L.all[pSubIdx];
  std::vector<Subgroup> subs;
  for (int j : L.subgroups_below(pSubIdx)) subs.push_back(L.all[j]);
  Subgroup F = frattini(P, subs);
  return L.index_of(F.members());
}

int core_p_index(const SubgroupLattice& L, int vIdx, int64_t p) {
  // largest normal p-subgroup of all[vIdx]
  const Subgroup& V = L.all[vIdx];
  int best = -1;
  int best_order = 0;
  for (int j : L.subgroups_below(vIdx)) {
    const Subgroup& S = L.all[j];
    int o = S.order();
    while (o % p == 0) o /= static_cast<int>(p);
    if (o != 1) continue;
    if (!S.is_normal_in(V)) continue;
    if (S.order() > best_order) {
      best_order = S.order();
      best = j;
    }
  }
  if (best < 0) throw InternalInconsistency("core_p: no normal p-subgroup found");
  return best;
}

}  // namespace tsr
