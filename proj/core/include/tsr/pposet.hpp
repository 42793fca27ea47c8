#ifndef TSR_PPOSET_HPP
#define TSR_PPOSET_HPP

#include <map>
#include <tuple>

#include "tsr/subgroup.hpp"

namespace tsr {

// A slice of the g-fixed poset of p-subgroups, held as lattice indices in
// canonical (order, set-lex) order.
struct PosetSlice {
  const SubgroupLattice* lattice = nullptr;
  std::vector<int> elems;

  bool leq(int a, int b) const {  // positions into elems
    return lattice->all[elems[b]].contains_subgroup(lattice->all[elems[a]]);
  }
};

// p-subgroups R with lower (<|<=) R (<|<=) upper and g in N_G(R)
PosetSlice fixed_subposet(const Group& G, const SubgroupLattice& L, int64_t p, int g,
                          int lower_idx, int upper_idx, bool open_lower, bool open_upper);

// chain-counting reduced Euler characteristic; empty slice -> -1, point -> 0
long reduced_euler(const PosetSlice& S);

// Lemma-style contraction test: the slice contracts through R -> join(R, D)
// -> join(lower, D) when every join stays inside the slice and D does not
// already sit below the lower bound. Predicts a vanishing reduced Euler
// characteristic; used as a test oracle only.
bool has_conical_contraction(const Group& G, const SubgroupLattice& L, const PosetSlice& S,
                             int lower_idx, int D_idx);

// Memoized Moebius function of the g-fixed p-subgroup poset.
class MobiusCache {
public:
  MobiusCache(const Group& G, const SubgroupLattice& L, int64_t p)
      : G_(&G), L_(&L), p_(p) {}

  // throws NotFixed unless g normalizes both arguments (lattice indices)
  long mu(int g, int P_idx, int Q_idx);

private:
  const Group* G_;
  const SubgroupLattice* L_;
  int64_t p_;
  std::map<std::tuple<int, int, int>, long> memo_;
  std::map<int, std::vector<int>> p_below_;  // p-subgroups below a lattice index
  const std::vector<int>& p_subgroups_below(int idx);
};

}  // namespace tsr

#endif
