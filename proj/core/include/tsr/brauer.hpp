#ifndef TSR_BRAUER_HPP
#define TSR_BRAUER_HPP

#include "tsr/chop.hpp"
#include "tsr/cyclo_matrix.hpp"

namespace tsr {

// Brauer character value of M at a p'-element: eigenvalue multiplicities of
// rho(elem), lifted through omega^j <-> zeta_m^j.
Cyclo brauer_value(const GModule& M, int elem);

struct BrauerCharacter {
  int dim = 0;
  std::vector<Cyclo> values;  // indexed by the p'-class order of the group
  bool operator==(const BrauerCharacter& o) const { return values == o.values; }
};

// Brauer data of one group H at a prime p: irreducible characters with their
// simple modules, and the projective character table.
struct BrauerTable {
  int64_t p = 2;
  int m = 1;
  std::vector<ConjClass> ppclasses;         // p'-classes of H, rep-ascending
  std::vector<int> ppclass_of;              // element -> p'-class index, -1 if not p'
  std::vector<GModule> simples;             // canonical order
  std::vector<BrauerCharacter> irreducibles;
  CycloMatrix L;                            // L[s][phi] = projective character value

  int n_irr() const { return static_cast<int>(irreducibles.size()); }
  // projective character of phi at the class of a p'-element
  const Cyclo& phihat(int elem, int phi) const;
  int class_index(int elem) const;  // throws InternalInconsistency if not p'
};

BrauerTable build_brauer_table(const Group& H, FFieldPtr F, uint64_t seed);

}  // namespace tsr

#endif
