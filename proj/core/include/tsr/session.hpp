#ifndef TSR_SESSION_HPP
#define TSR_SESSION_HPP

#include <memory>
#include <vector>

#include "tsr/brauer.hpp"
#include "tsr/pposet.hpp"
#include "tsr/quotient.hpp"

namespace tsr {

// Row/column labels of the species table. `loc` indexes Session::local();
// `phi` is a character number and `cls` a p'-class number of N_G(P)/P.
struct BasisIndex {
  int loc = 0;
  int phi = 0;
};

struct SpeciesIndex {
  int loc = 0;
  int cls = 0;
};

// Everything attached to one canonical p-subgroup representative P.
struct LocalData {
  int sub_idx = 0;                      // lattice index of P
  Subgroup N;                           // N_G(P)
  std::shared_ptr<QuotientGroup> nbar;  // N_G(P)/P
  std::shared_ptr<BrauerTable> table;
  std::vector<Subgroup> maximals;       // maximal subgroups of P
};

// Shared context for one (G, p) run. Owns the group, so it is pinned in
// memory; everything else points into it.
class Session {
public:
  Session(Group G, int64_t p, uint64_t seed);
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  const Group& group() const { return G_; }
  int64_t p() const { return p_; }
  uint64_t seed() const { return seed_; }
  int conductor() const { return m_; }
  const FFieldPtr& field() const { return F_; }

  const SubgroupLattice& lattice() const { return lat_; }
  const std::vector<int>& p_subgroups() const { return psubs_; }

  int n_locals() const { return static_cast<int>(locals_.size()); }
  const LocalData& local(int loc) const { return locals_[loc]; }
  // lattice index of a p-subgroup -> local index of its canonical class rep
  int loc_of(int sub_idx) const;

  MobiusCache& mobius() const { return mobius_; }

  const std::vector<BasisIndex>& basis() const { return C_; }
  const std::vector<SpeciesIndex>& species() const { return E_; }
  int size() const { return static_cast<int>(C_.size()); }
  int basis_pos(int loc, int phi) const { return basis_offset_[loc] + phi; }
  int species_pos(int loc, int cls) const { return species_offset_[loc] + cls; }

private:
  Group G_;
  int64_t p_;
  uint64_t seed_;
  int m_;
  FFieldPtr F_;
  SubgroupLattice lat_;
  std::vector<int> psubs_;
  std::vector<LocalData> locals_;
  std::vector<int> loc_map_;  // lattice index -> local index, -1 elsewhere
  mutable MobiusCache mobius_;
  std::vector<BasisIndex> C_;
  std::vector<SpeciesIndex> E_;
  std::vector<int> basis_offset_;
  std::vector<int> species_offset_;
};

}  // namespace tsr

#endif
