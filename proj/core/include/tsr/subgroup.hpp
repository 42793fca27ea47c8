#ifndef TSR_SUBGROUP_HPP
#define TSR_SUBGROUP_HPP

#include <vector>

#include "tsr/group.hpp"

namespace tsr {

// A subgroup of a parent Group, held as a bitset over element indices plus a
// small generating list.
class Subgroup {
public:
  Subgroup() = default;

  static Subgroup from_members(const Group& G, Bitset members);
  static Subgroup from_generators(const Group& G, const std::vector<int>& gen_elems);
  static Subgroup trivial(const Group& G);
  static Subgroup whole(const Group& G);

  const Group& parent() const { return *parent_; }
  int order() const { return order_; }
  bool contains(int e) const { return members_.test(e); }
  bool contains_subgroup(const Subgroup& H) const {
    return H.members_.subset_of(members_);
  }
  const Bitset& members() const { return members_; }
  std::vector<int> member_indices() const { return members_.indices(); }
  const std::vector<int>& generator_elems() const { return gens_; }

  Subgroup conjugated(int g) const;  // ^g H
  bool is_normal_in(const Subgroup& N) const;
  bool normalized_by(int g) const;   // ^g H == H

  bool operator==(const Subgroup& o) const { return members_ == o.members_; }
  // (order, set-lex) ordering; within equal order this is the "minimal
  // bitset" order used for canonical class representatives.
  bool canonical_less(const Subgroup& o) const;

private:
  const Group* parent_ = nullptr;
  Bitset members_;
  std::vector<int> gens_;
  int order_ = 0;
};

// Closure of a set of element indices inside G.
Bitset element_closure(const Group& G, const std::vector<int>& seed);

// Subgroup generated by the union of two subgroups.
Subgroup join(const Subgroup& A, const Subgroup& B);

Subgroup normalizer(const Group& G, const Subgroup& H);
Subgroup centralizer_in(const Group& G, const Subgroup& H, int s);

// Intersection of the maximal subgroups; for the trivial group, itself.
Subgroup frattini(const Subgroup& P, const std::vector<Subgroup>& subgroups_of_P);

// All subgroups of G with conjugacy classes. `all` is sorted by
// (order, set-lex); each class lists indices into `all` with the canonical
// (minimal) representative first.
struct SubgroupLattice {
  std::vector<Subgroup> all;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;            // all-index -> class index
  std::vector<int> witness;             // g with ^g all[i] == canonical rep
  std::vector<int> normalizer_idx;      // all-index of N_G(all[i])

  int index_of(const Bitset& members) const;
  int canonical_index(int i) const { return classes[class_of[i]][0]; }
  // indices into `all` of subgroups contained in all[i]
  std::vector<int> subgroups_below(int i) const;
};

SubgroupLattice enumerate_subgroups(const Group& G);

// Subgroup-level operations from the lattice.
std::vector<int> p_subgroup_indices(const SubgroupLattice& L, int64_t p);  // sorted
std::vector<int> p_class_rep_indices(const SubgroupLattice& L, int64_t p);
int frattini_index(const SubgroupLattice& L, int pSubIdx);
int core_p_index(const SubgroupLattice& L, int vIdx, int64_t p);

}  // namespace tsr

#endif
