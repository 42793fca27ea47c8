#ifndef TSR_QUOTIENT_HPP
#define TSR_QUOTIENT_HPP

#include <memory>
#include <vector>

#include "tsr/subgroup.hpp"

namespace tsr {

// H/K for K normal in H, realized as a permutation group on the cosets of K.
// H is itself a subgroup of some ambient group; element indices on the H side
// are ambient indices.
class QuotientGroup {
public:
  QuotientGroup(const Group& ambient, const Subgroup& H, const Subgroup& K);

  const Group& group() const { return *quot_; }
  const Subgroup& numerator() const { return H_; }
  const Subgroup& kernel() const { return K_; }

  // ambient element index (must lie in H) -> quotient element index
  int project(int h) const;
  // quotient element index -> minimal ambient coset representative
  int section(int q) const;

private:
  const Group* ambient_;
  Subgroup H_;
  Subgroup K_;
  std::shared_ptr<Group> quot_;
  std::vector<int> coset_of_;   // ambient index -> coset number (-1 outside H)
  std::vector<int> coset_rep_;  // coset number -> minimal ambient rep
  std::vector<int> to_quot_;    // coset number -> quotient element index
  std::vector<int> from_quot_;  // quotient element index -> coset number
};

}  // namespace tsr

#endif
