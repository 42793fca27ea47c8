#ifndef TSR_CONSTRUCTIONS_HPP
#define TSR_CONSTRUCTIONS_HPP

#include <string>

#include "tsr/group.hpp"

namespace tsr {

Group cyclic_group(int n, int cap = kDefaultOrderCap);
Group dihedral_group(int order, int cap = kDefaultOrderCap);  // order = 2n
Group symmetric_group(int n, int cap = kDefaultOrderCap);
Group alternating_group(int n, int cap = kDefaultOrderCap);
Group quaternion8(int cap = kDefaultOrderCap);
Group klein4(int cap = kDefaultOrderCap);
Group elementary_abelian(int p, int k, int cap = kDefaultOrderCap);
Group direct_product(const Group& A, const Group& B, int cap = kDefaultOrderCap);

// Parses a group spec: a named constructor ("cyclic 6", "dihedral 8",
// "symmetric 4", "alternating 4", "quaternion8", "klein4",
// "elementary_abelian(3,2)"), a terse alias ("C6", "D8", "S4", "A4", "Q8"),
// a direct product of specs joined by "x", or a raw generator list in cycle
// notation ("(0 1 2 3), (0 2)").
Group parse_group_spec(const std::string& spec, int cap = kDefaultOrderCap);

}  // namespace tsr

#endif
