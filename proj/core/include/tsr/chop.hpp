#ifndef TSR_CHOP_HPP
#define TSR_CHOP_HPP

#include <cstdint>

#include "tsr/gmodule.hpp"

namespace tsr {

// Composition factors of M with multiplicities, grouped by Brauer character
// (charpoly fingerprint over p'-class representatives). Deterministic for a
// fixed seed; the character multiset is seed independent.
std::vector<std::pair<GModule, int>> chop(const GModule& M, uint64_t seed);

}  // namespace tsr

#endif
