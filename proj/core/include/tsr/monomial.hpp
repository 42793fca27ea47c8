#ifndef TSR_MONOMIAL_HPP
#define TSR_MONOMIAL_HPP

#include "tsr/tsring.hpp"

namespace tsr {

// Pair (V, nu): a subgroup (canonical class representative, as a lattice
// index) together with a linear character into the m-th roots of unity,
// stored as exponents of zeta_m per ambient element (-1 outside V).
struct MonomialPair {
  int v_idx = 0;
  std::vector<int> nu_exp;
};

// All homomorphisms V -> mu_m, found by extending generator assignments and
// keeping those that survive a full element-by-element homomorphism check.
// Each result is an exponent map as in MonomialPair::nu_exp.
std::vector<std::vector<int>> linear_characters(const Group& G, const Subgroup& V, int64_t p,
                                                int m);

// Conjugacy class representatives of pairs (V, nu): canonical V, characters
// deduplicated under the N_G(V)-action, keeping the lexicographically least
// exponent map of each orbit.
std::vector<MonomialPair> monomial_pairs(const Session& S);

Cyclo nu_value(const Session& S, const MonomialPair& pair, int elem);

// Row of the linearization matrix: coefficients of the induced module of
// (V, nu) on the canonical basis, via the signed Euler-characteristic sum
// folded onto canonical basis indices.
std::vector<Cyclo> lin_row(const Session& S, const MonomialPair& pair);

// Direct species value of the induced module of (V, nu): a coset sum needing
// no basis expansion; the independent check of lin_row. The lift of s is the
// p'-part of the section representative (any lift gives the same value).
Cyclo species_of_induced(const Session& S, const MonomialPair& pair, const SpeciesIndex& row);

struct LinReport {
  bool integer_coeffs = true;
  bool support_law = true;
  bool species_match = true;
  bool pass() const { return integer_coeffs && support_law && species_match; }
};

// Per-pair verification of the linearization row against the species table.
LinReport verify_lin_pair(const Session& S, const SpeciesTable& N, const MonomialPair& pair);

}  // namespace tsr

#endif
