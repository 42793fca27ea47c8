#ifndef TSR_TSRING_HPP
#define TSR_TSRING_HPP

#include "tsr/cyclo_matrix.hpp"
#include "tsr/session.hpp"

namespace tsr {

// Species table: rows labeled by session.species(), columns by
// session.basis(); N.at(row, col) is the value of the row species at the
// column basis module.
struct SpeciesTable {
  std::vector<SpeciesIndex> rows;
  std::vector<BasisIndex> cols;
  CycloMatrix N;
};

struct IdempotentExpansion {
  SpeciesIndex target;
  std::vector<Cyclo> coeffs;  // aligned with session.basis()
};

// Entry sum over one group sweep: for row (Q,[s]) with lift t and column
// (R,psi), sum phihat(^g t . R) over g with ^gQ <= R and ^gt in N(R), then
// divide by |N(R)|.
SpeciesTable matrix_N(const Session& S);

// Same matrix through the two-sided sweep over z in G and over the whole
// class [s], with the centralizer correction factor. Cross-check only.
SpeciesTable matrix_N_alt(const Session& S);

// Inverse of the species table by the coset/Moebius formula, not by matrix
// inversion. Rows are basis indices, columns species indices.
CycloMatrix matrix_Ninv(const Session& S);

// Expansion of the primitive idempotent attached to one species in the
// canonical basis. Sums over all p-subgroups P <= Q and all p'-cosets gP,
// folding contributions onto canonical basis indices.
IdempotentExpansion idempotent(const Session& S, const SpeciesIndex& target);

// Brute-force species table: every basis value recovered from explicit
// modules. For each canonical P, the inductions to N_G(P)/P of the one-dim
// modules of its cyclic p'-subgroups are projective and their multiplicity
// matrix has full column rank, so species values of the (induced, inflated)
// canonical modules solve an overdetermined linear system whose data comes
// only from Brauer quotients of explicitly constructed modules.
CycloMatrix species_oracle_table(const Session& S);

// single-entry view of the oracle (computes the column group's block)
Cyclo species_oracle(const Session& S, int row, int col);

}  // namespace tsr

#endif
