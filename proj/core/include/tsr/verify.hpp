#ifndef TSR_VERIFY_HPP
#define TSR_VERIFY_HPP

#include <string>

#include "tsr/monomial.hpp"

namespace tsr {

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty when passing
};

// poset layer
PropertyResult check_mobius_euler(const Session& S);
PropertyResult check_mobius_recurrences(const Session& S);
PropertyResult check_mobius_frattini(const Session& S);
PropertyResult check_mobius_equivariance(const Session& S);

// species table layer
PropertyResult check_inversion(const SpeciesTable& N, const CycloMatrix& Ninv);
PropertyResult check_alt_equality(const Session& S, const SpeciesTable& N);
PropertyResult check_oracle_equality(const Session& S, const SpeciesTable& N);
PropertyResult check_triangularity(const Session& S, const SpeciesTable& N,
                                   const CycloMatrix& Ninv);
PropertyResult check_diagonal_blocks(const Session& S, const SpeciesTable& N,
                                     const CycloMatrix& Ninv);
PropertyResult check_idempotent_columns(const Session& S, const CycloMatrix& Ninv);
PropertyResult check_species_delta(const Session& S, const SpeciesTable& N);
PropertyResult check_frattini_support(const Session& S);
PropertyResult check_brauer_sanity(const Session& S);

// linearization layer
PropertyResult check_linearization(const Session& S, const SpeciesTable& N);
PropertyResult check_identity_expansion(const Session& S);

// the full mesh, in a fixed order
std::vector<PropertyResult> run_verification(const Session& S);

}  // namespace tsr

#endif
