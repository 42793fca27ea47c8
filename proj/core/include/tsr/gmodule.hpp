#ifndef TSR_GMODULE_HPP
#define TSR_GMODULE_HPP

#include "tsr/fmatrix.hpp"
#include "tsr/quotient.hpp"
#include "tsr/subgroup.hpp"

namespace tsr {

// A finite-dimensional module over a group algebra F H, stored as one action
// matrix per group generator (column-vector convention, left action).
class GModule {
public:
  GModule() = default;
  GModule(const Group& H, FFieldPtr F, int dim, std::vector<FMatrix> gen_mats);

  static GModule trivial(const Group& H, FFieldPtr F);
  static GModule regular(const Group& H, FFieldPtr F);
  // 1-dim module from a character given as field codes on every element of H
  static GModule linear(const Group& H, FFieldPtr F, const std::vector<int64_t>& values);

  const Group& group() const { return *H_; }
  const FFieldPtr& field() const { return F_; }
  int dim() const { return dim_; }
  const std::vector<FMatrix>& gen_matrices() const { return gen_; }

  FMatrix matrix_of(int elem) const;
  std::vector<FMatrix> all_matrices() const;  // indexed by element, built incrementally

  // exhaustive homomorphism check of the action map (desk-scale test hook)
  bool check_relations() const;

private:
  const Group* H_ = nullptr;
  FFieldPtr F_;
  int dim_ = 0;
  std::vector<FMatrix> gen_;
};

// ascending minimal left-coset representatives of S in G, plus the coset map
struct CosetDecomposition {
  std::vector<int> reps;      // coset index -> minimal representative
  std::vector<int> coset_of;  // element -> coset index
};
CosetDecomposition left_cosets(const Group& G, const Subgroup& S);

// Ind_S^H of the 1-dim module with character `values` (field codes on the
// elements of S, indexed by ambient element index).
GModule induced_linear(const Group& H, const Subgroup& S, const std::vector<int64_t>& values,
                       FFieldPtr F);

// Ind_{N_G(P)}^G Inf_{N/P}^{N} E, where nbar realizes N/P and E is a module
// of nbar.group().
GModule induce_inflate(const Group& G, const Subgroup& P, const QuotientGroup& nbar,
                       const GModule& E);

// Brauer quotient M[P] = M^P / sum of relative traces from maximal subgroups,
// as a module over nbar.group() (nbar realizes N_G(P)/P). `maximals` lists
// the maximal subgroups of P.
GModule brauer_quotient(const GModule& M, const Subgroup& P, const QuotientGroup& nbar,
                        const std::vector<Subgroup>& maximals);

}  // namespace tsr

#endif
