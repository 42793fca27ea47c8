#include "tsr/brauer.hpp"

#include <algorithm>

#include "tsr/errors.hpp"

namespace tsr {

Cyclo brauer_value(const GModule& M, int elem) {
  const Group& H = M.group();
  const FFieldPtr& F = M.field();
  const int m = F->m();
  const int ord = H.element_order(elem);
  if (ord % F->p() == 0)
    throw InternalInconsistency("Brauer character evaluated at an element of order divisible by p");
  if (m % ord != 0) throw InternalInconsistency("element order does not divide the conductor");
  FMatrix A = M.matrix_of(elem);
  Cyclo value(Rat(0), m);
  int total = 0;
  const int step = m / ord;
  for (int j = 0; j < ord; ++j) {
    int64_t eig = F->pow(F->omega(), static_cast<int64_t>(j) * step);
    FMatrix shifted = A;
    for (int i = 0; i < A.rows(); ++i) shifted.at(i, i) = F->sub(shifted.at(i, i), eig);
    int mult = M.dim() - shifted.rank();
    if (mult == 0) continue;
    total += mult;
    value += Cyclo::zeta_power(m, static_cast<long>(j) * step) * Cyclo(Rat(mult), m);
  }
  if (total != M.dim())
    throw InternalInconsistency("eigenvalue multiplicities do not sum to the dimension");
  return value;
}

const Cyclo& BrauerTable::phihat(int elem, int phi) const {
  return L.at(class_index(elem), phi);
}

int BrauerTable::class_index(int elem) const {
  int c = ppclass_of[elem];
  if (c < 0) throw InternalInconsistency("element is not p-regular");
  return c;
}

BrauerTable build_brauer_table(const Group& H, FFieldPtr F, uint64_t seed) {
  BrauerTable T;
  T.p = F->p();
  T.m = F->m();
  T.ppclasses = pprime_classes(H, T.p);
  T.ppclass_of.assign(H.order(), -1);
  for (size_t c = 0; c < T.ppclasses.size(); ++c)
    for (int e : T.ppclasses[c].members) T.ppclass_of[e] = static_cast<int>(c);

  auto factors = chop(GModule::regular(H, F), seed);
  for (auto& [S, mult] : factors) {
    (void)mult;
    T.simples.push_back(std::move(S));
  }
  std::vector<BrauerCharacter> chars;
  for (const GModule& S : T.simples) {
    BrauerCharacter bc;
    bc.dim = S.dim();
    for (const ConjClass& c : T.ppclasses) bc.values.push_back(brauer_value(S, c.representative));
    chars.push_back(std::move(bc));
  }
  // canonical order: by dimension, then reverse-lexicographically on the
  // coordinate vectors, which puts the trivial character ahead of its peers
  std::vector<int> perm(chars.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  auto value_key = [&](int i) {
    std::vector<Rat> key;
    for (const Cyclo& v : chars[i].values)
      for (const Rat& r : v.coords()) key.push_back(r);
    return key;
  };
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (chars[a].dim != chars[b].dim) return chars[a].dim < chars[b].dim;
    return value_key(b) < value_key(a);
  });
  std::vector<GModule> simples;
  std::vector<BrauerCharacter> irr;
  for (int i : perm) {
    simples.push_back(std::move(T.simples[i]));
    irr.push_back(std::move(chars[i]));
  }
  T.simples = std::move(simples);
  T.irreducibles = std::move(irr);

  if (T.irreducibles.size() != T.ppclasses.size())
    throw InternalInconsistency("number of simples differs from the number of p'-classes");

  // projective table: invert the matrix with (phi, [s]) entry phi(s^-1)/|C(s)|
  const int k = T.n_irr();
  CycloMatrix A(k, k, T.m);
  for (int phi = 0; phi < k; ++phi)
    for (int s = 0; s < k; ++s) {
      int rep = T.ppclasses[s].representative;
      int inv_rep = H.inv(rep);
      int inv_cls = T.ppclass_of[inv_rep];
      if (inv_cls < 0) throw InternalInconsistency("inverse of a p'-element is not p'");
      long centralizer = H.order() / static_cast<long>(T.ppclasses[s].members.size());
      A.at(phi, s) =
          T.irreducibles[phi].values[inv_cls] * Cyclo(Rat(1, centralizer), T.m);
    }
  T.L = A.inverse();
  return T;
}

}  // namespace tsr
