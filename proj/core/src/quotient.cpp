#include "tsr/quotient.hpp"

#include "tsr/errors.hpp"

namespace tsr {

QuotientGroup::QuotientGroup(const Group& ambient, const Subgroup& H, const Subgroup& K)
    : ambient_(&ambient), H_(H), K_(K) {
  if (!H.contains_subgroup(K)) throw NotNormal("kernel not contained in numerator");
  if (!K.is_normal_in(H)) throw NotNormal("kernel not normal in numerator");

  const Group& G = ambient;
  coset_of_.assign(G.order(), -1);
  std::vector<int> hs = H.member_indices();  // ascending
  std::vector<int> ks = K.member_indices();
  for (int h : hs) {
    if (coset_of_[h] >= 0) continue;
    int c = static_cast<int>(coset_rep_.size());
    coset_rep_.push_back(h);  // minimal rep, ascending scan
    for (int k : ks) coset_of_[G.mul(h, k)] = c;
  }
  const int nc = static_cast<int>(coset_rep_.size());

  // left multiplication action of H's generators on cosets
  std::vector<Perm> gens;
  std::vector<int> gen_elems = H.generator_elems();
  if (gen_elems.empty()) gen_elems.push_back(G.identity());
  for (int g : gen_elems) {
    std::vector<int> im(nc);
    for (int c = 0; c < nc; ++c) im[c] = coset_of_[G.mul(g, coset_rep_[c])];
    gens.emplace_back(std::move(im));
  }
  quot_ = std::make_shared<Group>(Group::generate(gens, nc, G.order() + 1));
  if (quot_->order() != nc)
    throw InternalInconsistency("quotient action is not regular");

  const int c0 = coset_of_[G.identity()];
  from_quot_.assign(nc, -1);
  to_quot_.assign(nc, -1);
  for (int q = 0; q < nc; ++q) {
    int c = quot_->element(q)[c0];
    from_quot_[q] = c;
    to_quot_[c] = q;
  }
}

int QuotientGroup::project(int h) const {
  int c = coset_of_[h];
  if (c < 0) throw InternalInconsistency("project: element outside numerator");
  return to_quot_[c];
}

int QuotientGroup::section(int q) const { return coset_rep_[from_quot_[q]]; }

}  // namespace tsr
