#include "tsr/session.hpp"

#include "tsr/errors.hpp"

namespace tsr {

Session::Session(Group G, int64_t p, uint64_t seed)
    : G_(std::move(G)), p_(p), seed_(seed), m_(1), lat_(), mobius_(G_, lat_, p) {
  int e = G_.exponent();
  while (e % p_ == 0) e /= static_cast<int>(p_);
  m_ = e;
  F_ = FField::build(p_, m_);

  lat_ = enumerate_subgroups(G_);
  psubs_ = p_subgroup_indices(lat_, p_);
  const std::vector<int> reps = p_class_rep_indices(lat_, p_);

  loc_map_.assign(lat_.all.size(), -1);
  for (int r : reps) {
    LocalData ld;
    ld.sub_idx = r;
    ld.N = lat_.all[lat_.normalizer_idx[r]];
    ld.nbar = std::make_shared<QuotientGroup>(G_, ld.N, lat_.all[r]);
    const uint64_t local_seed = seed_ ^ (0x9e3779b97f4a7c15ull * static_cast<uint64_t>(r + 1));
    ld.table = std::make_shared<BrauerTable>(build_brauer_table(ld.nbar->group(), F_, local_seed));
    const int sub_order = lat_.all[r].order() / static_cast<int>(p_);
    for (int j : lat_.subgroups_below(r))
      if (lat_.all[j].order() == sub_order) ld.maximals.push_back(lat_.all[j]);
    loc_map_[r] = static_cast<int>(locals_.size());
    locals_.push_back(std::move(ld));
  }

  basis_offset_.resize(locals_.size());
  species_offset_.resize(locals_.size());
  for (int loc = 0; loc < n_locals(); ++loc) {
    const BrauerTable& t = *locals_[loc].table;
    basis_offset_[loc] = static_cast<int>(C_.size());
    for (int phi = 0; phi < t.n_irr(); ++phi) C_.push_back({loc, phi});
    species_offset_[loc] = static_cast<int>(E_.size());
    for (int cls = 0; cls < static_cast<int>(t.ppclasses.size()); ++cls)
      E_.push_back({loc, cls});
  }
  if (C_.size() != E_.size())
    throw SizeMismatch("index sets C(G) and E(G) have different sizes");
}

int Session::loc_of(int sub_idx) const {
  const int loc = loc_map_[lat_.canonical_index(sub_idx)];
  if (loc < 0) throw InternalInconsistency("loc_of: not a p-subgroup index");
  return loc;
}

}  // namespace tsr
