#ifndef TSR_GROUP_HPP
#define TSR_GROUP_HPP

#include <cstdint>
#include <vector>

#include "tsr/perm.hpp"

namespace tsr {

// Fixed-size bit vector used for element subsets of a group.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  int count() const;

  bool subset_of(const Bitset& other) const;
  Bitset intersect(const Bitset& other) const;
  Bitset unite(const Bitset& other) const;

  bool operator==(const Bitset&) const = default;
  // Orders sets by their sorted element lists, lexicographically: the set
  // containing the smallest differing index comes first.
  bool set_less(const Bitset& other) const;
  bool operator<(const Bitset& other) const { return set_less(other); }

  std::vector<int> indices() const;
  uint64_t hash() const;

private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct ConjClass {
  int representative = 0;       // minimal element index in the class
  std::vector<int> members;     // ascending element indices
};

inline constexpr int kDefaultOrderCap = 400;

// A finite permutation group held by full element enumeration. Elements are
// sorted lexicographically on image arrays, so the identity has index 0.
// Immutable after construction.
class Group {
public:
  static Group generate(std::vector<Perm> generators, int degree,
                        int order_cap = kDefaultOrderCap);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int i) const { return elements_[i]; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<int>& generator_indices() const { return generator_indices_; }

  // -1 when the permutation is not an element
  int index_of(const Perm& p) const;

  int mul(int a, int b) const { return table_[a * order() + b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }  // g h g^-1
  int identity() const { return 0; }

  int element_order(int a) const { return element_order_[a]; }
  int exponent() const;

  // a = gens[w[0]] * gens[w[1]] * ... (left-to-right product); identity -> {}
  std::vector<int> word(int a) const;

  // a = gens[bfs_gen(a)] * bfs_parent(a) for a != identity
  int bfs_parent(int a) const { return bfs_parent_[a]; }
  int bfs_gen(int a) const { return bfs_gen_[a]; }

  // p'-part of an element: the unique p'-element commuting with a p-element
  // whose product is a.
  int pprime_part(int a, int64_t p) const;

  const std::vector<ConjClass>& classes() const;
  int class_of(int a) const;

  // FNV-1a over degree and the sorted element image arrays.
  uint64_t content_hash() const;

private:
  int degree_ = 1;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
  std::vector<int> generator_indices_;
  std::vector<int> table_;          // order x order
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  std::vector<int> bfs_parent_;     // element = gens[bfs_gen_] * bfs_parent_
  std::vector<int> bfs_gen_;
  mutable std::vector<ConjClass> classes_;
  mutable std::vector<int> class_of_;

  void build_tables();
};

// Conjugacy classes with representatives of order coprime to p, in class
// order (identity class first).
std::vector<ConjClass> pprime_classes(const Group& H, int64_t p);

}  // namespace tsr

#endif
