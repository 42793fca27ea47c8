#include "tsr/group.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "tsr/errors.hpp"

namespace tsr {

int Bitset::count() const {
  int c = 0;
  for (uint64_t w : w_) c += std::popcount(w);
  return c;
}

bool Bitset::subset_of(const Bitset& other) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~other.w_[i]) return false;
  return true;
}

Bitset Bitset::intersect(const Bitset& other) const {
  Bitset r(n_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & other.w_[i];
  return r;
}

Bitset Bitset::unite(const Bitset& other) const {
  Bitset r(n_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | other.w_[i];
  return r;
}

bool Bitset::set_less(const Bitset& other) const {
  for (size_t i = 0; i < w_.size(); ++i) {
    uint64_t diff = w_[i] ^ other.w_[i];
    if (diff) {
      uint64_t lowest = diff & (~diff + 1);
      return w_[i] & lowest;  // we contain the smallest differing index
    }
  }
  return false;
}

std::vector<int> Bitset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

uint64_t Bitset::hash() const {
  uint64_t h = 1469598103934665603ull;
  for (uint64_t w : w_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return h;
}

Group Group::generate(std::vector<Perm> generators, int degree, int order_cap) {
  for (const Perm& g : generators)
    if (g.degree() != degree) throw ShapeMismatch("generator degree mismatch");

  Group G;
  G.degree_ = degree;
  G.generators_ = std::move(generators);

  // BFS closure, recording how each element was first reached
  std::map<Perm, int> seen;
  std::vector<Perm> order_found;
  std::vector<int> parent, genidx;
  Perm id = Perm::identity(degree);
  seen[id] = 0;
  order_found.push_back(id);
  parent.push_back(-1);
  genidx.push_back(-1);
  for (size_t head = 0; head < order_found.size(); ++head) {
    Perm cur = order_found[head];
    for (size_t j = 0; j < G.generators_.size(); ++j) {
      Perm nxt = G.generators_[j] * cur;
      if (seen.emplace(nxt, static_cast<int>(order_found.size())).second) {
        order_found.push_back(nxt);
        parent.push_back(static_cast<int>(head));
        genidx.push_back(static_cast<int>(j));
        if (static_cast<int>(order_found.size()) > order_cap)
          throw OrderCapExceeded("group order exceeds cap of " +
                                 std::to_string(order_cap));
      }
    }
  }

  // re-index into lexicographic order
  G.elements_.reserve(order_found.size());
  for (const auto& [perm, idx] : seen) {
    (void)idx;
    G.elements_.push_back(perm);
  }
  std::vector<int> bfs_to_lex(order_found.size());
  for (size_t i = 0; i < order_found.size(); ++i)
    bfs_to_lex[i] = G.index_of(order_found[i]);
  G.bfs_parent_.assign(G.order(), -1);
  G.bfs_gen_.assign(G.order(), -1);
  for (size_t i = 0; i < order_found.size(); ++i) {
    int lex = bfs_to_lex[i];
    G.bfs_parent_[lex] = parent[i] >= 0 ? bfs_to_lex[parent[i]] : -1;
    G.bfs_gen_[lex] = genidx[i];
  }
  G.generator_indices_.reserve(G.generators_.size());
  for (const Perm& g : G.generators_) G.generator_indices_.push_back(G.index_of(g));

  G.build_tables();
  return G;
}

void Group::build_tables() {
  int n = order();
  table_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table_[static_cast<size_t>(a) * n + b] = index_of(elements_[a] * elements_[b]);
  inverse_.assign(n, 0);
  for (int a = 0; a < n; ++a) inverse_[a] = index_of(elements_[a].inverse());
  element_order_.assign(n, 1);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = mul(a, x);
      ++k;
    }
    element_order_[a] = k;
  }
}

int Group::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements_.begin());
}

int Group::exponent() const {
  int64_t e = 1;
  for (int a = 0; a < order(); ++a) e = std::lcm(e, int64_t(element_order_[a]));
  return static_cast<int>(e);
}

std::vector<int> Group::word(int a) const {
  std::vector<int> w;
  while (a != 0) {
    w.push_back(bfs_gen_[a]);
    a = bfs_parent_[a];
  }
  return w;  // a = gens[w[0]] * gens[w[1]] * ...
}

int Group::pprime_part(int a, int64_t p) const {
  int n = element_order_[a];
  int pa = 1;
  while (n % p == 0) {
    n /= static_cast<int>(p);
    pa *= static_cast<int>(p);
  }
  // n is now the p'-order; find t with pa * t == 1 (mod n)
  if (n == 1) return identity();
  int t = 1;
  while ((int64_t(pa) * t) % n != 1) ++t;
  int e = (pa * t) % element_order_[a];
  int x = identity();  // a^e
  for (int i = 0; i < e; ++i) x = mul(x, a);
  return x;
}

const std::vector<ConjClass>& Group::classes() const {
  if (!classes_.empty() || order() == 0) return classes_;
  int n = order();
  class_of_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (class_of_[a] >= 0) continue;
    ConjClass cls;
    cls.representative = a;  // elements scanned in ascending order
    std::vector<char> in(n, 0);
    for (int g = 0; g < n; ++g) {
      int c = conj(g, a);
      if (!in[c]) {
        in[c] = 1;
        cls.members.push_back(c);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    int id = static_cast<int>(classes_.size());
    for (int c : cls.members) class_of_[c] = id;
    classes_.push_back(std::move(cls));
  }
  return classes_;
}

int Group::class_of(int a) const {
  classes();
  return class_of_[a];
}

uint64_t Group::content_hash() const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<uint64_t>(degree_));
  for (const Perm& p : elements_)
    for (int v : p.images()) mix(static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull);
  return h;
}

std::vector<ConjClass> pprime_classes(const Group& H, int64_t p) {
  std::vector<ConjClass> out;
  for (const ConjClass& cls : H.classes())
    if (H.element_order(cls.representative) % p != 0) out.push_back(cls);
  return out;
}

}  // namespace tsr
