#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "tsr/brauer.hpp"
#include "tsr/chop.hpp"
#include "tsr/constructions.hpp"
#include "tsr/errors.hpp"
#include "tsr/gmodule.hpp"

using namespace tsr;

namespace {

int perm_parity(const Perm& p) {
  int inversions = 0;
  for (int i = 0; i < p.degree(); ++i)
    for (int j = i + 1; j < p.degree(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2;
}

std::vector<Subgroup> maximals_of(const SubgroupLattice& L, int idx, int64_t p) {
  std::vector<Subgroup> out;
  const int want = L.all[idx].order() / static_cast<int>(p);
  for (int j : L.subgroups_below(idx))
    if (L.all[j].order() == want) out.push_back(L.all[j]);
  return out;
}

std::vector<std::pair<int, int>> shape_of(const std::vector<std::pair<GModule, int>>& factors) {
  std::vector<std::pair<int, int>> shape;
  for (const auto& [S, mult] : factors) shape.emplace_back(S.dim(), mult);
  std::sort(shape.begin(), shape.end());
  return shape;
}

}  // namespace

TEST_CASE("build_field") {
  FFieldPtr a = FField::build(3, 2);
  CHECK(a->q() == 3);
  CHECK(a->k() == 1);
  CHECK(a->omega() == 2);

  FFieldPtr b = FField::build(2, 3);
  CHECK(b->q() == 4);
  CHECK(b->k() == 2);
  CHECK(b->mult_order(b->omega()) == 3);

  FFieldPtr c = FField::build(2, 1);
  CHECK(c->q() == 2);
  CHECK(c->omega() == 1);

  FFieldPtr d = FField::build(2, 5);
  CHECK(d->q() == 16);
  CHECK(d->mult_order(d->omega()) == 5);
}

TEST_CASE("field axioms hold exhaustively at q=4") {
  FFieldPtr F = FField::build(2, 3);
  for (int64_t x = 0; x < 4; ++x) {
    CHECK(F->add(x, 0) == x);
    CHECK(F->mul(x, 1) == x);
    CHECK(F->add(x, F->neg(x)) == 0);
    if (x != 0) CHECK(F->mul(x, F->inv(x)) == 1);
    for (int64_t y = 0; y < 4; ++y)
      for (int64_t z = 0; z < 4; ++z) {
        CHECK(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
        CHECK(F->mul(F->mul(x, y), z) == F->mul(x, F->mul(y, z)));
      }
  }
  CHECK(F->from_int(5) == F->from_int(1));
}

TEST_CASE("omega log") {
  FFieldPtr F = FField::build(3, 2);  // q=9? no: m=2 | 3-1, q=3
  CHECK(F->q() == 3);
  CHECK(F->omega_log(1) == 0);
  CHECK(F->omega_log(F->omega()) == 1);

  FFieldPtr E = FField::build(3, 4);  // 4 | 80, q=81? minimal k with 4 | 3^k-1 is 2
  CHECK(E->q() == 9);
  for (int j = 0; j < 4; ++j) CHECK(E->omega_log(E->pow(E->omega(), j)) == j);
  int off_mu = 0;
  for (int64_t x = 1; x < E->q(); ++x)
    if (E->omega_log(x) == -1) ++off_mu;
  CHECK(off_mu == 4);  // 8 nonzero elements, 4 in mu_4
}

TEST_CASE("regular modules") {
  Group t = Group::generate({}, 1);
  FFieldPtr F2 = FField::build(2, 1);
  GModule rt = GModule::regular(t, F2);
  CHECK(rt.dim() == 1);

  Group c2 = cyclic_group(2);
  GModule rc2 = GModule::regular(c2, F2);
  CHECK(rc2.dim() == 2);
  FMatrix g = rc2.matrix_of(1);
  CHECK(g.at(0, 0) == 0);
  CHECK(g.at(0, 1) == 1);
  CHECK(g.at(1, 0) == 1);
  CHECK(g.at(1, 1) == 0);

  Group s3 = symmetric_group(3);
  GModule rs3 = GModule::regular(s3, FField::build(3, 2));
  CHECK(rs3.dim() == 6);
  CHECK(rs3.check_relations());
}

TEST_CASE("chop: pinned shapes") {
  Group t = Group::generate({}, 1);
  FFieldPtr F2 = FField::build(2, 1);
  auto ft = chop(GModule::trivial(t, F2), 7);
  REQUIRE(ft.size() == 1);
  CHECK(ft[0].first.dim() == 1);
  CHECK(ft[0].second == 1);

  Group c3 = cyclic_group(3);
  auto fc3 = chop(GModule::regular(c3, FField::build(3, 1)), 7);
  REQUIRE(fc3.size() == 1);
  CHECK(fc3[0].first.dim() == 1);
  CHECK(fc3[0].second == 3);

  Group s3 = symmetric_group(3);
  auto fs3 = chop(GModule::regular(s3, FField::build(3, 2)), 7);
  CHECK(shape_of(fs3) == std::vector<std::pair<int, int>>{{1, 3}, {1, 3}});

  // p=2: simples of FS3 are trivial and the 2-dim, regular = dim 6
  auto fs3p2 = chop(GModule::regular(s3, FField::build(2, 3)), 7);
  CHECK(shape_of(fs3p2) == std::vector<std::pair<int, int>>{{1, 2}, {2, 2}});
}

TEST_CASE("chop: determinism and seed independence") {
  Group s3 = symmetric_group(3);
  GModule reg = GModule::regular(s3, FField::build(2, 3));
  auto a = chop(reg, 41);
  auto b = chop(reg, 41);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].first.dim() == b[i].first.dim());
    CHECK(a[i].second == b[i].second);
    for (size_t k = 0; k < a[i].first.gen_matrices().size(); ++k)
      CHECK(a[i].first.gen_matrices()[k] == b[i].first.gen_matrices()[k]);
  }
  auto c = chop(reg, 1729);
  CHECK(shape_of(a) == shape_of(c));
}

TEST_CASE("brauer character values") {
  Group s3 = symmetric_group(3);
  FFieldPtr F = FField::build(3, 2);

  GModule triv = GModule::trivial(s3, F);
  std::vector<ConjClass> cls = pprime_classes(s3, 3);
  REQUIRE(cls.size() == 2);
  for (const ConjClass& c : cls) CHECK(brauer_value(triv, c.representative) == Cyclo(Rat(1), 2));

  std::vector<int64_t> sgn(s3.order());
  for (int e = 0; e < s3.order(); ++e)
    sgn[e] = perm_parity(s3.element(e)) ? F->neg(1) : 1;
  GModule sign = GModule::linear(s3, F, sgn);
  CHECK(brauer_value(sign, cls[0].representative) == Cyclo(Rat(1), 2));
  CHECK(brauer_value(sign, cls[1].representative) == Cyclo(Rat(-1), 2));

  // p-singular argument is rejected
  int three_cycle = -1;
  for (int e = 0; e < s3.order(); ++e)
    if (s3.element_order(e) == 3) three_cycle = e;
  CHECK_THROWS_AS(brauer_value(triv, three_cycle), InternalInconsistency);
}

TEST_CASE("brauer table: pinned instances") {
  Group t = Group::generate({}, 1);
  BrauerTable tt = build_brauer_table(t, FField::build(2, 1), 5);
  CHECK(tt.n_irr() == 1);
  CHECK(tt.L.at(0, 0) == Cyclo(Rat(1)));

  Group c3 = cyclic_group(3);
  BrauerTable tc = build_brauer_table(c3, FField::build(3, 1), 5);
  CHECK(tc.n_irr() == 1);
  CHECK(tc.L.at(0, 0) == Cyclo(Rat(3)));

  Group s3 = symmetric_group(3);
  BrauerTable ts = build_brauer_table(s3, FField::build(3, 2), 5);
  REQUIRE(ts.n_irr() == 2);
  // canonical order: trivial first
  CHECK(ts.irreducibles[0].values[0] == Cyclo(Rat(1), 2));
  CHECK(ts.irreducibles[0].values[1] == Cyclo(Rat(1), 2));
  CHECK(ts.irreducibles[1].values[0] == Cyclo(Rat(1), 2));
  CHECK(ts.irreducibles[1].values[1] == Cyclo(Rat(-1), 2));
  // projective table rows are the classes of 1 and a transposition
  CHECK(ts.L.at(0, 0) == Cyclo(Rat(3), 2));
  CHECK(ts.L.at(0, 1) == Cyclo(Rat(3), 2));
  CHECK(ts.L.at(1, 0) == Cyclo(Rat(1), 2));
  CHECK(ts.L.at(1, 1) == Cyclo(Rat(-1), 2));
}

TEST_CASE("brauer table: counting invariants") {
  struct Instance {
    const char* spec;
    int64_t p;
    int m;
  };
  for (const Instance& inst : {Instance{"S3", 2, 3}, Instance{"D8", 2, 1},
                               Instance{"A4", 3, 2}, Instance{"C6", 2, 3}}) {
    CAPTURE(inst.spec);
    Group G = parse_group_spec(inst.spec);
    BrauerTable T = build_brauer_table(G, FField::build(inst.p, inst.m), 5);
    CHECK(T.irreducibles.size() == T.ppclasses.size());

    // sum over phi of dim(phi) * phihat(1) = |G|
    Cyclo mass(Rat(0), T.m);
    for (int phi = 0; phi < T.n_irr(); ++phi)
      mass += Cyclo(Rat(T.irreducibles[phi].dim), T.m) * T.L.at(0, phi);
    CHECK(mass == Cyclo(Rat(G.order()), T.m));

    // orthogonality: [phi(s^-1)/|C(s)|] * L = identity
    const int k = T.n_irr();
    CycloMatrix A(k, k, T.m);
    for (int phi = 0; phi < k; ++phi)
      for (int s = 0; s < k; ++s) {
        int rep = T.ppclasses[s].representative;
        int inv_cls = T.ppclass_of[G.inv(rep)];
        long cent = G.order() / static_cast<long>(T.ppclasses[s].members.size());
        A.at(phi, s) = T.irreducibles[phi].values[inv_cls] * Cyclo(Rat(1, cent), T.m);
      }
    CHECK((A * T.L).is_identity());
  }
}

TEST_CASE("induce_inflate dimensions") {
  Group c3 = cyclic_group(3);
  Subgroup whole3 = Subgroup::whole(c3);
  FFieldPtr F3 = FField::build(3, 1);

  // P = Sylow of C3: N(P) = G, E trivial over the trivial quotient
  QuotientGroup top(c3, whole3, whole3);
  GModule E1 = GModule::trivial(top.group(), F3);
  GModule inf1 = induce_inflate(c3, whole3, top, E1);
  CHECK(inf1.dim() == 1);
  CHECK(inf1.check_relations());

  // P = 1: E the regular module of N(1)/1 = C3, dim p
  QuotientGroup bottom(c3, whole3, Subgroup::trivial(c3));
  GModule Ereg = GModule::regular(bottom.group(), F3);
  GModule n1 = induce_inflate(c3, Subgroup::trivial(c3), bottom, Ereg);
  CHECK(n1.dim() == 3);
  CHECK(n1.check_relations());

  // self-normalizing C2 < S3: index 3, 1-dim module induces to dim 3
  Group s3 = symmetric_group(3);
  SubgroupLattice L = enumerate_subgroups(s3);
  int c2 = -1;
  for (size_t i = 0; i < L.all.size(); ++i)
    if (L.all[i].order() == 2) {
      c2 = static_cast<int>(i);
      break;
    }
  REQUIRE(c2 >= 0);
  const Subgroup& P = L.all[c2];
  QuotientGroup nbar(s3, L.all[L.normalizer_idx[c2]], P);
  CHECK(nbar.group().order() == 1);
  GModule E = GModule::trivial(nbar.group(), FField::build(2, 3));
  GModule ind = induce_inflate(s3, P, nbar, E);
  CHECK(ind.dim() == 3);
  CHECK(ind.check_relations());
}

TEST_CASE("brauer quotient: pinned values") {
  Group c3 = cyclic_group(3);
  Subgroup whole3 = Subgroup::whole(c3);
  Subgroup triv3 = Subgroup::trivial(c3);
  FFieldPtr F3 = FField::build(3, 1);
  SubgroupLattice L = enumerate_subgroups(c3);

  GModule reg = GModule::regular(c3, F3);
  QuotientGroup bottom(c3, whole3, triv3);
  GModule at1 = brauer_quotient(reg, triv3, bottom, {});
  CHECK(at1.dim() == 3);

  QuotientGroup top(c3, whole3, whole3);
  int c3idx = L.index_of(whole3.members());
  GModule atp = brauer_quotient(reg, whole3, top, maximals_of(L, c3idx, 3));
  CHECK(atp.dim() == 0);

  GModule tr = GModule::trivial(c3, F3);
  CHECK(brauer_quotient(tr, whole3, top, maximals_of(L, c3idx, 3)).dim() == 1);
  CHECK(brauer_quotient(tr, triv3, bottom, {}).dim() == 1);
}

TEST_CASE("brauer quotient of an induced-inflated projective keeps its character") {
  struct Instance {
    const char* spec;
    int64_t p;
    int m;
  };
  for (const Instance& inst : {Instance{"S3", 2, 3}, Instance{"S3", 3, 2},
                               Instance{"C4", 2, 1}, Instance{"D8", 2, 1}}) {
    CAPTURE(inst.spec);
    CAPTURE(inst.p);
    Group G = parse_group_spec(inst.spec);
    FFieldPtr F = FField::build(inst.p, inst.m);
    SubgroupLattice L = enumerate_subgroups(G);
    for (int idx : p_class_rep_indices(L, inst.p)) {
      const Subgroup& P = L.all[idx];
      QuotientGroup nbar(G, L.all[L.normalizer_idx[idx]], P);
      GModule Y = GModule::regular(nbar.group(), F);  // projective over N(P)/P
      GModule M = induce_inflate(G, P, nbar, Y);
      GModule back = brauer_quotient(M, P, nbar, maximals_of(L, idx, inst.p));
      CHECK(back.dim() == Y.dim());
      for (const ConjClass& c : pprime_classes(nbar.group(), inst.p))
        CHECK(brauer_value(back, c.representative) == brauer_value(Y, c.representative));
    }
  }
}

TEST_CASE("species route: regular module of C_p") {
  // values of the explicit Brauer-quotient route on N_{1,triv} over C_p
  Group c3 = cyclic_group(3);
  Subgroup whole3 = Subgroup::whole(c3);
  Subgroup triv3 = Subgroup::trivial(c3);
  FFieldPtr F3 = FField::build(3, 1);
  SubgroupLattice L = enumerate_subgroups(c3);
  QuotientGroup bottom(c3, whole3, triv3);
  QuotientGroup top(c3, whole3, whole3);

  GModule n1 = induce_inflate(c3, triv3, bottom, GModule::regular(bottom.group(), F3));
  CHECK(brauer_value(brauer_quotient(n1, triv3, bottom, {}), 0) == Cyclo(Rat(3)));
  int c3idx = L.index_of(whole3.members());
  CHECK(brauer_quotient(n1, whole3, top, maximals_of(L, c3idx, 3)).dim() == 0);
}
