#include <doctest.h>

#include <algorithm>

#include "tsr/constructions.hpp"
#include "tsr/errors.hpp"
#include "tsr/monomial.hpp"

using namespace tsr;

namespace {

Cyclo q(long num, long den = 1) { return Cyclo(Rat(num, den)); }

int lattice_index_of_order(const Session& S, int order) {
  for (size_t i = 0; i < S.lattice().all.size(); ++i)
    if (S.lattice().all[i].order() == order &&
        S.lattice().classes[S.lattice().class_of[i]][0] == static_cast<int>(i))
      return static_cast<int>(i);
  return -1;
}

}  // namespace

TEST_CASE("linear characters of subgroups") {
  Session s3 = Session(parse_group_spec("S3"), 3, 0);  // m = 2
  const SubgroupLattice& L = s3.lattice();

  CHECK(linear_characters(s3.group(), L.all[0], 3, s3.conductor()).size() == 1);

  int c3 = lattice_index_of_order(s3, 3);
  CHECK(linear_characters(s3.group(), L.all[c3], 3, s3.conductor()).size() == 1);

  int c2 = lattice_index_of_order(s3, 2);
  CHECK(linear_characters(s3.group(), L.all[c2], 3, s3.conductor()).size() == 2);

  int whole = static_cast<int>(L.all.size()) - 1;
  CHECK(linear_characters(s3.group(), L.all[whole], 3, s3.conductor()).size() == 2);

  // at p=2 the conductor is 3 and C3 carries three characters
  Session s3b = Session(parse_group_spec("S3"), 2, 0);
  int c3b = lattice_index_of_order(s3b, 3);
  auto chars = linear_characters(s3b.group(), s3b.lattice().all[c3b], 2, s3b.conductor());
  CHECK(chars.size() == 3);
  for (const std::vector<int>& nu : chars) {
    // homomorphism property on all pairs
    const Subgroup& V = s3b.lattice().all[c3b];
    for (int a : V.member_indices())
      for (int b : V.member_indices()) {
        int ab = s3b.group().mul(a, b);
        CHECK((nu[a] + nu[b]) % s3b.conductor() == nu[ab]);
      }
  }
}

TEST_CASE("monomial pairs: pinned enumerations") {
  Session t(Group::generate({}, 1), 2, 0);
  CHECK(monomial_pairs(t).size() == 1);

  Session c2(parse_group_spec("C2"), 2, 0);
  std::vector<MonomialPair> p2 = monomial_pairs(c2);
  REQUIRE(p2.size() == 2);
  CHECK(c2.lattice().all[p2[0].v_idx].order() == 1);
  CHECK(c2.lattice().all[p2[1].v_idx].order() == 2);

  // S3 at p=3: (1), (C2)x2, (C3), (S3)x2
  Session s3(parse_group_spec("S3"), 3, 0);
  std::vector<MonomialPair> p3 = monomial_pairs(s3);
  REQUIRE(p3.size() == 6);
  std::vector<int> orders;
  for (const MonomialPair& mp : p3) orders.push_back(s3.lattice().all[mp.v_idx].order());
  CHECK(orders == std::vector<int>{1, 2, 2, 3, 6, 6});

  // S3 at p=2: the two faithful C3 characters fuse under N(C3) = S3
  Session s3b(parse_group_spec("S3"), 2, 0);
  std::vector<MonomialPair> p4 = monomial_pairs(s3b);
  std::vector<int> orders_b;
  for (const MonomialPair& mp : p4) orders_b.push_back(s3b.lattice().all[mp.v_idx].order());
  CHECK(orders_b == std::vector<int>{1, 2, 3, 3, 6});
}

TEST_CASE("nu_value") {
  Session s3(parse_group_spec("S3"), 3, 0);
  std::vector<MonomialPair> pairs = monomial_pairs(s3);
  // the sign pair on the whole group takes value -1 on transpositions
  const MonomialPair& sgn = pairs.back();
  REQUIRE(s3.lattice().all[sgn.v_idx].order() == 6);
  bool saw_minus_one = false;
  for (int e = 0; e < s3.group().order(); ++e)
    if (s3.group().element_order(e) == 2 && nu_value(s3, sgn, e) == q(-1)) saw_minus_one = true;
  CHECK(saw_minus_one);

  // outside the subgroup the exponent map is undefined
  const MonomialPair& one = pairs.front();
  REQUIRE(s3.lattice().all[one.v_idx].order() == 1);
  CHECK_THROWS_AS(nu_value(s3, one, 1), InternalInconsistency);
}

TEST_CASE("lin_row: pinned expansions") {
  // G = V = C2 at p=2, trivial character: the trivial module
  Session c2(parse_group_spec("C2"), 2, 0);
  std::vector<MonomialPair> pairs = monomial_pairs(c2);
  std::vector<Cyclo> top = lin_row(c2, pairs[1]);
  CHECK(top[0] == q(0));
  CHECK(top[1] == q(1));

  // V = 1: the regular module, [F C2] = [N_{1,triv}]
  std::vector<Cyclo> reg = lin_row(c2, pairs[0]);
  CHECK(reg[0] == q(1));
  CHECK(reg[1] == q(0));

  // V = 1 in S3 at p=3: regular = P_triv + P_sign
  Session s3(parse_group_spec("S3"), 3, 0);
  std::vector<MonomialPair> p3 = monomial_pairs(s3);
  std::vector<Cyclo> reg3 = lin_row(s3, p3[0]);
  CHECK(reg3[0] == q(1));
  CHECK(reg3[1] == q(1));
  CHECK(reg3[2] == q(0));
  CHECK(reg3[3] == q(0));

  Session t(Group::generate({}, 1), 2, 0);
  std::vector<Cyclo> rt = lin_row(t, monomial_pairs(t)[0]);
  CHECK(rt[0] == q(1));
}

TEST_CASE("species_of_induced: pinned values") {
  Session s3(parse_group_spec("S3"), 3, 0);
  std::vector<MonomialPair> pairs = monomial_pairs(s3);
  const MonomialPair& whole_triv = pairs[4];
  REQUIRE(s3.lattice().all[whole_triv.v_idx].order() == 6);
  bool is_trivial_char = true;
  for (int e : s3.lattice().all[whole_triv.v_idx].member_indices())
    if (whole_triv.nu_exp[e] != 0) is_trivial_char = false;
  REQUIRE(is_trivial_char);
  for (const SpeciesIndex& row : s3.species())
    CHECK(species_of_induced(s3, whole_triv, row) == q(1));

  // the free module: |G| under the identity species, 0 everywhere else
  const MonomialPair& bottom = pairs[0];
  CHECK(species_of_induced(s3, bottom, s3.species()[0]) == q(6));
  for (int row = 1; row < s3.size(); ++row)
    CHECK(species_of_induced(s3, bottom, s3.species()[row]) == q(0));
}

TEST_CASE("species_of_induced: lift and representative independence") {
  for (const char* spec : {"S3", "C6"}) {
    CAPTURE(spec);
    Session S(parse_group_spec(spec), 2, 0);
    const Group& G = S.group();
    std::vector<MonomialPair> pairs = monomial_pairs(S);
    CosetDecomposition cd;
    for (const MonomialPair& pair : pairs) {
      const Subgroup& V = S.lattice().all[pair.v_idx];
      cd = left_cosets(G, V);
      for (const SpeciesIndex& row : S.species()) {
        const LocalData& lq = S.local(row.loc);
        const Subgroup& Q = S.lattice().all[lq.sub_idx];
        Cyclo reference = species_of_induced(S, pair, row);
        // every ambient lift of every class member gives the same sum
        for (int member : lq.table->ppclasses[row.cls].members) {
          int t0 = lq.nbar->section(member);
          for (int k : S.lattice().all[lq.sub_idx].member_indices()) {
            int shat = G.mul(t0, k);
            Cyclo acc(Rat(0), S.conductor());
            for (int f : cd.reps) {
              int fi = G.inv(f);
              bool inside = V.contains(G.conj(fi, shat));
              for (int qgen : Q.generator_elems())
                inside = inside && V.contains(G.conj(fi, qgen));
              if (inside) acc += nu_value(S, pair, G.conj(fi, shat));
            }
            CHECK(acc == reference);
          }
        }
      }
    }
  }
}

TEST_CASE("verify_lin_pair passes with all flags") {
  for (const char* spec : {"C3", "S3"}) {
    CAPTURE(spec);
    for (int64_t p : {2, 3}) {
      Session S(parse_group_spec(spec), p, 0);
      SpeciesTable N = matrix_N(S);
      for (const MonomialPair& pair : monomial_pairs(S)) {
        LinReport r = verify_lin_pair(S, N, pair);
        CHECK(r.integer_coeffs);
        CHECK(r.support_law);
        CHECK(r.species_match);
        CHECK(r.pass());
      }
    }
  }
}

TEST_CASE("identity pair reproduces the idempotent partition") {
  Session s3(parse_group_spec("S3"), 3, 0);
  int whole = static_cast<int>(s3.lattice().all.size()) - 1;
  MonomialPair id_pair;
  id_pair.v_idx = whole;
  id_pair.nu_exp.assign(s3.group().order(), 0);
  std::vector<Cyclo> row = lin_row(s3, id_pair);

  std::vector<Cyclo> total(s3.size(), Cyclo(Rat(0), s3.conductor()));
  for (const SpeciesIndex& e : s3.species()) {
    IdempotentExpansion exp = idempotent(s3, e);
    for (int c = 0; c < s3.size(); ++c) total[c] += exp.coeffs[c];
  }
  for (int c = 0; c < s3.size(); ++c) CHECK(row[c] == total[c]);
}
