#include <doctest.h>

#include "tsr/constructions.hpp"
#include "tsr/errors.hpp"
#include "tsr/tsring.hpp"

using namespace tsr;

namespace {

Cyclo q(long num, long den = 1) { return Cyclo(Rat(num, den)); }

}  // namespace

TEST_CASE("session index sets") {
  Session t(Group::generate({}, 1), 2, 0);
  CHECK(t.size() == 1);
  CHECK(t.n_locals() == 1);

  Session c3(parse_group_spec("C3"), 3, 0);
  REQUIRE(c3.size() == 2);
  CHECK(c3.n_locals() == 2);
  CHECK(c3.lattice().all[c3.local(0).sub_idx].order() == 1);
  CHECK(c3.lattice().all[c3.local(1).sub_idx].order() == 3);
  CHECK(c3.local(0).table->n_irr() == 1);  // C3 at p=3: unique simple
  CHECK(c3.local(1).table->n_irr() == 1);

  Session s3(parse_group_spec("S3"), 3, 0);
  REQUIRE(s3.size() == 4);
  CHECK(s3.n_locals() == 2);
  CHECK(s3.local(0).table->n_irr() == 2);   // N(1)/1 = S3
  CHECK(s3.local(1).table->n_irr() == 2);   // N(C3)/C3 = C2
  CHECK(s3.basis()[0].loc == 0);
  CHECK(s3.basis()[1].phi == 1);
  CHECK(s3.species()[2].loc == 1);
  CHECK(s3.basis_pos(1, 0) == 2);
  CHECK(s3.species_pos(0, 1) == 1);

  // p not dividing |G|: only the trivial local, Sylow is trivial
  Session off(parse_group_spec("C3"), 2, 0);
  CHECK(off.n_locals() == 1);
  CHECK(off.size() == 3);  // three 2'-classes of C3, three simples over F_4
}

TEST_CASE("session conductor") {
  CHECK(Session(parse_group_spec("S4"), 2, 0).conductor() == 3);
  CHECK(Session(parse_group_spec("S4"), 3, 0).conductor() == 4);
  CHECK(Session(parse_group_spec("D10"), 2, 0).conductor() == 5);
  CHECK(Session(parse_group_spec("Q8"), 2, 0).conductor() == 1);
}

TEST_CASE("matrix_N: pinned instances") {
  Session t(Group::generate({}, 1), 2, 0);
  SpeciesTable Nt = matrix_N(t);
  CHECK(Nt.N.at(0, 0) == q(1));

  Session c2(parse_group_spec("C2"), 2, 0);
  SpeciesTable N2 = matrix_N(c2);
  CHECK(N2.N.at(0, 0) == q(2));
  CHECK(N2.N.at(0, 1) == q(1));
  CHECK(N2.N.at(1, 0) == q(0));
  CHECK(N2.N.at(1, 1) == q(1));

  Session c3(parse_group_spec("C3"), 3, 0);
  SpeciesTable N3 = matrix_N(c3);
  CHECK(N3.N.at(0, 0) == q(3));
  CHECK(N3.N.at(0, 1) == q(1));
  CHECK(N3.N.at(1, 0) == q(0));
  CHECK(N3.N.at(1, 1) == q(1));

  // S3 at p=3: the (Q=1) x (P=1) block is the projective table L
  Session s3(parse_group_spec("S3"), 3, 0);
  SpeciesTable Ns = matrix_N(s3);
  CHECK(Ns.N.at(0, 0) == q(3));
  CHECK(Ns.N.at(0, 1) == q(3));
  CHECK(Ns.N.at(1, 0) == q(1));
  CHECK(Ns.N.at(1, 1) == q(-1));
  // triangularity: rows at Q = C3 vanish on columns with P = 1
  CHECK(Ns.N.at(2, 0) == q(0));
  CHECK(Ns.N.at(2, 1) == q(0));
  CHECK(Ns.N.at(3, 0) == q(0));
  CHECK(Ns.N.at(3, 1) == q(0));
}

TEST_CASE("matrix_N_alt agrees") {
  for (const char* spec : {"C3", "S3", "C4"}) {
    CAPTURE(spec);
    for (int64_t p : {2, 3}) {
      Session S(parse_group_spec(spec), p, 0);
      CHECK(matrix_N(S).N == matrix_N_alt(S).N);
    }
  }
}

TEST_CASE("matrix_Ninv: pinned instances and inversion") {
  Session c3(parse_group_spec("C3"), 3, 0);
  CycloMatrix Ninv = matrix_Ninv(c3);
  CHECK(Ninv.at(0, 0) == q(1, 3));
  CHECK(Ninv.at(0, 1) == q(-1, 3));
  CHECK(Ninv.at(1, 0) == q(0));
  CHECK(Ninv.at(1, 1) == q(1));
  CHECK((matrix_N(c3).N * Ninv).is_identity());

  for (const char* spec : {"S3", "D8"}) {
    CAPTURE(spec);
    Session S(parse_group_spec(spec), 2, 0);
    CHECK((matrix_N(S).N * matrix_Ninv(S)).is_identity());
  }
}

TEST_CASE("Ninv diagonal blocks carry the centralizer orthogonality") {
  Session s3(parse_group_spec("S3"), 3, 0);
  CycloMatrix Ninv = matrix_Ninv(s3);
  // block at P = Q = 1: phi(s^-1)/|C(s)| over N(1)/1 = S3
  CHECK(Ninv.at(0, 0) == q(1, 6));
  CHECK(Ninv.at(0, 1) == q(1, 2));
  CHECK(Ninv.at(1, 0) == q(1, 6));
  CHECK(Ninv.at(1, 1) == q(-1, 2));
}

TEST_CASE("idempotents: pinned expansions") {
  Session t(Group::generate({}, 1), 2, 0);
  IdempotentExpansion et = idempotent(t, t.species()[0]);
  CHECK(et.coeffs[0] == q(1));

  Session c3(parse_group_spec("C3"), 3, 0);
  IdempotentExpansion e0 = idempotent(c3, c3.species()[0]);
  CHECK(e0.coeffs[0] == q(1, 3));
  CHECK(e0.coeffs[1] == q(0));
  IdempotentExpansion e1 = idempotent(c3, c3.species()[1]);
  CHECK(e1.coeffs[0] == q(-1, 3));
  CHECK(e1.coeffs[1] == q(1));
}

TEST_CASE("idempotents are delta vectors in species coordinates") {
  Session s3(parse_group_spec("S3"), 3, 0);
  SpeciesTable N = matrix_N(s3);
  std::vector<Cyclo> total(s3.size(), Cyclo(Rat(0), s3.conductor()));
  for (int target = 0; target < s3.size(); ++target) {
    IdempotentExpansion e = idempotent(s3, s3.species()[target]);
    for (int row = 0; row < s3.size(); ++row) {
      Cyclo acc(Rat(0), s3.conductor());
      for (int col = 0; col < s3.size(); ++col) acc += N.N.at(row, col) * e.coeffs[col];
      CHECK(acc == (row == target ? q(1) : q(0)));
    }
    for (int col = 0; col < s3.size(); ++col) total[col] += e.coeffs[col];
  }
  // partition of unity: the summed expansion has all-ones species vector
  for (int row = 0; row < s3.size(); ++row) {
    Cyclo acc(Rat(0), s3.conductor());
    for (int col = 0; col < s3.size(); ++col) acc += N.N.at(row, col) * total[col];
    CHECK(acc == q(1));
  }
}

TEST_CASE("idempotent coefficients are the Ninv columns") {
  // S3 at p=2 has a basis row with N_G(P) proper, so the normalizations of
  // the two formulas are genuinely exercised here
  Session s3(parse_group_spec("S3"), 2, 0);
  CycloMatrix Ninv = matrix_Ninv(s3);
  for (int colpos = 0; colpos < s3.size(); ++colpos) {
    IdempotentExpansion e = idempotent(s3, s3.species()[colpos]);
    for (int row = 0; row < s3.size(); ++row)
      CHECK(e.coeffs[row] == Ninv.at(row, colpos));
  }
}

TEST_CASE("species oracle agrees with the formula") {
  for (const char* spec : {"C3", "S3"}) {
    CAPTURE(spec);
    for (int64_t p : {2, 3}) {
      Session S(parse_group_spec(spec), p, 0);
      SpeciesTable N = matrix_N(S);
      CycloMatrix O = species_oracle_table(S);
      CHECK(N.N == O);
    }
  }
  // single-entry view
  Session S(parse_group_spec("C3"), 3, 0);
  SpeciesTable N = matrix_N(S);
  CHECK(species_oracle(S, 1, 0) == N.N.at(1, 0));
  CHECK(species_oracle(S, 0, 0) == N.N.at(0, 0));
}

TEST_CASE("oracle vanishes when Q is not subconjugate to P") {
  Session c3(parse_group_spec("C3"), 3, 0);
  // row (C3,[1]) against column (1,triv)
  CHECK(species_oracle(c3, 1, 0) == q(0));
}
