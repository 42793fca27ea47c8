#include <doctest.h>

#include <random>

#include "tsr/cyclo_matrix.hpp"
#include "tsr/errors.hpp"

using namespace tsr;

namespace {

CycloMatrix two_by_two(int m, Rat a, Rat b, Rat c, Rat d) {
  CycloMatrix M(2, 2, m);
  M.at(0, 0) = Cyclo(a, m);
  M.at(0, 1) = Cyclo(b, m);
  M.at(1, 0) = Cyclo(c, m);
  M.at(1, 1) = Cyclo(d, m);
  return M;
}

}  // namespace

TEST_CASE("cyclotomic relations") {
  // m=3: z + z^2 = -1
  CHECK(Cyclo::zeta(3) + Cyclo::zeta_power(3, 2) == Cyclo(Rat(-1), 3));
  // m=4: inv(z) = z^3 = -z
  CHECK(Cyclo::zeta(4).inverse() == Cyclo::zeta_power(4, 3));
  CHECK(Cyclo::zeta_power(4, 3) == -Cyclo::zeta(4));
  // m=1: plain rationals
  CHECK(Cyclo(Rat(2, 3)) + Cyclo(Rat(1, 3)) == Cyclo(Rat(1)));

  for (int m : {1, 2, 3, 4, 5, 6, 8, 12}) {
    CHECK(Cyclo::zeta_power(m, m) == Cyclo(Rat(1), m));
    for (int k = 0; k < m; ++k)
      CHECK(Cyclo::zeta_power(m, k) * Cyclo::zeta_power(m, m - k) == Cyclo(Rat(1), m));
  }

  // z_2 = -1 across conductors
  CHECK(Cyclo::zeta(2) == Cyclo(Rat(-1), 1));
  CHECK(Cyclo::zeta_power(3, 1).promoted(6) == Cyclo::zeta_power(6, 2));

  CHECK_THROWS_AS(Cyclo(Rat(0), 3).inverse(), DivisionByZero);
  CHECK(Cyclo::zeta(5).galois(4) == Cyclo::zeta(5).inverse());
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(12) == 4);
  CHECK(Cyclo::zeta(12).coords().size() == 4);
}

TEST_CASE("matrix inverse: pinned instances") {
  CHECK(CycloMatrix::identity(3).inverse() == CycloMatrix::identity(3));

  CycloMatrix L = two_by_two(2, Rat(3), Rat(3), Rat(1), Rat(-1));
  CycloMatrix Linv = two_by_two(2, Rat(1, 6), Rat(1, 2), Rat(1, 6), Rat(-1, 2));
  CHECK(L.inverse() == Linv);
  CHECK((L * Linv).is_identity());

  for (int p : {2, 3, 5}) {
    CycloMatrix N = two_by_two(1, Rat(p), Rat(1), Rat(0), Rat(1));
    CycloMatrix Ninv = two_by_two(1, Rat(1, p), Rat(-1, p), Rat(0), Rat(1));
    CHECK(N.inverse() == Ninv);
    CHECK((N * Ninv).is_identity());
    CHECK((Ninv * N).is_identity());
  }

  CHECK_THROWS_AS(two_by_two(1, Rat(1), Rat(1), Rat(1), Rat(1)).inverse(), Singular);
}

TEST_CASE("matrix arithmetic and shapes") {
  CycloMatrix A = two_by_two(3, Rat(1), Rat(2), Rat(3), Rat(4));
  CHECK(A * CycloMatrix::identity(2, 3) == A);
  CHECK(A + (A - A) == A);
  CHECK(A.transposed().transposed() == A);
  CHECK(A.scaled(Cyclo(Rat(0), 3)).rank() == 0);
  CHECK(A.rank() == 2);

  CycloMatrix B(3, 2, 3);
  CHECK_THROWS_AS(A + B, ShapeMismatch);
  CHECK_THROWS_AS(A * CycloMatrix(3, 3, 3), ShapeMismatch);
}

TEST_CASE("random matrices invert exactly") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int m : {1, 2, 3, 4, 6}) {
    int tested = 0;
    while (tested < 4) {
      CycloMatrix A(3, 3, m);
      std::uniform_int_distribution<int> zexp(0, m - 1);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          A.at(r, c) = Cyclo(Rat(num(rng)), m) +
                       Cyclo::zeta_power(m, zexp(rng)) * Cyclo(Rat(num(rng)), m);
      try {
        CycloMatrix Ainv = A.inverse();
        CHECK((A * Ainv).is_identity());
        CHECK((Ainv * A).is_identity());
        ++tested;
      } catch (const Singular&) {
        // rank-deficient draw, try again
      }
    }
  }
}

TEST_CASE("linear solves") {
  CycloMatrix A = two_by_two(4, Rat(2), Rat(1), Rat(1), Rat(1));
  std::vector<Cyclo> b = {Cyclo::zeta(4), Cyclo(Rat(3), 4)};
  std::vector<Cyclo> x = A.solve(b);
  CHECK(A.at(0, 0) * x[0] + A.at(0, 1) * x[1] == b[0]);
  CHECK(A.at(1, 0) * x[0] + A.at(1, 1) * x[1] == b[1]);

  std::vector<std::vector<Rat>> M = {{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}, {Rat(2), Rat(0)}};
  std::vector<Rat> rhs = {Rat(3), Rat(1), Rat(4)};
  std::vector<Rat> sol = solve_rational_system(M, rhs);
  REQUIRE(sol.size() == 2);
  CHECK(sol[0] == Rat(2));
  CHECK(sol[1] == Rat(1));
}

TEST_CASE("rational detection and rendering") {
  CHECK(Cyclo(Rat(5, 2), 6).is_rational());
  CHECK(Cyclo(Rat(5, 2), 6).rational_value() == Rat(5, 2));
  CHECK(!Cyclo::zeta(3).is_rational());
  CHECK(Cyclo(Rat(0), 4).is_zero());
  CHECK(rat_str(Rat(-7, 3)) == "-7/3");
  CHECK(is_integer(Rat(6, 3)));
  CHECK(!is_integer(Rat(1, 2)));
}
