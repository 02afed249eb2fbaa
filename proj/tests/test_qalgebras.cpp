#include "doctest.h"
#include "qhom/qalgebras.hpp"

using namespace qhom;

namespace {

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("quantum 2x2 matrix algebra") {
  ScalarField F = ScalarField::symbolic();
  AlgebraPtr B = build_matrix_algebra(2, F);
  CHECK(B->system().rules().size() == 6);
  REQUIRE(B->system().certificate().has_value());
  CHECK(B->system().certificate()->overlap_count == 4);
  CHECK(B->system().certificate()->all_resolved);
  CHECK(B->graded());

  for (int d = 0; d <= 6; ++d) CHECK(graded_dimension(B->system(), d) == binom(d + 3, d));
  CHECK(basis_words_of_degree(*B, 2).size() == 10);

  // row relation, normalized: u11 u12 - u12 u11 reduces to (1 - q^-1) u11 u12
  NCPoly comm = B->nf(B->gen_poly("u11") * B->gen_poly("u12") -
                      B->gen_poly("u12") * B->gen_poly("u11"));
  NCPoly expect = (B->gen_poly("u11") * B->gen_poly("u12")).scaled(Scalar(1) - Scalar::q(-1));
  CHECK(comm == expect);

  CHECK(B->matrix_coords(B->gen("u21")) == std::pair<int, int>{2, 1});
  CHECK(B->matrix_coords(B->gen("u12")) == std::pair<int, int>{1, 2});
}

TEST_CASE("quantum determinant") {
  ScalarField F = ScalarField::symbolic();
  AlgebraPtr B2 = build_matrix_algebra(2, F);
  NCPoly det2 = quantum_determinant(*B2);
  CHECK(det2.num_terms() == 2);
  CHECK(det2.coeff({B2->gen("u11"), B2->gen("u22")}) == Scalar(1));
  CHECK(det2.coeff({B2->gen("u12"), B2->gen("u21")}) == -Scalar::q(1));
  CHECK(is_central(det2, *B2));

  AlgebraPtr B3 = build_matrix_algebra(3, F);
  NCPoly det3 = quantum_determinant(*B3);
  CHECK(det3.num_terms() == 6);
  // coefficient of each permutation word is (-q)^{inversions}
  auto g = [&](int i, int j) { return B3->gen("u" + std::to_string(i) + std::to_string(j)); };
  CHECK(det3.coeff({g(1, 1), g(2, 2), g(3, 3)}) == Scalar(1));
  CHECK(det3.coeff({g(1, 2), g(2, 1), g(3, 3)}) == -Scalar::q(1));
  CHECK(det3.coeff({g(1, 2), g(2, 3), g(3, 1)}) == Scalar::q(2));
  CHECK(det3.coeff({g(1, 3), g(2, 2), g(3, 1)}) == -Scalar::q(3));
  CHECK(is_central(det3, *B3));
}

TEST_CASE("modular automorphism") {
  ScalarField F = ScalarField::symbolic();
  AlgebraPtr B = build_matrix_algebra(2, F);
  AlgebraMap s = modular_sigma(B);
  CHECK(s.images[(size_t)B->gen("u11")] == B->gen_poly("u11").scaled(Scalar::q(2)));
  CHECK(s.images[(size_t)B->gen("u12")] == B->gen_poly("u12"));
  CHECK(s.images[(size_t)B->gen("u21")] == B->gen_poly("u21"));
  CHECK(s.images[(size_t)B->gen("u22")] == B->gen_poly("u22").scaled(Scalar::q(-2)));
  CHECK(is_homomorphism(s));

  NCPoly det = quantum_determinant(*B);
  CHECK(s.apply(det) == B->nf(det));

  CHECK(is_homomorphism(identity_map(B)));
}

TEST_CASE("special quotient at N = 2") {
  ScalarField F = ScalarField::symbolic();
  AlgebraPtr A = build_special_algebra(2, F);
  REQUIRE(A->system().certificate().has_value());
  CHECK(A->system().certificate()->all_resolved);
  CHECK_FALSE(A->graded());

  // the determinant falls to 1
  CHECK(A->nf(quantum_determinant(*A) - NCPoly::unit(A->gens())).is_zero());
  // derived commutation: u22 u11 = 1 + q^-1 u12 u21 up to rewriting
  NCPoly lhs = A->gen_poly("u22") * A->gen_poly("u11");
  NCPoly rhs = NCPoly::unit(A->gens()) +
               (A->gen_poly("u12") * A->gen_poly("u21")).scaled(Scalar::q(-1));
  CHECK(A->nf(lhs - rhs).is_zero());

  // filtered growth (n + 1)^2 per word length
  for (int n = 0; n <= 5; ++n)
    CHECK((long)normal_words_of_length(A->system(), n).size() == (long)(n + 1) * (n + 1));

  CHECK(is_homomorphism(modular_sigma(A)));
}

TEST_CASE("general quotient at N = 2") {
  ScalarField F = ScalarField::symbolic();
  AlgebraPtr C = build_general_algebra(2, F);
  REQUIRE(C->system().certificate().has_value());
  CHECK(C->system().certificate()->all_resolved);
  CHECK(C->graded());

  NCPoly dt = C->gen_poly("dt");
  NCPoly dinv = C->gen_poly("dinv");
  CHECK(C->nf(dt - quantum_determinant(*C)).is_zero());
  CHECK(C->nf(dt * dinv - NCPoly::unit(C->gens())).is_zero());
  CHECK(C->nf(dinv * dt - NCPoly::unit(C->gens())).is_zero());
  // dinv commutes with everything and inverts the determinant
  CHECK(C->nf(dinv * C->gen_poly("u12") - C->gen_poly("u12") * dinv).is_zero());
  CHECK(C->nf(quantum_determinant(*C) * dinv - NCPoly::unit(C->gens())).is_zero());
  CHECK(is_homomorphism(modular_sigma(C)));
}

TEST_CASE("laurent algebra") {
  ScalarField F = ScalarField::specialized(Rat(2));
  AlgebraPtr D = build_laurent_algebra(F);
  CHECK(D->system().certified());
  NCPoly t = D->gen_poly("t");
  NCPoly tinv = D->gen_poly("tinv");
  CHECK(D->nf(t * tinv) == NCPoly::unit(D->gens()));
  CHECK(D->nf(t * tinv * tinv) == tinv);
  CHECK(laurent_basis_degree(*D, 3) == std::vector<Word>{Word{0, 0, 0}});
  CHECK(laurent_basis_degree(*D, -2) == std::vector<Word>{Word{1, 1}});
  CHECK(laurent_basis_degree(*D, 0) == std::vector<Word>{Word{}});
}

TEST_CASE("bounded center") {
  ScalarField F = ScalarField::specialized(Rat(2));
  AlgebraPtr B = build_matrix_algebra(2, F);
  auto zb = center_bounded(*B, 4);
  REQUIRE(zb.size() == 3);
  // degrees 0, 2, 4: scalars, det, det^2
  NCPoly det = quantum_determinant(*B);
  NCPoly det2 = B->nf(det * det);
  bool found_det = false, found_det2 = false;
  for (const NCPoly& z : zb) {
    if (z.lead_word().size() == 2 && z.scaled(det.lead_coeff()) == det.scaled(z.lead_coeff()))
      found_det = true;
    if (z.lead_word().size() == 4 && z.scaled(det2.lead_coeff()) == det2.scaled(z.lead_coeff()))
      found_det2 = true;
  }
  CHECK(found_det);
  CHECK(found_det2);

  AlgebraPtr A = build_special_algebra(2, F);
  auto za = center_bounded(*A, 4);
  REQUIRE(za.size() == 1);
  CHECK(za[0].lead_word().empty());
}

TEST_CASE("gl factorization at N = 2") {
  ScalarField F = ScalarField::specialized(Rat(2));
  GlFactorization g = gl_factorization_iso(2, F);
  CHECK(g.homomorphism);
  CHECK(g.counting_bijection);
  CHECK(g.bound == 4);
  REQUIRE(g.source_counts.size() == 5);
  CHECK(g.source_counts == g.image_ranks);
  CHECK(g.source_counts[0] == 1);
  CHECK(g.source_counts[1] == 7);  // empty word, four u's, dt, dinv
  CHECK_THROWS_AS((void)gl_factorization_iso(3, F), Error);
}
