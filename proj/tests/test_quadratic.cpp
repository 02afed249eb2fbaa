#include "doctest.h"
#include "qhom/quadratic.hpp"
#include "qhom/rewrite.hpp"

using namespace qhom;

namespace {

// commutative plane k[x, y] as a quadratic algebra, for toy dualization
AlgebraPtr plane(const ScalarField& F) {
  GensPtr g = GeneratorSet::make({"x", "y"});
  NCPoly x = NCPoly::generator(g, 0);
  NCPoly y = NCPoly::generator(g, 1);
  std::vector<NCPoly> rels{y * x - x * y};
  RewriteSystem sys = orient(g, rels);
  check_confluence(sys);
  return std::make_shared<PresentedAlgebra>(AlgebraKind::External, 0, F, std::move(sys), true,
                                            std::move(rels));
}

}  // namespace

TEST_CASE("quadratic data extraction") {
  ScalarField F = ScalarField::symbolic();
  AlgebraPtr B = build_matrix_algebra(2, F);
  QuadraticData qd = quadratic_data(*B);
  CHECK(qd.gens->size() == 4);
  CHECK(qd.relations.size() == 6);

  AlgebraPtr A = build_special_algebra(2, F);
  CHECK_THROWS_AS((void)quadratic_data(*A), Error);  // inhomogeneous quotient
}

TEST_CASE("orthogonal relation space pairs to zero") {
  ScalarField F = ScalarField::symbolic();
  AlgebraPtr B = build_matrix_algebra(2, F);
  QuadraticData qd = quadratic_data(*B);
  QuadraticData dual = quadratic_dual(qd, F);
  CHECK(dual.gens->size() == 4);
  CHECK(dual.gens->name(0) == "uhat11");
  CHECK(dual.relations.size() == 10);  // 16 - 6

  int m = qd.gens->size();
  for (const NCPoly& r : qd.relations)
    for (const NCPoly& s : dual.relations) {
      Scalar acc;
      for (GenId a = 0; a < m; ++a)
        for (GenId b = 0; b < m; ++b) acc += r.coeff(Word{a, b}) * s.coeff(Word{a, b});
      CHECK(acc.is_zero());
    }
}

TEST_CASE("toy dual: exterior algebra on two letters") {
  ScalarField F = ScalarField::symbolic();
  AlgebraPtr P = plane(F);
  QuadraticData dual = quadratic_dual(quadratic_data(*P), F);
  REQUIRE(dual.relations.size() == 3);
  RewriteSystem sys = orient(dual.gens, dual.relations);
  check_confluence(sys);
  AlgebraPtr E = std::make_shared<PresentedAlgebra>(AlgebraKind::External, 0, F, std::move(sys),
                                                    true, dual.relations);
  FiniteGradedAlgebra ext(E, true);
  CHECK(ext.top_degree() == 2);
  CHECK(ext.dim() == 4);  // 1 + 2 + 1

  FrobeniusFunctional h = frobenius_functional(ext);
  CHECK(check_frobenius(ext, h));
  NakayamaData nk = nakayama(ext, h);
  CHECK(nk.diagonal);
  CHECK(nk.sign == -1);  // v -> -v on both letters
  for (const NCPoly& img : nk.nu) CHECK(img.lead_coeff() == Scalar(-1));
}

TEST_CASE("koszul dual of the 2x2 matrix algebra") {
  ScalarField F = ScalarField::symbolic();
  FiniteGradedAlgebra dual = build_dual_algebra(2, F);
  const PresentedAlgebra& P = *dual.presentation();
  REQUIRE(P.system().certified());

  CHECK(dual.top_degree() == 4);
  std::vector<long> dims;
  for (int n = 0; n <= 4; ++n) {
    auto [a, b] = dual.degree_range(n);
    dims.push_back(b - a);
  }
  CHECK(dims == std::vector<long>{1, 4, 6, 4, 1});
  CHECK(dual.dim() == 16);

  auto uh = [&](int i, int j) { return P.gen_poly("uhat" + std::to_string(i) + std::to_string(j)); };
  Scalar q = Scalar::q(1);
  CHECK(P.nf(uh(1, 1) * uh(1, 1)).is_zero());
  CHECK(P.nf(uh(1, 2) * uh(1, 1) + (uh(1, 1) * uh(1, 2)).scaled(q)).is_zero());
  CHECK(P.nf(uh(2, 1) * uh(1, 1) + (uh(1, 1) * uh(2, 1)).scaled(q)).is_zero());
  CHECK(P.nf(uh(2, 2) * uh(1, 1) + uh(1, 1) * uh(2, 2)).is_zero());
  // anti-diagonal pair: uhat21 uhat12 + uhat12 uhat21 = (q^-1 - q) uhat11 uhat22
  CHECK(P.nf(uh(2, 1) * uh(1, 2) + uh(1, 2) * uh(2, 1) -
             (uh(1, 1) * uh(2, 2)).scaled(Scalar::q(-1) - q))
            .is_zero());
}

TEST_CASE("frobenius structure of the dual") {
  ScalarField F = ScalarField::symbolic();
  FiniteGradedAlgebra dual = build_dual_algebra(2, F);
  const PresentedAlgebra& P = *dual.presentation();
  FrobeniusFunctional h = frobenius_functional(dual);

  auto g = [&](int i, int j) { return P.gen("uhat" + std::to_string(i) + std::to_string(j)); };
  // normalized on the ascending top word
  CHECK(h.apply(P.nf(NCPoly::monomial(P.gens(), Word{g(1, 1), g(1, 2), g(2, 1), g(2, 2)},
                                      Scalar(1)))) == Scalar(1));
  // fully reversed top word picks up q^4
  CHECK(h.apply(P.nf(NCPoly::monomial(P.gens(), Word{g(2, 2), g(2, 1), g(1, 2), g(1, 1)},
                                      Scalar(1)))) == Scalar::q(4));
  // words below the top degree evaluate to zero
  CHECK(h.apply(P.nf(NCPoly::monomial(P.gens(), Word{g(1, 1), g(2, 2)}, Scalar(1)))) == Scalar(0));

  CHECK(check_frobenius(dual, h));
}

TEST_CASE("nakayama automorphism and the modular twist") {
  ScalarField F = ScalarField::symbolic();
  FiniteGradedAlgebra dual = build_dual_algebra(2, F);
  FrobeniusFunctional h = frobenius_functional(dual);
  NakayamaData nk = nakayama(dual, h);
  REQUIRE(nk.diagonal);
  CHECK(nk.sign == -1);
  CHECK(nk.exponents.at({1, 1}) == 2);
  CHECK(nk.exponents.at({1, 2}) == 0);
  CHECK(nk.exponents.at({2, 1}) == 0);
  CHECK(nk.exponents.at({2, 2}) == -2);

  AlgebraPtr B = build_matrix_algebra(2, F);
  AlgebraMap sigma = sigma_from_nakayama(nk, 2, B);
  CHECK(sigma.images[(size_t)B->gen("u11")] == B->gen_poly("u11").scaled(Scalar::q(2)));
  CHECK(is_homomorphism(sigma));
}

TEST_CASE("product cache respects the grading") {
  ScalarField F = ScalarField::specialized(Rat(2));
  FiniteGradedAlgebra dual = build_dual_algebra(2, F);
  for (int i = 0; i < dual.dim(); ++i)
    for (int j = 0; j < dual.dim(); ++j) {
      int expect = dual.degree_of(i) + dual.degree_of(j);
      for (const auto& [k, c] : dual.product(i, j)) {
        CHECK(dual.degree_of(k) == expect);
        CHECK_FALSE(c.is_zero());
      }
    }
}
