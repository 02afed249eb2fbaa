#include "doctest.h"
#include "qhom/homology.hpp"

using namespace qhom;

namespace {

// decode a syzygy basis column into a free-algebra element
NCPoly col_to_poly(const GensPtr& gens, const SyzygySpace& s, int col) {
  NCPoly acc(gens);
  for (int r = 0; r < s.basis.rows; ++r) {
    Scalar v = s.basis.get(r, col);
    if (v.is_zero()) continue;
    long idx = r;
    Word w((size_t)s.n);
    for (int t = s.n - 1; t >= 0; --t) {
      w[(size_t)t] = (GenId)(idx % s.m);
      idx /= s.m;
    }
    acc = acc + NCPoly::monomial(gens, std::move(w), v);
  }
  return acc;
}

long table_dim(const HomologyTable& t, int n, int d) { return t.hom_dim(n, Deg{d}); }

}  // namespace

TEST_CASE("koszul syzygies of the 2x2 matrix algebra") {
  ScalarField F = ScalarField::symbolic();
  AlgebraPtr B = build_matrix_algebra(2, F);
  QuadraticData qd = quadratic_data(*B);
  std::vector<SyzygySpace> syz = koszul_syzygies(qd, 5);
  REQUIRE(syz.size() >= 5);
  std::vector<int> dims;
  for (const auto& s : syz) dims.push_back(s.dim());
  CHECK(dims == std::vector<int>{1, 4, 6, 4, 1, 0});

  // K_2 is exactly the relation span
  REQUIRE(syz[2].dim() == 6);
  for (int c = 0; c < 6; ++c) CHECK(B->nf(col_to_poly(qd.gens, syz[2], c)).is_zero());

  // K_n sits inside R tensor V^{n-2}, hence reduces to zero in B
  for (int n = 3; n <= 4; ++n)
    for (int c = 0; c < syz[(size_t)n].dim(); ++c)
      CHECK(B->nf(col_to_poly(qd.gens, syz[(size_t)n], c)).is_zero());
}

TEST_CASE("syzygy decompositions reconstruct the basis") {
  ScalarField F = ScalarField::symbolic();
  QuadraticData qd = quadratic_data(*build_matrix_algebra(2, F));
  std::vector<SyzygySpace> syz = koszul_syzygies(qd, 3);
  const SyzygySpace& s3 = syz[3];
  const SyzygySpace& s2 = syz[2];
  const int m = s3.m;

  for (int c = 0; c < s3.dim(); ++c) {
    // expand lambda: basis[c] = sum lambda[(g * dimK2 + j), c] g tensor K2[j]
    NCPoly target = col_to_poly(qd.gens, s3, c);
    NCPoly viaLambda(qd.gens);
    for (int r = 0; r < s3.lambda.rows; ++r) {
      Scalar v = s3.lambda.get(r, c);
      if (v.is_zero()) continue;
      GenId g = (GenId)(r / s2.dim());
      int j = r % s2.dim();
      viaLambda = viaLambda + (NCPoly::generator(qd.gens, g) * col_to_poly(qd.gens, s2, j)).scaled(v);
    }
    CHECK((target - viaLambda).is_zero());

    // expand rho: basis[c] = sum rho[(j * m + g), c] K2[j] tensor g
    NCPoly viaRho(qd.gens);
    for (int r = 0; r < s3.rho.rows; ++r) {
      Scalar v = s3.rho.get(r, c);
      if (v.is_zero()) continue;
      int j = r / m;
      GenId g = (GenId)(r % m);
      viaRho = viaRho + (col_to_poly(qd.gens, s2, j) * NCPoly::generator(qd.gens, g)).scaled(v);
    }
    CHECK((target - viaRho).is_zero());
  }
}

TEST_CASE("laurent two-term complex") {
  ScalarField F = ScalarField::specialized(Rat(2));

  GradedComplex c = laurent_complex(F, 3, 0);
  CHECK(c.n_top == 1);
  CHECK(c.exact_top);
  CHECK(c.report_n_max() == 1);
  CHECK(c.degrees.size() == 7);
  CHECK(c.dim_at(0, Deg{2}) == 1);
  CHECK(c.dim_at(1, Deg{-3}) == 1);
  CHECK(c.dim_at(0, Deg{5}) == 0);  // outside the carried window

  HomologyTable t = homology_dims(c);
  CHECK(t.complete);
  CHECK(t.top_nonzero() == 1);
  for (const auto& row : t.rows) CHECK(row.hom_dim == 1);

  // twisted by t -> q^2 t the differential is the unit q0^2 - 1, killing everything
  GradedComplex ct = laurent_complex(F, 3, 2);
  HomologyTable tt = homology_dims(ct);
  CHECK(tt.top_nonzero() == -1);
  for (const auto& row : tt.rows) CHECK(row.hom_dim == 0);

  CHECK_THROWS_AS((void)laurent_complex(ScalarField::symbolic(), 3, 0), Error);
}

TEST_CASE("untwisted koszul homology of the matrix algebra") {
  ScalarField F = ScalarField::specialized(Rat(2));
  AlgebraPtr B = build_matrix_algebra(2, F);
  QuadraticData qd = quadratic_data(*B);
  std::vector<SyzygySpace> syz = koszul_syzygies(qd, 5);
  GradedComplex c = build_koszul_complex({B, identity_map(B)}, syz, 3);
  HomologyTable t = homology_dims(c);

  // degree-1 commutators vanish, so all four generator classes survive
  CHECK(table_dim(t, 0, 0) == 1);
  CHECK(table_dim(t, 0, 1) == 4);
  // degree 2: ten words modulo five independent commutator relations
  CHECK(table_dim(t, 0, 2) == 5);
  CHECK(table_dim(t, 1, 1) == 4);
}

TEST_CASE("twisted koszul homology of the matrix algebra") {
  ScalarField F = ScalarField::specialized(Rat(2));
  AlgebraPtr B = build_matrix_algebra(2, F);
  QuadraticData qd = quadratic_data(*B);
  std::vector<SyzygySpace> syz = koszul_syzygies(qd, 5);
  GradedComplex c = build_koszul_complex({B, modular_sigma(B)}, syz, 4);
  CHECK(c.n_top == 4);
  CHECK(c.exact_top);  // K_5 = 0
  HomologyTable t = homology_dims(c);
  CHECK(t.complete);

  const std::vector<std::vector<long>> expect = {
      {1, 2, 3, 4, 5},  // n = 0
      {0, 2, 4, 6, 9},  // n = 1
      {0, 0, 1, 2, 6},  // n = 2
      {0, 0, 0, 0, 3},  // n = 3
      {0, 0, 0, 0, 1},  // n = 4
  };
  for (int n = 0; n <= 4; ++n)
    for (int d = 0; d <= 4; ++d) CHECK(table_dim(t, n, d) == expect[(size_t)n][(size_t)d]);

  // complete columns: Euler characteristic of chains equals that of homology
  for (int d = 0; d <= 4; ++d) {
    long chi_chain = 0, chi_hom = 0;
    for (int n = 0; n <= 4; ++n) {
      long sign = (n % 2 == 0) ? 1 : -1;
      chi_chain += sign * c.dim_at(n, Deg{d});
      chi_hom += sign * table_dim(t, n, d);
    }
    CHECK(chi_chain == chi_hom);
  }

  CHECK_THROWS_AS(
      (void)build_koszul_complex({build_matrix_algebra(2, ScalarField::symbolic()),
                                  identity_map(build_matrix_algebra(2, ScalarField::symbolic()))},
                                 syz, 2),
      Error);
}

TEST_CASE("tensor products and the kunneth identity") {
  ScalarField F = ScalarField::specialized(Rat(2));
  GradedComplex lc = laurent_complex(F, 3, 0);
  GradedComplex t2 = tensor_complexes(lc, lc);
  CHECK(t2.n_top == 2);
  CHECK(t2.exact_top);
  CHECK(t2.degrees.size() == 49);

  HomologyTable h1 = homology_dims(lc);
  HomologyTable h12 = homology_dims(t2);
  for (const Deg& d : t2.degrees) {
    CHECK(h12.hom_dim(0, d) == 1);
    CHECK(h12.hom_dim(1, d) == 2);
    CHECK(h12.hom_dim(2, d) == 1);
  }
  CHECK(kunneth_check(h1, h1, h12));

  // mixed product with the twisted matrix-algebra complex; the factor tables
  // must come from the same complexes that were tensored
  AlgebraPtr B = build_matrix_algebra(2, F);
  QuadraticData qd = quadratic_data(*B);
  std::vector<SyzygySpace> syz = koszul_syzygies(qd, 5);
  GradedComplex kc = build_koszul_complex({B, modular_sigma(B)}, syz, 3);
  GradedComplex lau2 = laurent_complex(F, 2, 0);
  GradedComplex mix = tensor_complexes(kc, lau2);
  CHECK(kunneth_check(homology_dims(kc), homology_dims(lau2), homology_dims(mix)));

  ScalarField F3 = ScalarField::specialized(Rat(3));
  CHECK_THROWS_AS((void)tensor_complexes(lc, laurent_complex(F3, 2, 0)), Error);
}

TEST_CASE("poincare duality at N = 2") {
  ScalarField F = ScalarField::specialized(Rat(2));
  DualityReport rep = duality_check_B(2, 6, F);
  CHECK(rep.N == 2);
  CHECK(rep.dMax == 6);
  CHECK(rep.pass);
  REQUIRE(rep.lines.size() == 3);  // d = 4, 5, 6
  const std::vector<long> hom{1, 0, 1};
  for (size_t i = 0; i < rep.lines.size(); ++i) {
    CHECK(rep.lines[i].d == 4 + (int)i);
    CHECK(rep.lines[i].homology == hom[i]);
    CHECK(rep.lines[i].center == hom[i]);
    CHECK(rep.lines[i].pass);
  }
}
