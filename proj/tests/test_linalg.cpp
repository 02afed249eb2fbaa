#include "doctest.h"
#include "qhom/linalg.hpp"
#include "qhom/scalar.hpp"

using namespace qhom;

namespace {

SparseMat<Rat> from_rows(const std::vector<std::vector<long>>& rows) {
  int nc = rows.empty() ? 0 : (int)rows[0].size();
  SparseMat<Rat> m((int)rows.size(), nc);
  for (int i = 0; i < (int)rows.size(); ++i)
    for (int j = 0; j < nc; ++j)
      if (rows[(size_t)i][(size_t)j] != 0) m.add(i, j, Rat(rows[(size_t)i][(size_t)j]));
  return m;
}

}  // namespace

TEST_CASE("sparse matrix basics") {
  SparseMat<Rat> m(2, 3);
  m.add(0, 1, Rat(2));
  m.add(0, 1, Rat(-2));  // cancels away
  m.add(1, 2, Rat(5));
  CHECK(m.get(0, 1) == 0);
  CHECK(m.get(1, 2) == 5);
  CHECK(m.nnz() == 1);
  CHECK_FALSE(m.is_zero());
  CHECK(SparseMat<Rat>::identity(3).nnz() == 3);
}

TEST_CASE("rref is the unique reduced form") {
  auto m = from_rows({{1, 2, 3, 1}, {4, 5, 6, 1}, {7, 8, 9, 2}});
  RrefResult<Rat> r = rref(m);
  CHECK(r.rank == 3);
  CHECK(r.pivot_col == std::vector<int>{0, 1, 3});
  // third column expressed over the pivots: col2 = -col0 + 2*col1
  CHECK(r.mat.get(0, 2) == -1);
  CHECK(r.mat.get(1, 2) == 2);
  CHECK(r.mat.get(2, 2) == 0);

  auto singular = from_rows({{1, 2, 3}, {4, 5, 6}, {5, 7, 9}});
  CHECK(rref(singular).rank == 2);
}

TEST_CASE("sparse_rank agrees with rref") {
  auto a = from_rows({{1, 2, 3}, {4, 5, 6}, {5, 7, 9}, {0, 0, 1}});
  CHECK(sparse_rank(a) == 3);
  CHECK(sparse_rank(from_rows({{0, 0}, {0, 0}})) == 0);
  auto wide = from_rows({{2, 0, 0, 4}, {0, 3, 0, 6}, {2, 3, 0, 10}});
  CHECK(sparse_rank(wide) == rref(wide).rank);
}

TEST_CASE("nullspace canonical basis") {
  auto m = from_rows({{1, 2, 3}, {4, 5, 6}});
  SparseMat<Rat> ns = nullspace(m);
  CHECK(ns.rows == 3);
  CHECK(ns.cols == 1);
  CHECK(ns.get(0, 0) == 1);
  CHECK(ns.get(1, 0) == -2);
  CHECK(ns.get(2, 0) == 1);
  // columns of the nullspace really are killed
  CHECK(mat_mul(m, ns).is_zero());

  CHECK(nullspace(from_rows({{1, 0}, {0, 1}})).cols == 0);
}

TEST_CASE("solve_columns") {
  auto a = from_rows({{1, 0}, {1, 1}, {0, 2}});
  auto b = from_rows({{3}, {5}, {4}});
  auto x = solve_columns(a, b);
  REQUIRE(x.has_value());
  CHECK(x->get(0, 0) == 3);
  CHECK(x->get(1, 0) == 2);

  auto outside = from_rows({{1}, {0}, {1}});
  CHECK_FALSE(solve_columns(a, outside).has_value());
}

TEST_CASE("matrix product and subtraction") {
  auto a = from_rows({{1, 2}, {3, 4}});
  auto b = from_rows({{0, 1}, {1, 0}});
  auto ab = mat_mul(a, b);
  CHECK(ab.get(0, 0) == 2);
  CHECK(ab.get(0, 1) == 1);
  CHECK(ab.get(1, 0) == 4);
  CHECK(ab.get(1, 1) == 3);
  CHECK(mat_sub(ab, ab).is_zero());
}

TEST_CASE("bareiss rank over symbolic entries") {
  LaurentQ q = LaurentQ::q(1);
  LaurentQ one(1L);
  // [[q, 1], [q^2, q]] has proportional rows
  CHECK(bareiss_rank({{q, one}, {q * q, q}}) == 1);
  // [[q, 1], [1, q]]: determinant q^2 - 1, generically invertible
  CHECK(bareiss_rank({{q, one}, {one, q}}) == 2);
}

TEST_CASE("matrix_rank across field modes") {
  ScalarField sym = ScalarField::symbolic();
  ScalarField sp = ScalarField::specialized(Rat(2));
  SparseMat<Scalar> m(2, 2);
  m.add(0, 0, Scalar::q(1));
  m.add(0, 1, Scalar(1));
  m.add(1, 0, Scalar(1));
  m.add(1, 1, sym.q(-1));
  // rows are proportional: q * (1, q^-1) = (q, 1)
  CHECK(matrix_rank(m, sym) == 1);

  SparseMat<Scalar> s(2, 2);
  s.add(0, 0, sp.q(1));
  s.add(0, 1, Scalar(1));
  s.add(1, 0, Scalar(1));
  s.add(1, 1, sp.q(-1));
  CHECK(matrix_rank(s, sp) == 1);
}
