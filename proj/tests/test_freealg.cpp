#include "doctest.h"
#include "qhom/freealg.hpp"

using namespace qhom;

namespace {

GensPtr xy() { return GeneratorSet::make({"x", "y"}); }

}  // namespace

TEST_CASE("generator sets") {
  GensPtr g = xy();
  CHECK(g->size() == 2);
  CHECK(g->id("x") == 0);
  CHECK(g->id("y") == 1);
  CHECK(g->name(1) == "y");
  CHECK_THROWS_AS((void)g->id("z"), Error);

  GensPtr h = GeneratorSet::make({"x", "y"});
  CHECK_NOTHROW(require_compatible(g, h));
  GensPtr k = GeneratorSet::make({"a"});
  CHECK_THROWS_AS(require_compatible(g, k), Error);
}

TEST_CASE("deglex word order") {
  WordDegLexLess lt;
  CHECK(lt(Word{}, Word{0}));        // shorter first
  CHECK(lt(Word{1}, Word{0, 0}));    // length dominates
  CHECK(lt(Word{0, 1}, Word{1, 0})); // then lexicographic
  CHECK_FALSE(lt(Word{1, 0}, Word{1, 0}));
}

TEST_CASE("noncommutative polynomial arithmetic") {
  GensPtr g = xy();
  NCPoly x = NCPoly::generator(g, 0);
  NCPoly y = NCPoly::generator(g, 1);
  NCPoly p = (x + y) * (x - y);
  // xx - xy + yx - yy, all four monomials distinct
  CHECK(p.num_terms() == 4);
  CHECK(p.coeff(Word{0, 0}) == Scalar(1));
  CHECK(p.coeff(Word{0, 1}) == Scalar(-1));
  CHECK(p.coeff(Word{1, 0}) == Scalar(1));
  CHECK(p.coeff(Word{1, 1}) == Scalar(-1));
  CHECK(p.lead_word() == Word{1, 1});
  CHECK(p.lead_coeff() == Scalar(-1));

  CHECK((p - p).is_zero());
  CHECK((x * NCPoly::unit(g)) == x);
  CHECK(x.scaled(Scalar(3)).coeff(Word{0}) == Scalar(3));

  NCPoly acc(g);
  acc.add_term(Word{0, 1}, Scalar(2));
  acc.add_term(Word{0, 1}, Scalar(-2));
  CHECK(acc.is_zero());
}

TEST_CASE("printer and parser round-trip") {
  GensPtr g = xy();
  NCPoly x = NCPoly::generator(g, 0);
  NCPoly y = NCPoly::generator(g, 1);
  NCPoly p = x * y * x.scaled(Scalar(2)) - y.scaled(Scalar(Rat(1) / 3)) + NCPoly::unit(g);
  std::string s = poly_to_string(p);
  CHECK(poly_parse(g, s) == p);

  // symbolic coefficients survive the trip as well
  NCPoly qq = x.scaled(Scalar::q(2) - Scalar::q(-1)) + y.scaled(Scalar(1) / (Scalar::q(1) + Scalar(1)));
  CHECK(poly_parse(g, poly_to_string(qq)) == qq);

  CHECK(poly_to_string(NCPoly(g)) == "0");
  CHECK(poly_parse(g, "0").is_zero());
  CHECK(word_to_string(*g, Word{0, 1, 0}) == "x.y.x");
  CHECK(word_to_string(*g, Word{}) == "1");
}
