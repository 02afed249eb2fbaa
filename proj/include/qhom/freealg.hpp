#pragma once

// Words and noncommutative polynomials over a named, ordered generator set.
// Generators are identified by their position in the order (GenId); words are
// flat GenId sequences; polynomials are canonical maps Word -> Scalar sorted
// by the degree-lexicographic order.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qhom/error.hpp"
#include "qhom/scalar.hpp"

namespace qhom {

using GenId = int;
using Word = std::vector<GenId>;  // empty word = multiplicative unit

class GeneratorSet {
 public:
  static std::shared_ptr<const GeneratorSet> make(std::vector<std::string> names);

  int size() const { return (int)names_.size(); }
  GenId id(const std::string& name) const;
  const std::string& name(GenId g) const;
  const std::vector<std::string>& names() const { return names_; }
  bool operator==(const GeneratorSet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;  // index = GenId = sort position
  std::map<std::string, GenId> index_;
};

using GensPtr = std::shared_ptr<const GeneratorSet>;

// throws incompatible_algebra unless both sets agree (by identity or content)
void require_compatible(const GensPtr& a, const GensPtr& b);

enum class Cmp { LT, EQ, GT };

// Degree-first, then lexicographic by generator id. OrderSpec is a tag for
// the (single) order in use; kept as a type so signatures say what they mean.
struct OrderSpec {};

Cmp monomial_order_cmp(const Word& a, const Word& b, const OrderSpec& order = {});

struct WordDegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class NCPoly {
 public:
  using TermMap = std::map<Word, Scalar, WordDegLexLess>;

  explicit NCPoly(GensPtr gens) : gens_(std::move(gens)) {}
  static NCPoly zero(GensPtr gens) { return NCPoly(std::move(gens)); }
  static NCPoly unit(GensPtr gens);
  static NCPoly monomial(GensPtr gens, Word w, Scalar c);
  static NCPoly generator(GensPtr gens, GenId g);

  const GensPtr& gens() const { return gens_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  Scalar coeff(const Word& w) const;

  const Word& lead_word() const;    // order-largest word; requires nonzero
  const Scalar& lead_coeff() const;

  void add_term(const Word& w, const Scalar& c);  // accumulate, drop zeros

  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator*(const NCPoly& o) const;
  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly scaled(const Scalar& c) const;

  bool operator==(const NCPoly& o) const;
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

 private:
  GensPtr gens_;
  TermMap terms_;
};

enum class PolyOp { Add, Sub, Mul, Scale };
// Scale multiplies a by b's coefficient of the empty word (b must be a scalar).
NCPoly poly_arith(const NCPoly& a, const NCPoly& b, PolyOp op);

// Text form: terms "coeff*g1.g2.g3" joined by " + " / " - ", unit word "1".
// The printer and parser round-trip bit-exactly.
std::string poly_to_string(const NCPoly& p);
NCPoly poly_parse(const GensPtr& gens, const std::string& text);

std::string word_to_string(const GeneratorSet& gens, const Word& w);

}  // namespace qhom
