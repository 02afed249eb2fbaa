#pragma once

// Exact coefficient arithmetic. Three layers:
//   Rat      -- arbitrary-precision rationals,
//   LaurentQ -- Laurent polynomials in q over Rat,
//   Scalar   -- elements of Q(q) kept in canonical reduced form, with a
//               fast path for plain rational constants.
// A ScalarField selects between symbolic coefficients and a specialization
// q = q0 fixed up front; |q0| must avoid 0 and 1 so that powers of q0 stay
// pairwise distinct.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <variant>

#include "qhom/error.hpp"

namespace qhom {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class LaurentQ {
 public:
  LaurentQ() = default;
  explicit LaurentQ(const Rat& c);
  explicit LaurentQ(long c);

  // c * q^e
  static LaurentQ monomial(const Rat& c, int e);
  static LaurentQ q(int e = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;  // zero or supported on exponent 0
  bool is_monomial() const { return terms_.size() == 1; }
  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero
  Rat coeff(int e) const;
  const std::map<int, Rat>& terms() const { return terms_; }

  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o);
  LaurentQ operator+(const LaurentQ& o) const;
  LaurentQ operator-(const LaurentQ& o) const;
  LaurentQ operator*(const LaurentQ& o) const;
  LaurentQ operator-() const;
  LaurentQ& operator*=(const LaurentQ& o);
  LaurentQ& operator*=(const Rat& c);

  LaurentQ shifted(int e) const;  // multiply by q^e

  // Substitute q = q0 (exact). q0 = 0 is rejected: negative exponents.
  Rat evaluate(const Rat& q0) const;

  bool operator==(const LaurentQ& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentQ& o) const { return terms_ != o.terms_; }
  bool operator<(const LaurentQ& o) const { return terms_ < o.terms_; }

  // Canonical text form, descending exponents: "2*q^2 - q + 1/3*q^-1".
  std::string str() const;

 private:
  void trim(int e);  // drop exponent e if its coefficient became zero
  std::map<int, Rat> terms_;
};

enum class LaurentOp { Add, Sub, Mul };
LaurentQ laurent_arith(const LaurentQ& a, const LaurentQ& b, LaurentOp op);

// Exact substitution q = q0; throws invalid_specialization when q0 = 0.
Rat specialize(const LaurentQ& a, const Rat& q0);

// Euclidean gcd in Q[q], returned monic; both inputs must have min_exp >= 0.
LaurentQ poly_gcd(LaurentQ a, LaurentQ b);
// Exact division; throws internal_consistency if the remainder is nonzero.
LaurentQ poly_div_exact(const LaurentQ& a, const LaurentQ& b);

// An element of Q(q): either a rational constant or a reduced fraction
// num/den of Laurent polynomials. Canonical form: gcd(num, den) = 1, den a
// monic polynomial with nonzero constant term; den = 1 collapses into the
// Laurent numerator; a constant Laurent numerator with den = 1 collapses
// further into the Rat alternative. Equality is structural.
class Scalar {
 public:
  Scalar() : rep_(Rat(0)) {}
  Scalar(int c) : rep_(Rat(c)) {}
  Scalar(long c) : rep_(Rat(c)) {}
  Scalar(const Rat& c) : rep_(c) {}
  static Scalar q(int e = 1);
  static Scalar laurent(const LaurentQ& p);
  static Scalar fraction(const LaurentQ& num, const LaurentQ& den);

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<Rat>(rep_); }
  // True when the value lies in Q[q, q^-1] (no genuine denominator).
  bool is_laurent() const;

  const Rat& rat() const;  // requires is_rational()
  LaurentQ numerator() const;
  LaurentQ denominator() const;  // 1 unless a genuine fraction

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  Scalar pow(long e) const;

  Rat evaluate(const Rat& q0) const;

  bool operator==(const Scalar& o) const { return rep_ == o.rep_; }
  bool operator!=(const Scalar& o) const { return rep_ != o.rep_; }
  bool operator<(const Scalar& o) const;  // arbitrary total order (for maps)

  std::string str() const;

 private:
  struct Frac {
    LaurentQ num;
    LaurentQ den;
    bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
    bool operator<(const Frac& o) const {
      if (den < o.den) return true;
      if (o.den < den) return false;
      return num < o.num;
    }
  };
  static Scalar make(LaurentQ num, LaurentQ den);
  std::variant<Rat, Frac> rep_;
};

// Coefficient domain for an entire computation. Specialized mode fixes
// q = q0 up front and works over Rat-valued scalars; Symbolic keeps q as an
// indeterminate. Rank computations in Specialized mode confirm generic
// behaviour at a second point, confirm_q0().
struct ScalarField {
  enum class Mode { Specialized, Symbolic };

  static ScalarField specialized(const Rat& q0);
  static ScalarField symbolic();

  bool symbolic_mode() const { return mode == Mode::Symbolic; }

  // q^e as a Scalar of this field: a Laurent monomial in symbolic mode, the
  // rational q0^e in specialized mode.
  Scalar q(int e = 1) const;
  Scalar of_rat(const Rat& c) const { return Scalar(c); }

  // Second specialization point used to cross-check generic ranks; pairs
  // 2 <-> 3/2 by default and otherwise uses q0 + 1 (adjusted away from the
  // forbidden values).
  Rat confirm_q0() const;

  bool operator==(const ScalarField& o) const { return mode == o.mode && q0 == o.q0; }

  Mode mode = Mode::Symbolic;
  Rat q0 = 0;
};

// Power of an exact rational (e may be negative; base must be nonzero then).
Rat rat_pow(const Rat& base, long e);

}  // namespace qhom
