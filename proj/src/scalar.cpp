#include "qhom/scalar.hpp"

#include <sstream>

namespace qhom {

// ---------------------------------------------------------------- LaurentQ

LaurentQ::LaurentQ(const Rat& c) {
  if (c != 0) terms_[0] = c;
}

LaurentQ::LaurentQ(long c) {
  if (c != 0) terms_[0] = Rat(c);
}

LaurentQ LaurentQ::monomial(const Rat& c, int e) {
  LaurentQ r;
  if (c != 0) r.terms_[e] = c;
  return r;
}

LaurentQ LaurentQ::q(int e) { return monomial(Rat(1), e); }

bool LaurentQ::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentQ::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int LaurentQ::min_exp() const {
  if (terms_.empty()) throw Error(Errc::internal_consistency, "min_exp of zero polynomial");
  return terms_.begin()->first;
}

int LaurentQ::max_exp() const {
  if (terms_.empty()) throw Error(Errc::internal_consistency, "max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

Rat LaurentQ::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentQ::trim(int e) {
  auto it = terms_.find(e);
  if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  for (const auto& [e, c] : o.terms_) {
    terms_[e] += c;
    trim(e);
  }
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
  for (const auto& [e, c] : o.terms_) {
    terms_[e] -= c;
    trim(e);
  }
  return *this;
}

LaurentQ LaurentQ::operator+(const LaurentQ& o) const {
  LaurentQ r = *this;
  r += o;
  return r;
}

LaurentQ LaurentQ::operator-(const LaurentQ& o) const {
  LaurentQ r = *this;
  r -= o;
  return r;
}

LaurentQ LaurentQ::operator*(const LaurentQ& o) const {
  LaurentQ r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      r.terms_[e1 + e2] += c1 * c2;
      r.trim(e1 + e2);
    }
  return r;
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& o) { return *this = *this * o; }

LaurentQ& LaurentQ::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

LaurentQ LaurentQ::shifted(int e) const {
  LaurentQ r;
  for (const auto& [e1, c] : terms_) r.terms_[e1 + e] = c;
  return r;
}

Rat LaurentQ::evaluate(const Rat& q0) const {
  if (q0 == 0) throw Error(Errc::invalid_specialization, "cannot evaluate Laurent polynomial at q = 0");
  Rat acc = 0;
  for (const auto& [e, c] : terms_) acc += c * rat_pow(q0, e);
  return acc;
}

std::string LaurentQ::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // descending exponents
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rat c = it->second;
    int e = it->first;
    bool neg = c < 0;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    Rat mag = neg ? Rat(-c) : c;
    if (e == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "q";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

LaurentQ laurent_arith(const LaurentQ& a, const LaurentQ& b, LaurentOp op) {
  switch (op) {
    case LaurentOp::Add: return a + b;
    case LaurentOp::Sub: return a - b;
    case LaurentOp::Mul: return a * b;
  }
  throw Error(Errc::invalid_config, "unknown Laurent operation");
}

Rat specialize(const LaurentQ& a, const Rat& q0) {
  if (q0 == 0) throw Error(Errc::invalid_specialization, "specialization point q0 = 0 is not allowed");
  return a.evaluate(q0);
}

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw Error(Errc::invalid_specialization, "negative power of zero");
    return Rat(0);
  }
  Rat b = base;
  long n = e;
  if (n < 0) {
    b = Rat(denominator(b), numerator(b));
    n = -n;
  }
  Rat acc = 1;
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

// --------------------------------------------------- polynomial gcd in Q[q]

namespace {

// Division with remainder for polynomials (min_exp >= 0 assumed).
void poly_divmod(const LaurentQ& a, const LaurentQ& b, LaurentQ& quot, LaurentQ& rem) {
  if (b.is_zero()) throw Error(Errc::internal_consistency, "polynomial division by zero");
  quot = LaurentQ();
  rem = a;
  int db = b.max_exp();
  Rat lb = b.coeff(db);
  while (!rem.is_zero() && rem.max_exp() >= db) {
    int e = rem.max_exp() - db;
    Rat c = rem.coeff(rem.max_exp()) / lb;
    LaurentQ t = LaurentQ::monomial(c, e);
    quot += t;
    rem -= t * b;
  }
}

LaurentQ make_monic(const LaurentQ& a) {
  if (a.is_zero()) return a;
  LaurentQ r = a;
  Rat inv = Rat(1) / a.coeff(a.max_exp());
  r *= inv;
  return r;
}

}  // namespace

LaurentQ poly_gcd(LaurentQ a, LaurentQ b) {
  if (!a.is_zero() && a.min_exp() < 0) throw Error(Errc::internal_consistency, "poly_gcd: negative exponent");
  if (!b.is_zero() && b.min_exp() < 0) throw Error(Errc::internal_consistency, "poly_gcd: negative exponent");
  while (!b.is_zero()) {
    LaurentQ quot, rem;
    poly_divmod(a, b, quot, rem);
    a = b;
    b = rem;
  }
  return make_monic(a);
}

LaurentQ poly_div_exact(const LaurentQ& a, const LaurentQ& b) {
  LaurentQ quot, rem;
  // Shift both to nonnegative exponents; the net shift transfers to the quotient.
  int sa = a.is_zero() ? 0 : a.min_exp();
  int sb = b.is_zero() ? 0 : b.min_exp();
  poly_divmod(a.shifted(-sa), b.shifted(-sb), quot, rem);
  if (!rem.is_zero()) throw Error(Errc::internal_consistency, "poly_div_exact: division is not exact");
  return quot.shifted(sa - sb);
}

// ------------------------------------------------------------------ Scalar

Scalar Scalar::q(int e) { return laurent(LaurentQ::q(e)); }

Scalar Scalar::laurent(const LaurentQ& p) { return make(p, LaurentQ(1L)); }

Scalar Scalar::fraction(const LaurentQ& num, const LaurentQ& den) {
  if (den.is_zero()) throw Error(Errc::internal_consistency, "scalar fraction with zero denominator");
  return make(num, den);
}

// Reduce num/den to canonical form and collapse to Rat when possible.
Scalar Scalar::make(LaurentQ num, LaurentQ den) {
  if (den.is_zero()) throw Error(Errc::internal_consistency, "scalar with zero denominator");
  Scalar s;
  if (num.is_zero()) {
    s.rep_ = Rat(0);
    return s;
  }
  // Pull q-power content out of both so gcd runs on genuine polynomials.
  int sn = num.min_exp();
  int sd = den.min_exp();
  LaurentQ n = num.shifted(-sn);
  LaurentQ d = den.shifted(-sd);
  LaurentQ g = poly_gcd(n, d);
  if (!g.is_one()) {
    n = poly_div_exact(n, g);
    d = poly_div_exact(d, g);
  }
  // Monic denominator fixes the unit ambiguity.
  Rat lead = d.coeff(d.max_exp());
  if (lead != 1) {
    Rat inv = Rat(1) / lead;
    n *= inv;
    d *= inv;
  }
  n = n.shifted(sn - sd);
  if (d.is_one()) {
    if (n.is_constant()) {
      s.rep_ = n.is_zero() ? Rat(0) : n.coeff(0);
    } else {
      s.rep_ = Frac{n, LaurentQ(1L)};
    }
  } else {
    s.rep_ = Frac{n, d};
  }
  return s;
}

bool Scalar::is_zero() const {
  return is_rational() && std::get<Rat>(rep_) == 0;
}

bool Scalar::is_one() const {
  return is_rational() && std::get<Rat>(rep_) == 1;
}

bool Scalar::is_laurent() const {
  if (is_rational()) return true;
  return std::get<Frac>(rep_).den.is_one();
}

const Rat& Scalar::rat() const {
  if (!is_rational()) throw Error(Errc::internal_consistency, "Scalar::rat on symbolic scalar");
  return std::get<Rat>(rep_);
}

LaurentQ Scalar::numerator() const {
  if (is_rational()) return LaurentQ(std::get<Rat>(rep_));
  return std::get<Frac>(rep_).num;
}

LaurentQ Scalar::denominator() const {
  if (is_rational()) return LaurentQ(1L);
  return std::get<Frac>(rep_).den;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_rational() && o.is_rational()) return Scalar(std::get<Rat>(rep_) + std::get<Rat>(o.rep_));
  LaurentQ n1 = numerator(), d1 = denominator();
  LaurentQ n2 = o.numerator(), d2 = o.denominator();
  if (d1.is_one() && d2.is_one()) return make(n1 + n2, d1);
  return make(n1 * d2 + n2 * d1, d1 * d2);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_rational() && o.is_rational()) return Scalar(std::get<Rat>(rep_) * std::get<Rat>(o.rep_));
  if (is_zero() || o.is_zero()) return Scalar();
  LaurentQ n1 = numerator(), d1 = denominator();
  LaurentQ n2 = o.numerator(), d2 = o.denominator();
  if (d1.is_one() && d2.is_one()) return make(n1 * n2, d1);
  return make(n1 * n2, d1 * d2);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(Rat(-std::get<Rat>(rep_)));
  const Frac& f = std::get<Frac>(rep_);
  return make(-f.num, f.den);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::internal_consistency, "inverse of zero scalar");
  if (is_rational()) return Scalar(Rat(Rat(1) / std::get<Rat>(rep_)));
  const Frac& f = std::get<Frac>(rep_);
  return make(f.den, f.num);
}

Scalar Scalar::pow(long e) const {
  if (e == 0) return Scalar(1);
  Scalar base = e < 0 ? inverse() : *this;
  long n = e < 0 ? -e : e;
  Scalar acc(1);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Rat Scalar::evaluate(const Rat& q0) const {
  if (is_rational()) return std::get<Rat>(rep_);
  const Frac& f = std::get<Frac>(rep_);
  Rat d = f.den.evaluate(q0);
  if (d == 0) throw Error(Errc::invalid_specialization, "denominator vanishes at specialization point");
  return f.num.evaluate(q0) / d;
}

bool Scalar::operator<(const Scalar& o) const {
  if (is_rational() != o.is_rational()) return is_rational();
  if (is_rational()) return std::get<Rat>(rep_) < std::get<Rat>(o.rep_);
  return std::get<Frac>(rep_) < std::get<Frac>(o.rep_);
}

std::string Scalar::str() const {
  if (is_rational()) {
    std::ostringstream out;
    out << std::get<Rat>(rep_);
    return out.str();
  }
  const Frac& f = std::get<Frac>(rep_);
  if (f.den.is_one()) return f.num.str();
  return "(" + f.num.str() + ")/(" + f.den.str() + ")";
}

// ------------------------------------------------------------- ScalarField

ScalarField ScalarField::specialized(const Rat& q0) {
  if (q0 == 0 || q0 == 1 || q0 == -1)
    throw Error(Errc::invalid_specialization, "specialization point must satisfy |q0| != 0, 1");
  ScalarField f;
  f.mode = Mode::Specialized;
  f.q0 = q0;
  return f;
}

ScalarField ScalarField::symbolic() {
  ScalarField f;
  f.mode = Mode::Symbolic;
  return f;
}

Scalar ScalarField::q(int e) const {
  if (mode == Mode::Symbolic) return Scalar::q(e);
  return Scalar(rat_pow(q0, e));
}

Rat ScalarField::confirm_q0() const {
  if (mode != Mode::Specialized) throw Error(Errc::invalid_config, "confirm_q0 in symbolic mode");
  if (q0 == 2) return Rat(3, 2);
  if (q0 == Rat(3, 2)) return Rat(2);
  Rat alt = q0 + 1;
  while (alt == 0 || alt == 1 || alt == -1) alt += 1;
  return alt;
}

}  // namespace qhom
