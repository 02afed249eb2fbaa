#include "qhom/freealg.hpp"

#include <sstream>

namespace qhom {

std::shared_ptr<const GeneratorSet> GeneratorSet::make(std::vector<std::string> names) {
  auto gs = std::make_shared<GeneratorSet>();
  gs->names_ = std::move(names);
  for (size_t i = 0; i < gs->names_.size(); ++i) {
    auto [it, fresh] = gs->index_.emplace(gs->names_[i], (GenId)i);
    if (!fresh) throw Error(Errc::invalid_config, "duplicate generator name: " + gs->names_[i]);
  }
  return gs;
}

GenId GeneratorSet::id(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error(Errc::invalid_config, "unknown generator: " + name);
  return it->second;
}

const std::string& GeneratorSet::name(GenId g) const {
  if (g < 0 || g >= (int)names_.size()) throw Error(Errc::internal_consistency, "generator id out of range");
  return names_[g];
}

void require_compatible(const GensPtr& a, const GensPtr& b) {
  if (a == b) return;
  if (a && b && *a == *b) return;
  throw Error(Errc::incompatible_algebra, "operands live over different generator sets");
}

Cmp monomial_order_cmp(const Word& a, const Word& b, const OrderSpec&) {
  if (a.size() != b.size()) return a.size() < b.size() ? Cmp::LT : Cmp::GT;
  if (a < b) return Cmp::LT;
  if (b < a) return Cmp::GT;
  return Cmp::EQ;
}

NCPoly NCPoly::unit(GensPtr gens) { return monomial(std::move(gens), Word{}, Scalar(1)); }

NCPoly NCPoly::monomial(GensPtr gens, Word w, Scalar c) {
  NCPoly p(std::move(gens));
  if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
  return p;
}

NCPoly NCPoly::generator(GensPtr gens, GenId g) {
  if (g < 0 || g >= gens->size()) throw Error(Errc::internal_consistency, "generator id out of range");
  return monomial(std::move(gens), Word{g}, Scalar(1));
}

Scalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

const Word& NCPoly::lead_word() const {
  if (terms_.empty()) throw Error(Errc::internal_consistency, "lead_word of zero polynomial");
  return terms_.rbegin()->first;
}

const Scalar& NCPoly::lead_coeff() const {
  if (terms_.empty()) throw Error(Errc::internal_consistency, "lead_coeff of zero polynomial");
  return terms_.rbegin()->second;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  require_compatible(gens_, o.gens_);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  require_compatible(gens_, o.gens_);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r = *this;
  r += o;
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly r = *this;
  r -= o;
  return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
  require_compatible(gens_, o.gens_);
  NCPoly r(gens_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.add_term(w, c1 * c2);
    }
  return r;
}

NCPoly NCPoly::operator-() const {
  NCPoly r(gens_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
  NCPoly r(gens_);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
  return r;
}

bool NCPoly::operator==(const NCPoly& o) const {
  require_compatible(gens_, o.gens_);
  return terms_ == o.terms_;
}

NCPoly poly_arith(const NCPoly& a, const NCPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
    case PolyOp::Scale: {
      for (const auto& [w, c] : b.terms())
        if (!w.empty()) throw Error(Errc::invalid_config, "scale operand must be a scalar polynomial");
      return a.scaled(b.coeff(Word{}));
    }
  }
  throw Error(Errc::invalid_config, "unknown poly operation");
}

std::string word_to_string(const GeneratorSet& gens, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ".";
    out += gens.name(w[i]);
  }
  return out;
}

// ------------------------------------------------------------ text printer

namespace {

// Splits a scalar into (leading-minus flag, magnitude text). Only rationals
// and single-term numerators give a usable sign; everything else prints as a
// parenthesized block joined with '+'.
bool scalar_sign_split(const Scalar& c, std::string& magnitude) {
  if (c.is_rational()) {
    Rat r = c.rat();
    bool neg = r < 0;
    std::ostringstream out;
    out << (neg ? Rat(-r) : r);
    magnitude = out.str();
    return neg;
  }
  LaurentQ num = c.numerator();
  bool neg = false;
  if (num.is_monomial()) {
    int e = num.min_exp();
    Rat coef = num.coeff(e);
    neg = coef < 0;
    if (neg) num = LaurentQ::monomial(Rat(-coef), e);
  }
  if (c.is_laurent()) {
    magnitude = num.is_monomial() ? num.str() : "(" + num.str() + ")";
  } else {
    // genuine fraction: the canonical "(num)/(den)" form parses as-is
    magnitude = "(" + num.str() + ")/(" + c.denominator().str() + ")";
  }
  return neg;
}

std::string coeff_text(const std::string& magnitude, const Word& w, const GeneratorSet& gens) {
  if (w.empty()) return magnitude;
  if (magnitude == "1") return word_to_string(gens, w);
  // multi-term Laurent magnitudes need parentheses before '*'
  std::string mag = magnitude;
  bool needs_parens = mag.find(' ') != std::string::npos && mag.front() != '(';
  if (needs_parens) mag = "(" + mag + ")";
  return mag + "*" + word_to_string(gens, w);
}

}  // namespace

std::string poly_to_string(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  // descending monomial order, so the leading term prints first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::string mag;
    bool neg = scalar_sign_split(it->second, mag);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += coeff_text(mag, it->first, *p.gens());
  }
  return out;
}

// ------------------------------------------------------------- text parser

namespace {

struct Lexer {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw Error(Errc::invalid_config, std::string("parse error: expected '") + c + "' in polynomial text");
  }
  // unsigned integer
  bool number(Int& out) {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) return false;
    out = Int(std::string(s.substr(start, pos - start)));
    return true;
  }
  bool ident(std::string& out) {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (isalpha((unsigned char)s[pos]) || s[pos] == '_')) {
      ++pos;
      while (pos < s.size() && (isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
      out = std::string(s.substr(start, pos - start));
      return true;
    }
    return false;
  }
};

Rat parse_rational(Lexer& lx) {
  bool neg = lx.accept('-');
  Int num;
  if (!lx.number(num)) throw Error(Errc::invalid_config, "parse error: expected number");
  Int den = 1;
  if (lx.accept('/')) {
    if (!lx.number(den)) throw Error(Errc::invalid_config, "parse error: expected denominator");
  }
  Rat r(num, den);
  return neg ? Rat(-r) : r;
}

int parse_int(Lexer& lx) {
  bool neg = lx.accept('-');
  Int v;
  if (!lx.number(v)) throw Error(Errc::invalid_config, "parse error: expected integer exponent");
  long out = v.convert_to<long>();
  return (int)(neg ? -out : out);
}

// Laurent polynomial body: signed sequence of "rat", "rat*q^e", "q^e", "q".
LaurentQ parse_laurent_body(Lexer& lx) {
  LaurentQ acc;
  bool first = true;
  for (;;) {
    bool neg = false;
    lx.skip_ws();
    if (first) {
      neg = lx.accept('-');
    } else {
      if (lx.accept('+')) {
        neg = false;
      } else if (lx.accept('-')) {
        neg = true;
      } else {
        break;
      }
    }
    first = false;
    Rat coef(1);
    bool have_coef = false;
    if (isdigit((unsigned char)lx.peek())) {
      Int num;
      lx.number(num);
      Int den = 1;
      if (lx.accept('/')) {
        if (!lx.number(den)) throw Error(Errc::invalid_config, "parse error: expected denominator");
      }
      coef = Rat(num, den);
      have_coef = true;
    }
    int exp = 0;
    bool have_q = false;
    if (have_coef && lx.accept('*')) {
      std::string idq;
      if (!lx.ident(idq) || idq != "q") throw Error(Errc::invalid_config, "parse error: expected q");
      have_q = true;
    } else if (!have_coef) {
      std::string idq;
      if (!lx.ident(idq) || idq != "q") throw Error(Errc::invalid_config, "parse error: expected term");
      have_q = true;
    }
    if (have_q) exp = lx.accept('^') ? parse_int(lx) : 1;
    acc += LaurentQ::monomial(neg ? Rat(-coef) : coef, exp);
  }
  if (first) throw Error(Errc::invalid_config, "parse error: empty scalar expression");
  return acc;
}

}  // namespace

NCPoly poly_parse(const GensPtr& gens, const std::string& text) {
  Lexer lx{text};
  NCPoly result(gens);
  bool first = true;
  while (!lx.eof()) {
    bool neg = false;
    if (first) {
      neg = lx.accept('-');
      first = false;
    } else if (lx.accept('+')) {
      neg = false;
    } else if (lx.accept('-')) {
      neg = true;
    } else {
      throw Error(Errc::invalid_config, "parse error: expected '+' or '-' between terms");
    }

    Scalar coef(1);
    Word word;
    bool any_factor = false;
    for (;;) {
      lx.skip_ws();
      char c = lx.peek();
      if (isdigit((unsigned char)c)) {
        Rat r = parse_rational(lx);
        coef *= Scalar(r);
        any_factor = true;
      } else if (c == '(') {
        lx.expect('(');
        LaurentQ num = parse_laurent_body(lx);
        lx.expect(')');
        if (lx.accept('/')) {
          lx.expect('(');
          LaurentQ den = parse_laurent_body(lx);
          lx.expect(')');
          coef *= Scalar::fraction(num, den);
        } else {
          coef *= Scalar::laurent(num);
        }
        any_factor = true;
      } else if (isalpha((unsigned char)c) || c == '_') {
        std::string name;
        lx.ident(name);
        if (name == "q") {
          int e = lx.accept('^') ? parse_int(lx) : 1;
          coef *= Scalar::q(e);
        } else {
          // generator chain g1.g2.g3
          word.push_back(gens->id(name));
          while (lx.accept('.')) {
            if (!lx.ident(name)) throw Error(Errc::invalid_config, "parse error: expected generator after '.'");
            word.push_back(gens->id(name));
          }
        }
        any_factor = true;
      } else {
        break;
      }
      if (!lx.accept('*')) break;
    }
    if (!any_factor) throw Error(Errc::invalid_config, "parse error: empty term");
    result.add_term(word, neg ? -coef : coef);
  }
  return result;
}

}  // namespace qhom
