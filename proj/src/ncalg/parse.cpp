#include <cctype>
#include <map>
#include <sstream>

#include "docalc/ncalg/render.hpp"

namespace docalc::ncalg {
namespace {

bool negative(const GaussRational& c) { return c.re.sign() < 0 || (c.re.is_zero() && c.im.sign() < 0); }

// Coefficient as a multiplicative prefix; empty for 1.
std::string coeff_factor(const GaussRational& c) {
  if (c == GaussRational(1)) return "";
  if (c.is_real()) return c.re.is_integer() ? c.re.str() : "(" + c.re.str() + ")";
  if (c.re.is_zero()) {
    if (c.im == Rational(1)) return "i";
    return c.im.is_integer() ? c.im.str() + "i" : "(" + c.im.str() + ")i";
  }
  return "(" + c.str() + ")";
}

std::string scalar_text(const GaussRational& c) {
  if (c.is_real()) return c.re.str();
  if (c.re.is_zero()) return coeff_factor(c);
  return "(" + c.str() + ")";
}

std::string jtext(std::uint32_t j) {
  if (j == 0) return "";
  return j == 1 ? "J" : "J^" + std::to_string(j);
}

std::string word_text(const std::vector<Atom>& atoms) {
  std::string s;
  for (const auto& a : atoms) s += render_atom(a);
  return s;
}

struct Piece {
  bool neg;
  std::string body;
};

std::string join(const std::vector<Piece>& pieces) {
  std::string out;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (k == 0) {
      out += pieces[k].neg ? "-" : "";
    } else {
      out += pieces[k].neg ? " - " : " + ";
    }
    out += pieces[k].body;
  }
  return out;
}

// Terms with the J prefix already stripped (or absorbed by `jprefix`).
Piece term_piece(GaussRational c, const std::vector<Atom>& atoms, std::uint32_t jprefix) {
  bool neg = negative(c);
  if (neg) c = -c;
  if (atoms.empty() && jprefix == 0) return {neg, scalar_text(c)};
  return {neg, coeff_factor(c) + jtext(jprefix) + word_text(atoms)};
}

}  // namespace

std::string render_atom(const Atom& a) {
  std::string s(family_name(a.family));
  for (std::size_t k = 0; k < a.index_count; ++k) s += static_cast<char>('0' + a.indices[k]);
  s.append(a.primes, '\'');
  return s;
}

std::string render(const Expression& e) {
  if (e.is_zero()) return "0";
  std::map<std::uint32_t, std::vector<const Term*>> groups;
  for (const auto& t : e.terms()) groups[t.word.jpower].push_back(&t);

  std::vector<Piece> pieces;
  for (const auto& [j, terms] : groups) {
    if (j == 0 || terms.size() == 1) {
      for (const Term* t : terms) pieces.push_back(term_piece(t->coeff, t->word.atoms, j));
      continue;
    }
    std::vector<Piece> inner;
    for (const Term* t : terms) inner.push_back(term_piece(t->coeff, t->word.atoms, 0));
    pieces.push_back({false, jtext(j) + "(" + join(inner) + ")"});
  }
  return join(pieces);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expression run() {
    skip();
    if (pos_ >= s_.size()) throw error(ParseError::Kind::Syntax, "empty expression");
    Expression e = expr();
    skip();
    if (pos_ != s_.size()) throw error(ParseError::Kind::Syntax, std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  ParseError error(ParseError::Kind k, const std::string& msg) const { return ParseError(k, pos_, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw error(ParseError::Kind::Syntax, std::string("expected '") + c + "'");
    ++pos_;
  }

  Expression expr() {
    Expression acc;
    bool neg = false;
    if (peek('-')) {
      ++pos_;
      neg = true;
    } else if (peek('+')) {
      ++pos_;
    }
    acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(' || c == '[';
  }

  Expression term() {
    Expression acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * power();
      } else if (starts_primary()) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }

  Expression power() {
    Expression base = postfix();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw error(ParseError::Kind::Syntax, "expected exponent");
    unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
    if (e > 64) throw error(ParseError::Kind::Syntax, "exponent too large");
    return base.pow(e);
  }

  Expression postfix() {
    Expression e = primary();
    std::uint32_t primes = 0;
    while (pos_ < s_.size() && s_[pos_] == '\'') {
      ++pos_;
      ++primes;
    }
    return primes ? prime_shift(e, primes) : e;
  }

  std::int64_t integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    try {
      return std::stoll(std::string(s_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      pos_ = start;
      throw error(ParseError::Kind::Syntax, "integer literal out of range");
    }
  }

  Expression primary() {
    skip();
    if (pos_ >= s_.size()) throw error(ParseError::Kind::Syntax, "unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t n = integer();
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        std::int64_t d = integer();
        if (d == 0) throw error(ParseError::Kind::Syntax, "zero denominator");
        return Expression(GaussRational(Rational(n, d)));
      }
      return Expression(GaussRational(n));
    }
    if (c == '(') {
      ++pos_;
      Expression e = expr();
      expect(')');
      return e;
    }
    if (c == '[') {
      ++pos_;
      Expression a = expr();
      expect(',');
      Expression b = expr();
      expect(']');
      return free_commutator(a, b);
    }
    if ((c == 'D' || c == 'd') && pos_ + 1 < s_.size() && s_[pos_ + 1] == '(') {
      pos_ += 2;
      Expression e = expr();
      expect(')');
      if (c == 'D') return free_commutator(e, Expression::j());
      return prime_shift(e) - e;
    }
    if (c == 'i') {
      ++pos_;
      return Expression(GaussRational::i());
    }
    if (c == 'J') {
      ++pos_;
      return Expression::j();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return Expression(atom());
    throw error(ParseError::Kind::Syntax, std::string("unexpected '") + c + "'");
  }

  Atom atom() {
    std::optional<Family> fam;
    for (std::size_t len : {2u, 1u}) {
      if (pos_ + len > s_.size()) continue;
      fam = family_from_name(s_.substr(pos_, len));
      if (fam) {
        pos_ += len;
        break;
      }
    }
    if (!fam) throw error(ParseError::Kind::UnknownFamily, std::string("unknown atom family '") + s_[pos_] + "'");
    Atom a;
    a.family = *fam;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (s_[pos_] == '0') throw error(ParseError::Kind::MalformedIndex, "index 0 is not allowed");
      if (a.index_count == Atom::kMaxIndices) throw error(ParseError::Kind::MalformedIndex, "too many indices");
      a.indices[a.index_count++] = static_cast<std::uint8_t>(s_[pos_] - '0');
      ++pos_;
    }
    while (pos_ < s_.size() && s_[pos_] == '\'') {
      ++pos_;
      if (!a.constant()) ++a.primes;
    }
    return a;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse(std::string_view text) { return Parser(text).run(); }

}  // namespace docalc::ncalg
