#include "docalc/ncalg/expression.hpp"

#include <algorithm>
#include <stdexcept>

#include "docalc/ncalg/render.hpp"

namespace docalc::ncalg {
namespace {

constexpr std::array<std::string_view, kFamilyCount> kNames = {
    "c", "k", "X", "Y", "Z", "g", "Ng", "Dg", "A", "dA", "E", "F", "P", "V", "W"};

}  // namespace

std::string_view family_name(Family f) { return kNames[static_cast<std::size_t>(f)]; }

std::optional<Family> family_from_name(std::string_view name) {
  for (std::size_t k = 0; k < kNames.size(); ++k) {
    if (kNames[k] == name) return static_cast<Family>(k);
  }
  return std::nullopt;
}

bool is_constant(Family f) { return f == Family::Const || f == Family::K; }

Atom::Atom(Family f, std::initializer_list<int> idx, std::uint32_t p) : family(f), primes(p) {
  if (idx.size() > kMaxIndices) throw std::invalid_argument("atom has too many indices");
  for (int v : idx) {
    if (v < 1 || v > 9) throw std::invalid_argument("atom index must be in 1..9");
    indices[index_count++] = static_cast<std::uint8_t>(v);
  }
  if (constant()) primes = 0;
}

Atom Atom::base() const {
  Atom a = *this;
  a.primes = 0;
  return a;
}

Atom Atom::primed(std::uint32_t times) const {
  Atom a = *this;
  if (!constant()) a.primes += times;
  return a;
}

bool Atom::same_series(const Atom& o) const {
  return family == o.family && index_count == o.index_count && indices == o.indices;
}

std::string Atom::str() const { return render_atom(*this); }

std::strong_ordering canonical_compare(const Atom& a, const Atom& b) {
  if (auto c = a.family <=> b.family; c != 0) return c;
  if (auto c = a.index_count <=> b.index_count; c != 0) return c;
  for (std::size_t k = 0; k < a.index_count; ++k) {
    if (auto c = a.indices[k] <=> b.indices[k]; c != 0) return c;
  }
  return b.primes <=> a.primes;
}

std::strong_ordering canonical_compare(const Word& a, const Word& b) {
  if (auto c = a.jpower <=> b.jpower; c != 0) return c;
  if (auto c = a.atoms.size() <=> b.atoms.size(); c != 0) return c;
  for (std::size_t k = 0; k < a.atoms.size(); ++k) {
    if (auto c = canonical_compare(a.atoms[k], b.atoms[k]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Word prime_word(const Word& w, std::uint32_t times) {
  Word out = w;
  for (auto& a : out.atoms) a = a.primed(times);
  return out;
}

Word multiply(const Word& a, const Word& b) {
  Word out;
  out.jpower = a.jpower + b.jpower;
  out.atoms.reserve(a.atoms.size() + b.atoms.size());
  for (const auto& atom : a.atoms) out.atoms.push_back(atom.primed(b.jpower));
  out.atoms.insert(out.atoms.end(), b.atoms.begin(), b.atoms.end());
  return out;
}

Expression::Expression(GaussRational scalar) {
  if (!scalar.is_zero()) terms_.push_back({scalar, Word{}});
}

Expression::Expression(const Atom& atom) { terms_.push_back({GaussRational(1), Word{0, {atom}}}); }

Expression Expression::j(std::uint32_t power) {
  Expression e;
  e.terms_.push_back({GaussRational(1), Word{power, {}}});
  return e;
}

Expression Expression::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return canonical_compare(x.word, y.word) < 0; });
  Expression e;
  for (auto& t : terms) {
    if (!e.terms_.empty() && e.terms_.back().word == t.word) {
      e.terms_.back().coeff += t.coeff;
    } else {
      if (!e.terms_.empty() && e.terms_.back().coeff.is_zero()) e.terms_.pop_back();
      e.terms_.push_back(std::move(t));
    }
  }
  if (!e.terms_.empty() && e.terms_.back().coeff.is_zero()) e.terms_.pop_back();
  return e;
}

GaussRational Expression::coefficient(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w, [](const Term& t, const Word& key) {
    return canonical_compare(t.word, key) < 0;
  });
  if (it != terms_.end() && it->word == w) return it->coeff;
  return {};
}

Expression Expression::operator-() const {
  Expression e = *this;
  for (auto& t : e.terms_) t.coeff = -t.coeff;
  return e;
}

Expression& Expression::operator+=(const Expression& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && canonical_compare(a->word, b->word) < 0)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || canonical_compare(b->word, a->word) < 0) {
      merged.push_back(*b++);
    } else {
      GaussRational c = a->coeff + b->coeff;
      if (!c.is_zero()) merged.push_back({c, std::move(a->word)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Expression& Expression::operator-=(const Expression& o) { return *this += -o; }

Expression& Expression::operator*=(const GaussRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

Expression operator*(const Expression& a, const Expression& b) {
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) out.push_back({x.coeff * y.coeff, multiply(x.word, y.word)});
  }
  return Expression::from_terms(std::move(out));
}

Expression Expression::pow(unsigned e) const {
  Expression out(1);
  for (unsigned k = 0; k < e; ++k) out = out * *this;
  return out;
}

Expression prime_shift(const Expression& e, std::uint32_t times) {
  std::vector<Term> out;
  out.reserve(e.size());
  for (const auto& t : e.terms()) out.push_back({t.coeff, prime_word(t.word, times)});
  return Expression::from_terms(std::move(out));
}

Expression free_commutator(const Expression& a, const Expression& b) { return a * b - b * a; }

}  // namespace docalc::ncalg
