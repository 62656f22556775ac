#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "docalc/rational.hpp"

namespace docalc::ncalg {

// Declaration order is also the default normal-ordering rank.
enum class Family : std::uint8_t {
  Const,  // c: central scalar constant, fixed by priming
  K,      // k: central scalar constant (commutator constant)
  X,      // coordinate
  Y,      // generic non-commuting symbol
  Z,      // generic non-commuting symbol
  G,      // g_ij metric
  NablaG, // ∇_i g_jk
  DotG,   // D g_ij
  A,      // gauge potential
  DA,     // ∂_i A_j
  E,      // electric field component
  F,      // field strength F_ij
  P,      // momentum
  V,      // velocity, DX
  W,      // acceleration, D²X
};

inline constexpr std::size_t kFamilyCount = 15;

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
bool is_constant(Family f);

/// A non-commuting generator: family, up to three small indices, and the
/// number of time shifts applied to it.
struct Atom {
  static constexpr std::size_t kMaxIndices = 3;

  Family family = Family::Y;
  std::uint8_t index_count = 0;
  std::array<std::uint8_t, kMaxIndices> indices{};
  std::uint32_t primes = 0;

  Atom() = default;
  Atom(Family f, std::initializer_list<int> idx = {}, std::uint32_t p = 0);

  std::span<const std::uint8_t> index_span() const { return {indices.data(), index_count}; }
  bool constant() const { return is_constant(family); }
  /// Same generator with the prime count cleared.
  Atom base() const;
  Atom primed(std::uint32_t times = 1) const;
  /// Family and indices agree (prime counts may differ).
  bool same_series(const Atom& o) const;

  friend bool operator==(const Atom&, const Atom&) = default;
  std::string str() const;
};

/// Canonical total order: family, indices, then higher prime counts first.
std::strong_ordering canonical_compare(const Atom& a, const Atom& b);

/// J^jpower followed by an ordered product of atoms.
struct Word {
  std::uint32_t jpower = 0;
  std::vector<Atom> atoms;

  bool is_unit() const { return jpower == 0 && atoms.empty(); }
  friend bool operator==(const Word&, const Word&) = default;
};

std::strong_ordering canonical_compare(const Word& a, const Word& b);

struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return canonical_compare(a, b) < 0; }
};

/// Product of two J-normal words: J^a u · J^b v = J^(a+b) (u shifted b times) v.
Word multiply(const Word& a, const Word& b);
Word prime_word(const Word& w, std::uint32_t times = 1);

struct Term {
  GaussRational coeff;
  Word word;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sum of terms over distinct words, sorted canonically, zero coefficients
/// dropped. J is always collected on the left of every word; commutation
/// rules beyond that are applied by normalize().
class Expression {
 public:
  Expression() = default;
  Expression(GaussRational scalar);  // NOLINT(implicit)
  Expression(std::int64_t scalar) : Expression(GaussRational(scalar)) {}  // NOLINT(implicit)
  Expression(const Atom& atom);  // NOLINT(implicit)

  static Expression j(std::uint32_t power = 1);
  static Expression from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of `w`, zero if absent.
  GaussRational coefficient(const Word& w) const;

  Expression operator-() const;
  Expression& operator+=(const Expression& o);
  Expression& operator-=(const Expression& o);
  Expression& operator*=(const GaussRational& s);

  friend Expression operator+(Expression a, const Expression& b) { return a += b; }
  friend Expression operator-(Expression a, const Expression& b) { return a -= b; }
  friend Expression operator*(const Expression& a, const Expression& b);
  friend Expression operator*(Expression a, const GaussRational& s) { return a *= s; }
  friend Expression operator*(const GaussRational& s, Expression a) { return a *= s; }
  friend bool operator==(const Expression&, const Expression&) = default;

  /// Integer power by repeated multiplication (free product, no table).
  Expression pow(unsigned e) const;

 private:
  std::vector<Term> terms_;
};

/// Shift every non-constant atom forward one time step; J is fixed.
Expression prime_shift(const Expression& e, std::uint32_t times = 1);

/// Raw ab - ba without applying any commutation table.
Expression free_commutator(const Expression& a, const Expression& b);

}  // namespace docalc::ncalg
