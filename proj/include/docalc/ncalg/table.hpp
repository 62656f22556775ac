#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "docalc/ncalg/expression.hpp"

namespace docalc::ncalg {

enum class RuleKind { Zero, KroneckerDelta, Named, Free };

/// Outcome of the commutator [a, b] for an ordered atom pair.
struct Rule {
  RuleKind kind = RuleKind::Free;
  Expression value;  // [a, b]; unused for Free
};

/// Commutation relations between generators, plus the normal ordering
/// they are applied against. A rule stated for unprimed atoms applies to
/// every pair of atoms shifted by the same number of primes.
class CommutationTable {
 public:
  explicit CommutationTable(std::string name = "free");

  static CommutationTable free() { return CommutationTable("free"); }

  const std::string& name() const { return name_; }

  /// Declare [a, b] = value. The rule for [b, a] is the negation.
  void set(const Atom& a, const Atom& b, RuleKind kind, Expression value = {});
  void set_zero(const Atom& a, const Atom& b) { set(a, b, RuleKind::Zero); }
  void set_named(const Atom& a, const Atom& b, Expression value) {
    set(a, b, RuleKind::Named, std::move(value));
  }
  void set_free(const Atom& a, const Atom& b) { set(a, b, RuleKind::Free); }

  /// Atoms of the same series (same family and indices) commute across times.
  void set_commuting_series(bool on) { commuting_series_ = on; }
  bool commuting_series() const { return commuting_series_; }

  /// Every pair of atoms commutes (classical scalars).
  void set_commutative(bool on) { commutative_ = on; }

  void set_weight(Family f, unsigned w) { weight_[static_cast<std::size_t>(f)] = w; }
  unsigned weight(Family f) const { return weight_[static_cast<std::size_t>(f)]; }
  unsigned weight(const Word& w) const;

  void set_rank(Family f, int r) { rank_[static_cast<std::size_t>(f)] = r; }

  /// Normal-ordering comparison: negative when `a` belongs left of `b`.
  int order(const Atom& a, const Atom& b) const;

  /// The rule governing [a, b] for these concrete atoms.
  Rule lookup(const Atom& a, const Atom& b) const;

  /// [u, v] when the pair may be swapped, nullopt when it is Free.
  std::optional<Expression> swap_correction(const Atom& u, const Atom& v) const;

  /// Checks the termination measure: each correction term weighs strictly
  /// less than the swapped pair. Throws std::logic_error on violation.
  void validate() const;

  std::size_t rule_count() const { return rules_.size(); }

 private:
  static std::uint64_t key(const Atom& a, const Atom& b);

  std::string name_;
  struct Entry {
    Atom a;
    Atom b;
    Rule rule;
  };
  std::unordered_map<std::uint64_t, Entry> rules_;
  bool commuting_series_ = false;
  bool commutative_ = false;
  std::array<unsigned, kFamilyCount> weight_{};
  std::array<int, kFamilyCount> rank_{};
};

struct NormalizeOptions {
  std::size_t step_cap = 2'000'000;
  /// When set, reducible pairs are chosen pseudo-randomly rather than
  /// leftmost-first. Only used to exercise confluence.
  std::optional<std::uint64_t> shuffle_seed;
};

struct RewriteBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Expression normalize(const Expression& e, const CommutationTable& t, const NormalizeOptions& opts = {});
Expression commutator(const Expression& a, const Expression& b, const CommutationTable& t,
                      const NormalizeOptions& opts = {});
bool equals(const Expression& a, const Expression& b, const CommutationTable& t);

}  // namespace docalc::ncalg
