#include "docalc/ncalg/table.hpp"

#include <random>
#include <sstream>

namespace docalc::ncalg {
namespace {

std::uint32_t pack(const Atom& a) {
  std::uint32_t k = static_cast<std::uint32_t>(a.family);
  k = (k << 2) | a.index_count;
  for (auto idx : a.indices) k = (k << 4) | idx;
  return k;
}

}  // namespace

CommutationTable::CommutationTable(std::string name) : name_(std::move(name)) {
  weight_.fill(1);
  for (std::size_t f = 0; f < kFamilyCount; ++f) rank_[f] = static_cast<int>(f);
  weight_[static_cast<std::size_t>(Family::Const)] = 0;
  weight_[static_cast<std::size_t>(Family::K)] = 0;
}

std::uint64_t CommutationTable::key(const Atom& a, const Atom& b) {
  return (static_cast<std::uint64_t>(pack(a)) << 32) | pack(b);
}

void CommutationTable::set(const Atom& a, const Atom& b, RuleKind kind, Expression value) {
  if (a.primes != 0 || b.primes != 0) throw std::invalid_argument("rules are declared on unprimed atoms");
  if (a == b) throw std::invalid_argument("rule on identical atoms");
  if (kind == RuleKind::Zero) value = Expression{};
  if (kind == RuleKind::Free) value = Expression{};
  Rule fwd{kind, value};
  Rule rev{kind, -value};
  rules_[key(a, b)] = Entry{a, b, std::move(fwd)};
  rules_[key(b, a)] = Entry{b, a, std::move(rev)};
}

unsigned CommutationTable::weight(const Word& w) const {
  unsigned total = 0;
  for (const auto& a : w.atoms) total += weight(a.family);
  return total;
}

int CommutationTable::order(const Atom& a, const Atom& b) const {
  int ra = rank_[static_cast<std::size_t>(a.family)];
  int rb = rank_[static_cast<std::size_t>(b.family)];
  if (ra != rb) return ra < rb ? -1 : 1;
  auto c = canonical_compare(a, b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Rule CommutationTable::lookup(const Atom& a, const Atom& b) const {
  if (a == b) return {RuleKind::Zero, {}};
  if (a.constant() || b.constant() || commutative_) return {RuleKind::Zero, {}};
  if (a.primes != b.primes) {
    if (commuting_series_ && a.same_series(b)) return {RuleKind::Zero, {}};
    return {RuleKind::Free, {}};
  }
  auto it = rules_.find(key(a, b));
  if (it == rules_.end()) return {RuleKind::Free, {}};
  const Rule& r = it->second.rule;
  if (a.primes == 0 || r.kind == RuleKind::Zero || r.kind == RuleKind::Free) return r;
  return {r.kind, prime_shift(r.value, a.primes)};
}

std::optional<Expression> CommutationTable::swap_correction(const Atom& u, const Atom& v) const {
  Rule r = lookup(u, v);
  if (r.kind == RuleKind::Free) return std::nullopt;
  return std::move(r.value);
}

void CommutationTable::validate() const {
  for (const auto& [k, entry] : rules_) {
    const Rule& r = entry.rule;
    if (r.kind == RuleKind::Free || r.kind == RuleKind::Zero) continue;
    unsigned bound = weight(entry.a.family) + weight(entry.b.family);
    for (const auto& t : r.value.terms()) {
      if (weight(t.word) >= bound) {
        std::ostringstream os;
        os << "table '" << name_ << "': rule [" << entry.a.str() << "," << entry.b.str()
           << "] has a correction term that does not decrease the weight measure";
        throw std::logic_error(os.str());
      }
    }
  }
}

Expression normalize(const Expression& e, const CommutationTable& t, const NormalizeOptions& opts) {
  std::vector<Term> done;
  std::vector<Term> work(e.terms().rbegin(), e.terms().rend());
  std::size_t steps = 0;
  std::mt19937_64 rng(opts.shuffle_seed.value_or(0));
  std::vector<std::size_t> candidates;

  while (!work.empty()) {
    Term term = std::move(work.back());
    work.pop_back();
    if (term.coeff.is_zero()) continue;
    const auto& atoms = term.word.atoms;

    std::optional<std::size_t> pick;
    std::optional<Expression> correction;
    if (opts.shuffle_seed) {
      candidates.clear();
      for (std::size_t k = 0; k + 1 < atoms.size(); ++k) {
        if (t.order(atoms[k], atoms[k + 1]) > 0 && t.lookup(atoms[k], atoms[k + 1]).kind != RuleKind::Free) {
          candidates.push_back(k);
        }
      }
      if (!candidates.empty()) {
        pick = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
        correction = t.swap_correction(atoms[*pick], atoms[*pick + 1]);
      }
    } else {
      for (std::size_t k = 0; k + 1 < atoms.size(); ++k) {
        if (t.order(atoms[k], atoms[k + 1]) <= 0) continue;
        correction = t.swap_correction(atoms[k], atoms[k + 1]);
        if (correction) {
          pick = k;
          break;
        }
      }
    }

    if (!pick) {
      done.push_back(std::move(term));
      continue;
    }
    if (++steps > opts.step_cap) {
      throw RewriteBudgetExceeded("normalize: rewrite budget of " + std::to_string(opts.step_cap) +
                                  " steps exceeded under table '" + t.name() + "'");
    }

    std::size_t k = *pick;
    // u v -> v u + [u, v]
    if (!correction->is_zero()) {
      Word prefix{term.word.jpower, {atoms.begin(), atoms.begin() + static_cast<std::ptrdiff_t>(k)}};
      Word suffix{0, {atoms.begin() + static_cast<std::ptrdiff_t>(k) + 2, atoms.end()}};
      for (const auto& ct : correction->terms()) {
        work.push_back({term.coeff * ct.coeff, multiply(multiply(prefix, ct.word), suffix)});
      }
    }
    std::swap(term.word.atoms[k], term.word.atoms[k + 1]);
    work.push_back(std::move(term));
  }
  return Expression::from_terms(std::move(done));
}

Expression commutator(const Expression& a, const Expression& b, const CommutationTable& t,
                      const NormalizeOptions& opts) {
  return normalize(free_commutator(a, b), t, opts);
}

bool equals(const Expression& a, const Expression& b, const CommutationTable& t) {
  return normalize(a - b, t).is_zero();
}

}  // namespace docalc::ncalg
