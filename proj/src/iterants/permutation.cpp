#include "docalc/iterants/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace docalc::iterants {

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("matrix dimension must be positive");
  if (n > cap) {
    throw PermutationCapExceeded("n = " + std::to_string(n) + " exceeds the permutation cap " + std::to_string(cap));
  }
}

Rational factorial(std::size_t n) {
  Rational f(1);
  for (std::size_t k = 2; k <= n; ++k) f *= Rational(static_cast<std::int64_t>(k));
  return f;
}

template <class F>
void for_each_permutation(std::size_t n, F&& f) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    f(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

DenseMatrix identity_matrix(std::size_t n) {
  DenseMatrix m(n, std::vector<GaussRational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = GaussRational(1);
  return m;
}

DenseMatrix multiply(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.empty() || x[0].size() != y.size()) throw std::invalid_argument("matrix shapes do not compose");
  DenseMatrix out(x.size(), std::vector<GaussRational>(y[0].size()));
  for (std::size_t r = 0; r < x.size(); ++r) {
    for (std::size_t k = 0; k < y.size(); ++k) {
      if (x[r][k].is_zero()) continue;
      for (std::size_t c = 0; c < y[0].size(); ++c) out[r][c] += x[r][k] * y[k][c];
    }
  }
  return out;
}

DenseMatrix diagonal(const std::vector<GaussRational>& v) {
  DenseMatrix m(v.size(), std::vector<GaussRational>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) m[i][i] = v[i];
  return m;
}

bool is_permutation(const Permutation& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

DenseMatrix permutation_matrix(const Permutation& perm) {
  if (!is_permutation(perm)) throw std::invalid_argument("not a permutation");
  DenseMatrix m(perm.size(), std::vector<GaussRational>(perm.size()));
  for (std::size_t i = 0; i < perm.size(); ++i) m[i][perm[i]] = GaussRational(1);
  return m;
}

std::vector<GaussRational> permute(const std::vector<GaussRational>& v, const Permutation& perm) {
  if (v.size() != perm.size() || !is_permutation(perm)) throw std::invalid_argument("not a permutation of v");
  std::vector<GaussRational> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[perm[i]];
  return out;
}

std::vector<PermTerm> perm_decompose(const DenseMatrix& m, std::size_t cap) {
  const std::size_t n = m.size();
  check_cap(n, cap);
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("matrix must be square");
  }
  std::vector<PermTerm> terms;
  for_each_permutation(n, [&](const Permutation& p) {
    PermTerm t{p, std::vector<GaussRational>(n)};
    for (std::size_t i = 0; i < n; ++i) t.diag[i] = m[i][p[i]];
    terms.push_back(std::move(t));
  });
  return terms;
}

DenseMatrix perm_reconstruct(const std::vector<PermTerm>& terms, std::size_t n) {
  DenseMatrix sum(n, std::vector<GaussRational>(n));
  for (const auto& t : terms) {
    // Δ(v)[π] has the single entry v_i at (i, π_i) in row i.
    for (std::size_t i = 0; i < n; ++i) sum[i][t.perm[i]] += t.diag[i];
  }
  const GaussRational scale(Rational(1) / factorial(n - 1));
  for (auto& row : sum) {
    for (auto& v : row) v *= scale;
  }
  return sum;
}

std::vector<std::vector<std::uint64_t>> perm_coverage(std::size_t n, std::size_t cap) {
  check_cap(n, cap);
  std::vector<std::vector<std::uint64_t>> count(n, std::vector<std::uint64_t>(n, 0));
  for_each_permutation(n, [&](const Permutation& p) {
    for (std::size_t i = 0; i < n; ++i) ++count[i][p[i]];
  });
  return count;
}

ConjugationReport perm_conjugation_check(const std::vector<GaussRational>& v, const Permutation& perm) {
  ConjugationReport r;
  const DenseMatrix p = permutation_matrix(perm);
  r.lhs = multiply(p, diagonal(v));
  r.rhs = multiply(diagonal(permute(v, perm)), p);
  r.holds = r.lhs == r.rhs;
  return r;
}

}  // namespace docalc::iterants
