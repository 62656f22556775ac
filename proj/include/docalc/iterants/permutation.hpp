#pragma once

#include <stdexcept>
#include <vector>

#include "docalc/rational.hpp"

namespace docalc::iterants {

using DenseMatrix = std::vector<std::vector<GaussRational>>;
/// 0-based: perm[i] = π_i.
using Permutation = std::vector<std::size_t>;

inline constexpr std::size_t kPermutationCap = 6;

struct PermutationCapExceeded : std::length_error {
  using std::length_error::length_error;
};

DenseMatrix identity_matrix(std::size_t n);
DenseMatrix multiply(const DenseMatrix& x, const DenseMatrix& y);
/// Δ(v).
DenseMatrix diagonal(const std::vector<GaussRational>& v);
/// [π]: row i is row π_i of the identity.
DenseMatrix permutation_matrix(const Permutation& perm);
/// v^π = (v_{π_1}, ..., v_{π_n}).
std::vector<GaussRational> permute(const std::vector<GaussRational>& v, const Permutation& perm);
bool is_permutation(const Permutation& perm);

struct PermTerm {
  Permutation perm;
  std::vector<GaussRational> diag;  // v(M, π) = (m_{1π_1}, ..., m_{nπ_n})
};

/// All n! terms Δ[M]_π [π], in lexicographic order of π.
std::vector<PermTerm> perm_decompose(const DenseMatrix& m, std::size_t cap = kPermutationCap);
/// (1/(n−1)!) Σ Δ(diag)[π].
DenseMatrix perm_reconstruct(const std::vector<PermTerm>& terms, std::size_t n);
/// How many permutations cover each entry (i, j); (n−1)! everywhere.
std::vector<std::vector<std::uint64_t>> perm_coverage(std::size_t n, std::size_t cap = kPermutationCap);

struct ConjugationReport {
  DenseMatrix lhs;  // [π]Δ(v)
  DenseMatrix rhs;  // Δ(v^π)[π]
  bool holds = false;
};

ConjugationReport perm_conjugation_check(const std::vector<GaussRational>& v, const Permutation& perm);

}  // namespace docalc::iterants
