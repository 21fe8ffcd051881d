#pragma once

#include <cstdint>
#include <map>

#include "cyclespec/partition.hpp"
#include "cyclespec/rational.hpp"

namespace cyclespec {

/// Sparse symmetric function of degree n over the monomial basis M_lambda.
/// Invariant: every key is a partition of n; zero coefficients are absent.
/// The number of variables is fixed to n, which truncates nothing in degree n.
struct MonomialExpansion {
  int n = 0;
  std::map<Partition, Rat> coeffs;
};

/// Same, over the Schur basis S_mu.
struct SchurExpansion {
  int n = 0;
  std::map<Partition, Rat> coeffs;
};

/// Adds v to m[key], erasing the entry if the sum is zero.
void add_coeff(std::map<Partition, Rat>& m, const Partition& key, const Rat& v);

/// Kostka number: semistandard Young tableaux of shape mu and content lambda,
/// counted by horizontal-strip peeling with memoization on
/// (shape, remaining content).
std::int64_t kostka(const Partition& mu, const Partition& lambda);

/// Exact change of basis via S_mu = sum_lambda K_{mu lambda} M_lambda.
MonomialExpansion schur_to_monomial(const SchurExpansion& e);

/// Inverse change of basis; the Kostka matrix is triangular with unit
/// diagonal in enumeration order, so this is a back-substitution.
SchurExpansion monomial_to_schur(const MonomialExpansion& e);

/// Multiplication by the complete homogeneous slice H_m: sum of S_{lambda'}
/// over all ways of adding a horizontal m-strip to lambda.
SchurExpansion pieri_multiply(const Partition& lambda, int m);

/// Multiplication by H_m carried out directly on monomial coefficients:
/// the coefficient of M_nu in f*H_m is the sum of f's coefficients over all
/// componentwise sub-vectors of nu of total size f.n.  Independent route used
/// to cross-check pieri_multiply.
MonomialExpansion monomial_multiply_by_h(const MonomialExpansion& f, int m);

/// Characteristic of the k-cycle counting class function: coefficient
/// #{i : lambda_i >= k} / k on M_lambda.
MonomialExpansion ch_alpha_k(int n, int k);

/// Schur expansion of (sum_i x_i^k) H_{n-k}, derived purely by Pieri
/// multiplication and telescoping cancellation:
///   sum_{i=0}^{k-1} (-1)^i S_{[k-i,1^i]} * H_{n-k}.
/// Equals k * ch_alpha_k(n,k) in the Schur basis; computed without any
/// closed-form coefficient table.
SchurExpansion derive_a_rho_via_pieri(int n, int k);

}  // namespace cyclespec
