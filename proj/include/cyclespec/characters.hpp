#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cyclespec/partition.hpp"
#include "cyclespec/rational.hpp"

namespace cyclespec {

/// Exact rational class function on S_n, stored by cycle type with one entry
/// per conjugacy class (dense).
struct ClassFunction {
  int n = 0;
  std::map<Partition, Rat> values;

  const Rat& at(const Partition& cycle_type) const {
    auto it = values.find(cycle_type);
    if (it == values.end()) throw DomainError("unknown cycle type");
    return it->second;
  }
};

/// Number of k-cycles, as a class function: value on mu = multiplicity of
/// part k in mu.
ClassFunction alpha_k(int n, int k);

/// Constant class function.
ClassFunction constant_class_function(int n, const Rat& v);

/// The irreducible character chi_rho as a class function.
ClassFunction irreducible_character(const Partition& rho);

/// Character value chi_rho(mu) by the border-strip (Murnaghan-Nakayama)
/// recursion; strips are removed via first-column hook lengths (beta
/// numbers), sign = (-1)^height.
std::int64_t mn_character(const Partition& rho, const Partition& mu);

/// Full character table of S_n, rows and columns in enumeration order.
/// Cached after first computation; capped at n = 8.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> shapes;   // irreducible labels, enumeration order
  std::vector<Partition> classes;  // cycle types, enumeration order
  std::vector<std::vector<std::int64_t>> chi;  // chi[shape][class]
};
const CharacterTable& character_table(int n);

/// Standard inner product (1/n!) sum_mu class_size(mu) f(mu) g(mu).
Rat inner_product(const ClassFunction& f, const ClassFunction& g);

/// Average of f over the Young subgroup T_lambda = S_{lambda_1} x ... ,
/// equal to <f, psi_lambda>.  Computed by convolving the per-factor
/// cycle-type distributions, never by iterating group elements.
Rat psi_inner_product(const ClassFunction& f, const Partition& lambda);

/// Coefficients <f, chi_rho> of f in the irreducible basis; zero entries
/// dropped.  Requires the character table, so n <= 8.
std::map<Partition, Rat> decompose(const ClassFunction& f);

/// Rebuild sum_rho c_rho chi_rho as a class function (exact).
ClassFunction reconstruct(int n, const std::map<Partition, Rat>& coeffs);

/// Closed-form coefficient table of k * alpha_k in the irreducible basis:
///   [n] -> +1,
///   [k-i-1, n-k+1, 1^i] -> (-1)^{i+1}   for i in {0, ..., 2k-n-2},
///   [n-k, k-i, 1^i]     -> (-1)^i       for i in {max(2k-n,0), ..., k-1},
/// everything else 0.  Empty ranges contribute nothing.
std::map<Partition, int> a_rho_closed_form(int n, int k);

}  // namespace cyclespec
