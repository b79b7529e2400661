#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permspec/restriction.hpp"

namespace permspec {

using BigInt = boost::multiprecision::cpp_int;
/// Truncated power series, coefficient of z^n at index n.
using Series = std::vector<BigInt>;

/// Generating-function system of a specification: for each equation,
/// F = [has_one] z + sum over terms of the product of child series.
struct GFSystem {
  struct Equation {
    std::string key;
    bool has_one = false;
    /// each term is the list of equation indices of its children
    std::vector<std::vector<std::size_t>> terms;
  };
  std::vector<Equation> equations;
};

/// Throws DomainError when an equation is not flagged disjoint (counting an
/// ambiguous union would overcount) and InvalidInput when a child has no equation.
GFSystem to_gf_system(const EquationSystem &spec);

/// Coefficient tables through order N, computed size by size. For every term
/// the suffix products S_j = F_j * F_{j+1} * ... are kept for the sampler.
struct CountTable {
  std::size_t order = 0;
  GFSystem gf;
  /// series[e][n] = number of objects of size n in equation e
  std::vector<Series> series;
  /// suffix[e][t][j] = product series of children j.. of term t of equation e
  std::vector<std::vector<std::vector<Series>>> suffix;

  const Series &top() const { return series.front(); }
};

CountTable count_table(const EquationSystem &spec, std::size_t N);

/// c_0..c_N of the class (first equation).
Series coefficients(const EquationSystem &spec, std::size_t N);

/// Plain fixed-point iteration from the all-zero series, N + 1 passes; checks
/// that pass t + 1 agrees with pass t through order t. Independent of count_table.
std::vector<Series> coefficients_by_iteration(const GFSystem &gf, std::size_t N);

Series multiply(const Series &a, const Series &b, std::size_t N);

/// C^2 + (S(C) - 1 + z) C + S(C) + z through order N, where C is the series of
/// the substitution closure of `simples` and S(x) = sum over simples of x^|pi|.
Series quadratic_residual(const std::vector<Permutation> &simples, std::size_t N);

} // namespace permspec
