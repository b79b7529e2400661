#pragma once

#include <map>
#include <random>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permspec/enumeration.hpp"

namespace permspec {

using Rational = boost::multiprecision::cpp_rational;

/// Uniform sampler by the recursive method. Every choice (atom or term, then
/// child sizes left to right) is drawn with exact integer weights read from
/// the count tables.
class Sampler {
public:
  /// Builds count tables through size N. Refuses non-disjoint specifications.
  Sampler(const EquationSystem &spec, std::size_t N);

  std::size_t max_size() const { return tables_.order; }
  const BigInt &count(std::size_t n) const;
  const CountTable &tables() const { return tables_; }

  /// Uniform permutation of size n from the class. Throws DomainError when the
  /// class has no permutation of that size or n exceeds the table bound.
  Permutation sample(std::size_t n, std::mt19937_64 &rng) const;

  /// Every derivation the sampler can make at size n, with the exact
  /// probability the sampler assigns to it. Only meant for small n.
  std::vector<std::pair<Permutation, Rational>> derivation_distribution(std::size_t n) const;

private:
  struct Choice {
    std::vector<BigInt> weights;
    BigInt total;
  };

  Choice top_choice(std::size_t e, std::size_t n) const;
  Choice size_choice(std::size_t e, std::size_t t, std::size_t j, std::size_t r) const;

  using Distribution = std::vector<std::pair<Permutation, Rational>>;
  using Memo = std::map<std::pair<std::size_t, std::size_t>, Distribution>;

  Permutation draw(std::size_t e, std::size_t n, std::mt19937_64 &rng) const;
  const Distribution &spread(std::size_t e, std::size_t n, Memo &memo) const;

  CountTable tables_;
  std::vector<std::vector<Permutation>> term_roots_;
};

} // namespace permspec
