#pragma once

#include <cstdint>
#include <vector>

#include "permspec/embedding.hpp"
#include "permspec/restriction.hpp"

namespace permspec {

/// Basis of a class, validated: a non-empty-class antichain. Bases containing
/// 12 or 21 are accepted; such classes are restrictions of the sum closure too.
struct Basis {
  std::vector<Permutation> patterns;

  /// Non-simple basis elements; simple ones are handled by leaving them out
  /// of the closure's simple set.
  std::vector<Permutation> b_star() const;
};

/// Throws InvalidInput for a non-antichain, DomainError for a trivial class.
Basis make_basis(std::vector<Permutation> patterns);

/// Throws InvalidInput when an element is not simple. Returns a sorted copy.
std::vector<Permutation> make_simple_set(std::vector<Permutation> simples);

/// Distinct normalized blocks of size >= 2 of the given patterns.
std::vector<Permutation> normalized_blocks(const std::vector<Permutation> &patterns);

/// Default safety cap 3^(1 + |blocks|) (saturating), i.e. the number of
/// possible (delta, avoid, contain) triples; overridden by PERMSPEC_MAX_EQUATIONS.
std::uint64_t equation_cap(const std::vector<Permutation> &blocks);

/// Equation of the closure part selected by delta: atom, sums, simple roots.
Equation closure_equation(Delta delta, const std::vector<Permutation> &simples);

/// Rewrites "members of t avoiding gamma" as a union of terms.
std::vector<Term> add_constraints(const Term &t, const Permutation &gamma);

/// Closure equation with every pattern of E pushed into the terms.
Equation eqn_for_class(Delta delta, const std::vector<Permutation> &E, const std::vector<Permutation> &simples);

/// Throws InvalidInput when a simple permutation of the closure contains a basis element.
void check_simples_avoid(const Basis &basis, const std::vector<Permutation> &simples);

/// Worklist closure of eqn_for_class starting from the class itself.
/// Unions may overlap; equations are flagged disjoint only when no two terms
/// share a root.
EquationSystem ambiguous_system(const Basis &basis, const std::vector<Permutation> &simples);

} // namespace permspec
