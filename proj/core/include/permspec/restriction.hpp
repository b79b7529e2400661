#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permspec/permutation.hpp"

namespace permspec {

/// Which part of the closure a restriction lives in: everything, the
/// plus-indecomposable part, or the minus-indecomposable part.
enum class Delta { plain, plus, minus };

/// "", "+" or "-".
const char *delta_suffix(Delta d);
Delta parse_delta(const std::string &s);

/// Permutations of the closure (of the given delta part) avoiding every
/// pattern of `avoid` and containing every pattern of `contain`.
struct Restriction {
  Delta delta = Delta::plain;
  std::vector<Permutation> avoid;
  std::vector<Permutation> contain;

  /// e.g. "C+<avoid:12,132><contain:21>"
  std::string key() const;
  /// e.g. "C+<12,132>(21)"
  std::string pretty() const;

  auto operator<=>(const Restriction &) const = default;
  bool operator==(const Restriction &) const = default;
};

/// min of avoid, max of contain, epsilon dropped, 1 dropped from contain.
/// Both lists sorted by (size, lex).
Restriction canonicalize(Restriction r);

/// True means the restriction denotes the empty set; false is inconclusive.
bool is_empty_sufficient(const Restriction &r);

/// True means r1 is a subset of r2; false is inconclusive. Deltas must agree.
bool subset_sufficient(const Restriction &r1, const Restriction &r2);

Restriction intersect_restrictions(const Restriction &r1, const Restriction &r2);

/// The 2^(|avoid|+|contain|) - 1 pairwise disjoint restrictions whose union is
/// the complement of r inside its delta part. Pieces are canonicalized but not
/// filtered for emptiness.
std::vector<Restriction> complement_restriction(const Restriction &r);

/// root[children...]; root is 12 for the direct sum, 21 for the skew sum,
/// otherwise a simple permutation.
struct Term {
  Permutation root;
  std::vector<Restriction> children;

  std::string pretty() const;
  auto operator<=>(const Term &) const = default;
  bool operator==(const Term &) const = default;
};

/// The unconstrained term for a root: first child of a sum carries the
/// matching indecomposability delta.
Term closure_term(const Permutation &root);

/// Delta required at child position k (0-based) of a term with this root.
Delta child_delta(const Permutation &root, std::size_t k);

bool term_is_empty_sufficient(const Term &t);
bool term_subset_sufficient(const Term &t1, const Term &t2);

/// Componentwise intersection. nullopt when the roots differ or a child is
/// provably empty.
std::optional<Term> intersect_terms(const Term &t1, const Term &t2);

/// Disjoint terms whose union is the complement of t inside closure_term(t.root).
/// Terms with a provably empty child are omitted.
std::vector<Term> complement_term(const Term &t);

/// Canonicalizes children, drops provably empty terms, then removes every term
/// contained (by the sufficient test) in another one. Union semantics only.
std::vector<Term> simplify_union(std::vector<Term> terms);

struct Equation {
  Restriction lhs;
  bool has_one = false;
  std::vector<Term> terms;
  bool disjoint = false;

  std::string pretty() const;
};

struct EquationSystem {
  std::vector<Permutation> simples;
  /// The first equation defines the class itself.
  std::vector<Equation> equations;

  std::map<std::string, std::size_t> index() const;
  std::string pretty() const;
};

} // namespace permspec
