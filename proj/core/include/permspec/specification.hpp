#pragma once

#include <vector>

#include "permspec/system.hpp"

namespace permspec {

/// Rewrites "members of t containing gamma" as a (possibly overlapping) union of terms.
std::vector<Term> add_mandatory(const Term &t, const Permutation &gamma);

/// Equation for an arbitrary canonical restriction: closure skeleton, avoided
/// patterns pushed in, then mandatory patterns pushed in.
Equation eqn_for_restriction(const Restriction &r, const std::vector<Permutation> &simples);

/// Rewrites each group of same-root terms as a disjoint union.
Equation disambiguate(const Equation &eq);

/// Complete unambiguous system for Av(basis) over the closure of `simples`.
EquationSystem specification(const Basis &basis, const std::vector<Permutation> &simples);

/// Three-equation specification of the substitution closure itself.
EquationSystem substitution_closed_spec(const std::vector<Permutation> &simples);

} // namespace permspec
