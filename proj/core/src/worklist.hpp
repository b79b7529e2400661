#pragma once

#include <functional>

#include "permspec/restriction.hpp"

namespace permspec::detail {

/// FIFO closure: builds an equation for `top`, then for every restriction that
/// appears on a right-hand side and has no equation yet.
EquationSystem close_system(const Restriction &top, const std::vector<Permutation> &simples,
                            const std::vector<Permutation> &b_star,
                            const std::function<Equation(const Restriction &)> &make);

/// Applies `step` to every term and simplifies the resulting union.
std::vector<Term> fold_terms(const std::vector<Term> &terms, const Permutation &gamma,
                             std::vector<Term> (*step)(const Term &, const Permutation &));

} // namespace permspec::detail
