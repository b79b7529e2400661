#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "permspec/restriction.hpp"

namespace permspec {

bool avoids_all(const Permutation &sigma, const std::vector<Permutation> &basis);

/// Same answer as avoids_all, computed bottom-up on the decomposition tree of
/// sigma: a pattern occurs in alpha[s_1..s_k] iff some embedding of it in alpha
/// has every non-empty cell occurring in the matching s_i. Polynomial in
/// |sigma|, so usable on large samples.
bool avoids_all_by_decomposition(const Permutation &sigma, const std::vector<Permutation> &basis);

/// All size-n permutations avoiding every basis element, in lexicographic order.
std::vector<Permutation> enumerate_class(const std::vector<Permutation> &basis, std::size_t n);

/// Simple permutations of size <= maxlen avoiding the basis.
std::vector<Permutation> simples_in_class(const std::vector<Permutation> &basis, std::size_t maxlen);

/// Membership in the closure of `simples` restricted by r, straight from the definition.
bool member_of_restriction(const Permutation &sigma, const Restriction &r, const std::vector<Permutation> &simples);

/// Membership in root[children...], via the unique top-level decomposition.
bool member_of_term(const Permutation &sigma, const Term &t, const std::vector<Permutation> &simples);

struct AuditReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool clean() const { return violations.empty(); }
};

/// For every equation and every size up to nmax: right-hand terms pairwise
/// disjoint, their union equal to the left-hand side, and the first equation's
/// left-hand side equal to Av(basis).
AuditReport audit_specification(const EquationSystem &spec, const std::vector<Permutation> &basis,
                                std::size_t nmax);

} // namespace permspec
