#include "permspec/specification.hpp"

#include <algorithm>
#include <map>

#include "worklist.hpp"

namespace permspec {

std::vector<Term> add_mandatory(const Term &t, const Permutation &gamma)
{
  if (gamma.size() <= 1)
    throw InvalidInput("add_mandatory: pattern must have size >= 2");
  std::vector<Term> out;
  for (const auto &alpha : all_embeddings(gamma, t.root)) {
    Term q = t;
    for (std::size_t k = 1; k <= t.root.size(); ++k) {
      Permutation p = alpha.pattern(gamma, k);
      if (p.size() >= 2)
        q.children[k - 1].contain.push_back(std::move(p));
    }
    out.push_back(std::move(q));
  }
  return simplify_union(std::move(out));
}

namespace {

// Non-empty subsets of {0..k-1}, by size and then lexicographically.
std::vector<std::vector<std::size_t>> ordered_subsets(std::size_t k)
{
  std::vector<std::vector<std::size_t>> out;
  for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1)
        s.push_back(i);
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<Term> disambiguate_group(const std::vector<Term> &group)
{
  const std::size_t k = group.size();
  std::vector<std::vector<Term>> complements;
  for (const auto &t : group)
    complements.push_back(complement_term(t));

  std::vector<Term> out;
  for (const auto &X : ordered_subsets(k)) {
    std::optional<Term> core = group[X[0]];
    for (std::size_t i = 1; i < X.size() && core; ++i)
      core = intersect_terms(*core, group[X[i]]);
    if (!core)
      continue;
    std::vector<Term> pieces{*core};
    for (std::size_t i = 0; i < k && !pieces.empty(); ++i) {
      if (std::find(X.begin(), X.end(), i) != X.end())
        continue;
      std::vector<Term> next;
      for (const auto &p : pieces)
        for (const auto &c : complements[i])
          if (auto r = intersect_terms(p, c))
            next.push_back(std::move(*r));
      pieces = std::move(next);
    }
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  return out;
}

} // namespace

Equation eqn_for_restriction(const Restriction &r, const std::vector<Permutation> &simples)
{
  Equation eq = closure_equation(r.delta, simples);
  eq.lhs = r;
  for (const auto &gamma : r.avoid)
    eq.terms = detail::fold_terms(eq.terms, gamma, add_constraints);
  for (const auto &gamma : r.contain)
    eq.terms = detail::fold_terms(eq.terms, gamma, add_mandatory);
  eq.has_one = r.contain.empty();
  eq.disjoint = false;
  return eq;
}

Equation disambiguate(const Equation &eq)
{
  std::vector<Permutation> roots;
  std::map<Permutation, std::vector<Term>> groups;
  for (const auto &t : eq.terms) {
    if (!groups.count(t.root))
      roots.push_back(t.root);
    groups[t.root].push_back(t);
  }
  Equation out{eq.lhs, eq.has_one, {}, true};
  for (const auto &root : roots) {
    const auto &g = groups[root];
    auto terms = g.size() == 1 ? g : disambiguate_group(g);
    for (auto &t : terms)
      if (std::find(out.terms.begin(), out.terms.end(), t) == out.terms.end())
        out.terms.push_back(std::move(t));
  }
  return out;
}

EquationSystem specification(const Basis &basis, const std::vector<Permutation> &simples)
{
  check_simples_avoid(basis, simples);
  const auto b_star = basis.b_star();
  Restriction top = canonicalize(Restriction{Delta::plain, b_star, {}});
  return detail::close_system(top, simples, b_star, [&](const Restriction &r) {
    return disambiguate(eqn_for_restriction(r, simples));
  });
}

EquationSystem substitution_closed_spec(const std::vector<Permutation> &simples)
{
  EquationSystem sys{simples, {}};
  for (Delta d : {Delta::plain, Delta::plus, Delta::minus})
    sys.equations.push_back(closure_equation(d, simples));
  return sys;
}

} // namespace permspec
