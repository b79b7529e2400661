#include "permspec/system.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <set>

#include "worklist.hpp"

namespace permspec {

std::vector<Permutation> Basis::b_star() const
{
  std::vector<Permutation> out;
  for (const auto &b : patterns)
    if (!is_simple(b))
      out.push_back(b);
  return out;
}

Basis make_basis(std::vector<Permutation> patterns)
{
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  for (const auto &p : patterns) {
    if (p.empty())
      throw InvalidInput("basis contains the empty permutation");
    if (p.size() == 1)
      throw DomainError("basis contains 1: the class is trivial (no non-empty permutation)");
  }
  for (const auto &p : patterns)
    for (const auto &q : patterns)
      if (!(p == q) && contains(q, p))
        throw InvalidInput("basis is not an antichain: " + p.compact() + " is a pattern of " + q.compact());
  return Basis{std::move(patterns)};
}

std::vector<Permutation> make_simple_set(std::vector<Permutation> simples)
{
  std::sort(simples.begin(), simples.end());
  simples.erase(std::unique(simples.begin(), simples.end()), simples.end());
  for (const auto &s : simples)
    if (!is_simple(s))
      throw InvalidInput(s.compact() + " is not a simple permutation");
  return simples;
}

std::vector<Permutation> normalized_blocks(const std::vector<Permutation> &patterns)
{
  std::set<Permutation> out;
  for (const auto &p : patterns)
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
      for (const auto &iv : intervals_from(p, i))
        if (iv.length() >= 2)
          out.insert(block(p, iv));
  return {out.begin(), out.end()};
}

std::uint64_t equation_cap(const std::vector<Permutation> &blocks)
{
  if (const char *env = std::getenv("PERMSPEC_MAX_EQUATIONS"))
    return std::strtoull(env, nullptr, 10);
  // one factor 3 for the delta part, one per block (avoided, contained or absent)
  std::uint64_t cap = 3;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (cap > std::numeric_limits<std::uint64_t>::max() / 3)
      return std::numeric_limits<std::uint64_t>::max();
    cap *= 3;
  }
  return cap;
}

Equation closure_equation(Delta delta, const std::vector<Permutation> &simples)
{
  Equation eq{Restriction{delta, {}, {}}, true, {}, true};
  if (delta != Delta::plus)
    eq.terms.push_back(closure_term(plus_root()));
  if (delta != Delta::minus)
    eq.terms.push_back(closure_term(minus_root()));
  for (const auto &s : simples)
    eq.terms.push_back(closure_term(s));
  return eq;
}

std::vector<Term> add_constraints(const Term &t, const Permutation &gamma)
{
  if (gamma.size() <= 1)
    throw InvalidInput("add_constraints: pattern must have size >= 2");
  std::vector<Term> partial{t};
  for (const auto &alpha : all_embeddings(gamma, t.root)) {
    // positions k whose cell pattern can block this embedding
    std::vector<std::pair<std::size_t, Permutation>> cells;
    for (std::size_t k = 1; k <= t.root.size(); ++k) {
      Permutation p = alpha.pattern(gamma, k);
      if (p.size() >= 2)
        cells.emplace_back(k - 1, std::move(p));
    }
    if (cells.empty())
      return {};
    std::vector<Term> next;
    for (const auto &p : partial) {
      // already blocked: every extension would be a subset of p
      bool blocked = std::any_of(cells.begin(), cells.end(), [&](const auto &c) {
        const auto &av = p.children[c.first].avoid;
        return std::any_of(av.begin(), av.end(), [&](const Permutation &e) { return contains(c.second, e); });
      });
      if (blocked) {
        next.push_back(p);
        continue;
      }
      for (const auto &[k, pattern] : cells) {
        Term q = p;
        q.children[k].avoid.push_back(pattern);
        next.push_back(std::move(q));
      }
    }
    partial = simplify_union(std::move(next));
  }
  return partial;
}

namespace {

bool roots_distinct(const std::vector<Term> &terms)
{
  std::set<Permutation> roots;
  for (const auto &t : terms)
    if (!roots.insert(t.root).second)
      return false;
  return true;
}

} // namespace

Equation eqn_for_class(Delta delta, const std::vector<Permutation> &E, const std::vector<Permutation> &simples)
{
  Equation eq = closure_equation(delta, simples);
  eq.lhs = canonicalize(Restriction{delta, E, {}});
  for (const auto &gamma : eq.lhs.avoid)
    eq.terms = detail::fold_terms(eq.terms, gamma, add_constraints);
  eq.disjoint = roots_distinct(eq.terms);
  return eq;
}

namespace detail {

std::vector<Term> fold_terms(const std::vector<Term> &terms, const Permutation &gamma,
                             std::vector<Term> (*step)(const Term &, const Permutation &))
{
  std::vector<Term> out;
  for (const auto &t : terms) {
    auto part = step(t, gamma);
    out.insert(out.end(), part.begin(), part.end());
  }
  return simplify_union(std::move(out));
}

EquationSystem close_system(const Restriction &top, const std::vector<Permutation> &simples,
                            const std::vector<Permutation> &b_star,
                            const std::function<Equation(const Restriction &)> &make)
{
  const auto blocks = normalized_blocks(b_star);
  const std::set<Permutation> block_set(blocks.begin(), blocks.end());
  const std::uint64_t cap = equation_cap(blocks);

  EquationSystem sys{simples, {}};
  std::set<std::string> seen{top.key()};
  std::deque<Restriction> work{top};
  while (!work.empty()) {
    Restriction r = std::move(work.front());
    work.pop_front();
    for (const auto *side : {&r.avoid, &r.contain})
      for (const auto &p : *side)
        if (!block_set.count(p))
          throw std::logic_error("pattern " + p.compact() + " in " + r.key() +
                                 " is not a normalized block of the basis");
    if (sys.equations.size() >= cap)
      throw DomainError("equation count exceeds the cap of " + std::to_string(cap) +
                        " (set PERMSPEC_MAX_EQUATIONS to raise it)");
    Equation eq = make(r);
    for (const auto &t : eq.terms)
      for (const auto &c : t.children)
        if (seen.insert(c.key()).second)
          work.push_back(c);
    sys.equations.push_back(std::move(eq));
  }
  return sys;
}

} // namespace detail

void check_simples_avoid(const Basis &basis, const std::vector<Permutation> &simples)
{
  for (const auto &s : simples)
    for (const auto &b : basis.patterns)
      if (contains(s, b))
        throw InvalidInput("simple permutation " + s.compact() + " contains basis element " + b.compact());
}

EquationSystem ambiguous_system(const Basis &basis, const std::vector<Permutation> &simples)
{
  check_simples_avoid(basis, simples);
  const auto b_star = basis.b_star();
  Restriction top = canonicalize(Restriction{Delta::plain, b_star, {}});
  return detail::close_system(top, simples, b_star, [&](const Restriction &r) {
    return eqn_for_class(r.delta, r.avoid, simples);
  });
}

} // namespace permspec
