#include "permspec/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "permspec/embedding.hpp"

namespace permspec {

bool avoids_all(const Permutation &sigma, const std::vector<Permutation> &basis)
{
  return std::none_of(basis.begin(), basis.end(), [&](const Permutation &b) { return contains(sigma, b); });
}

namespace {

// Containment of every consecutive factor of the basis elements, per tree node.
class FactorSearch {
public:
  explicit FactorSearch(const std::vector<Permutation> &basis)
  {
    std::set<Permutation> seen;
    for (const auto &b : basis)
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j <= b.size(); ++j)
          seen.insert(normalize(std::span(b.values()).subspan(i, j - i)));
    factors_.assign(seen.begin(), seen.end());
    for (std::size_t k = 0; k < factors_.size(); ++k)
      index_[factors_[k]] = k;
    for (const auto &b : basis)
      targets_.push_back(index_.at(b));
  }

  bool avoids(const Permutation &sigma)
  {
    if (sigma.empty())
      return std::all_of(targets_.begin(), targets_.end(), [&](std::size_t k) { return !factors_[k].empty(); });
    auto has = visit(decomposition_tree(sigma));
    return std::none_of(targets_.begin(), targets_.end(), [&](std::size_t k) { return has[k]; });
  }

private:
  std::vector<bool> visit(const DecompositionTree &node)
  {
    std::vector<bool> has(factors_.size(), false);
    if (node.kind == DecompositionTree::Kind::leaf) {
      for (std::size_t k = 0; k < factors_.size(); ++k)
        has[k] = factors_[k].size() == 1;
      return has;
    }
    std::vector<std::vector<bool>> child;
    for (const auto &c : node.children)
      child.push_back(visit(c));
    const auto &embeddings = embeddings_of(node.label);
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      for (const auto &c : child)
        if (c[k])
          has[k] = true;
      for (std::size_t e = 0; !has[k] && e < embeddings[k].size(); ++e) {
        const Embedding &emb = embeddings[k][e];
        bool all = true;
        for (std::size_t cell = 0; cell < emb.cells.size() && all; ++cell)
          if (!Embedding::is_empty_cell(emb.cells[cell]))
            all = child[cell][index_.at(emb.pattern(factors_[k], cell + 1))];
        has[k] = all;
      }
    }
    return has;
  }

  const std::vector<std::vector<Embedding>> &embeddings_of(const Permutation &label)
  {
    auto [it, fresh] = embeddings_.try_emplace(label);
    if (fresh)
      for (const auto &f : factors_)
        it->second.push_back(f.size() < 2 ? std::vector<Embedding>{} : all_embeddings(f, label));
    return it->second;
  }

  std::vector<Permutation> factors_;
  std::map<Permutation, std::size_t> index_;
  std::vector<std::size_t> targets_;
  std::map<Permutation, std::vector<std::vector<Embedding>>> embeddings_;
};

} // namespace

bool avoids_all_by_decomposition(const Permutation &sigma, const std::vector<Permutation> &basis)
{
  return FactorSearch(basis).avoids(sigma);
}

std::vector<Permutation> enumerate_class(const std::vector<Permutation> &basis, std::size_t n)
{
  std::vector<Permutation> out;
  for (auto &p : all_permutations(n))
    if (avoids_all(p, basis))
      out.push_back(std::move(p));
  return out;
}

std::vector<Permutation> simples_in_class(const std::vector<Permutation> &basis, std::size_t maxlen)
{
  std::vector<Permutation> out;
  for (std::size_t n = 4; n <= maxlen; ++n)
    for (auto &p : all_permutations(n))
      if (is_simple(p) && avoids_all(p, basis))
        out.push_back(std::move(p));
  return out;
}

namespace {

bool delta_ok(const Permutation &sigma, Delta d)
{
  switch (d) {
  case Delta::plus:
    return !is_plus_decomposable(sigma);
  case Delta::minus:
    return !is_minus_decomposable(sigma);
  default:
    return true;
  }
}

bool constraints_ok(const Permutation &sigma, const Restriction &r)
{
  return delta_ok(sigma, r.delta) &&
         std::none_of(r.avoid.begin(), r.avoid.end(), [&](const Permutation &e) { return contains(sigma, e); }) &&
         std::all_of(r.contain.begin(), r.contain.end(), [&](const Permutation &a) { return contains(sigma, a); });
}

} // namespace

bool member_of_restriction(const Permutation &sigma, const Restriction &r, const std::vector<Permutation> &simples)
{
  return !sigma.empty() && in_closure(sigma, simples) && constraints_ok(sigma, r);
}

bool member_of_term(const Permutation &sigma, const Term &t, const std::vector<Permutation> &simples)
{
  if (sigma.size() < 2)
    return false;
  Decomposition d = decompose(sigma);
  if (!(d.root == t.root))
    return false;
  for (std::size_t k = 0; k < d.children.size(); ++k)
    if (!member_of_restriction(d.children[k], t.children[k], simples))
      return false;
  return true;
}

namespace {

struct PermHash {
  std::size_t operator()(const Permutation &p) const { return boost::hash_range(p.values().begin(), p.values().end()); }
};

// Memoized facts about permutations met during an audit. Every permutation
// handled here is already known to lie in the closure.
class Facts {
public:
  bool member(const Permutation &sigma, const Restriction &r)
  {
    Info &info = get(sigma);
    if (r.delta == Delta::plus && info.plus_dec)
      return false;
    if (r.delta == Delta::minus && info.minus_dec)
      return false;
    for (const auto &e : r.avoid)
      if (has(info, sigma, e))
        return false;
    for (const auto &a : r.contain)
      if (!has(info, sigma, a))
        return false;
    return true;
  }

private:
  struct Info {
    bool plus_dec = false, minus_dec = false;
    std::unordered_map<Permutation, bool, PermHash> pattern;
  };

  Info &get(const Permutation &sigma)
  {
    auto [it, fresh] = cache_.try_emplace(sigma);
    if (fresh) {
      it->second.plus_dec = is_plus_decomposable(sigma);
      it->second.minus_dec = is_minus_decomposable(sigma);
    }
    return it->second;
  }

  static bool has(Info &info, const Permutation &sigma, const Permutation &p)
  {
    auto [it, fresh] = info.pattern.try_emplace(p, false);
    if (fresh)
      it->second = contains(sigma, p);
    return it->second;
  }

  std::unordered_map<Permutation, Info, PermHash> cache_;
};

} // namespace

AuditReport audit_specification(const EquationSystem &spec, const std::vector<Permutation> &basis,
                                std::size_t nmax)
{
  AuditReport report;
  if (spec.equations.empty()) {
    if (nmax >= 1 && !enumerate_class(basis, 1).empty())
      report.violations.push_back("empty specification but the class is not empty");
    return report;
  }
  const auto index = spec.index();
  for (const auto &eq : spec.equations)
    for (const auto &t : eq.terms)
      for (const auto &c : t.children)
        if (!index.count(c.key()))
          report.violations.push_back("no equation for " + c.key());

  auto note = [&](const std::string &what) {
    if (report.violations.size() < 200)
      report.violations.push_back(what);
  };

  Facts facts;
  for (std::size_t n = 1; n <= nmax; ++n) {
    for (const auto &sigma : all_permutations(n)) {
      ++report.checked;
      const bool in_class = avoids_all(sigma, basis);
      if (!in_closure(sigma, spec.simples)) {
        if (in_class)
          note(sigma.compact() + " avoids the basis but is outside the closure of the given simples");
        continue;
      }
      std::optional<Decomposition> d;
      if (n >= 2)
        d = decompose(sigma);
      for (std::size_t e = 0; e < spec.equations.size(); ++e) {
        const auto &eq = spec.equations[e];
        const bool lhs = facts.member(sigma, eq.lhs);
        if (e == 0 && lhs != in_class)
          note(sigma.compact() + (in_class ? " is in the class but not generated by " : " is generated by ") +
               eq.lhs.pretty() + (in_class ? "" : " but is not in the class"));
        std::size_t hits = (n == 1 && eq.has_one) ? 1 : 0;
        for (const auto &t : eq.terms) {
          if (!d || !(d->root == t.root))
            continue;
          bool all = true;
          for (std::size_t k = 0; k < t.children.size() && all; ++k)
            all = facts.member(d->children[k], t.children[k]);
          hits += all;
        }
        if (hits > 1)
          note(sigma.compact() + " belongs to " + std::to_string(hits) + " right-hand terms of " + eq.lhs.pretty());
        if ((hits > 0) != lhs)
          note(sigma.compact() + (lhs ? " is in " : " is not in ") + eq.lhs.pretty() +
               (lhs ? " but in no right-hand term" : " but is generated by its right-hand side"));
      }
    }
  }
  return report;
}

} // namespace permspec
