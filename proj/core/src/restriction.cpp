#include "permspec/restriction.hpp"

#include <algorithm>

namespace permspec {

const char *delta_suffix(Delta d)
{
  switch (d) {
  case Delta::plus:
    return "+";
  case Delta::minus:
    return "-";
  default:
    return "";
  }
}

Delta parse_delta(const std::string &s)
{
  if (s.empty())
    return Delta::plain;
  if (s == "+")
    return Delta::plus;
  if (s == "-")
    return Delta::minus;
  throw InvalidInput("unknown delta '" + s + "'");
}

namespace {

std::string join(const std::vector<Permutation> &ps)
{
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i)
      out += ',';
    out += ps[i].compact();
  }
  return out;
}

void sort_unique(std::vector<Permutation> &v)
{
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// keep x unless some other y in v satisfies below(y, x)
template <typename Below>
std::vector<Permutation> extremal(const std::vector<Permutation> &v, Below below)
{
  std::vector<Permutation> out;
  for (const auto &x : v) {
    bool dominated = false;
    for (const auto &y : v)
      if (!(x == y) && below(y, x)) {
        dominated = true;
        break;
      }
    if (!dominated)
      out.push_back(x);
  }
  return out;
}

} // namespace

std::string Restriction::key() const
{
  return std::string("C") + delta_suffix(delta) + "<avoid:" + join(avoid) + "><contain:" + join(contain) + ">";
}

std::string Restriction::pretty() const
{
  std::string out = std::string("C") + delta_suffix(delta);
  if (!avoid.empty())
    out += "<" + join(avoid) + ">";
  if (!contain.empty())
    out += "(" + join(contain) + ")";
  return out;
}

Restriction canonicalize(Restriction r)
{
  auto drop = [](std::vector<Permutation> &v, std::size_t max_dropped) {
    v.erase(std::remove_if(v.begin(), v.end(), [&](const Permutation &p) { return p.size() <= max_dropped; }),
            v.end());
  };
  drop(r.avoid, 0);
  drop(r.contain, 1);
  sort_unique(r.avoid);
  sort_unique(r.contain);
  r.avoid = extremal(r.avoid, [](const Permutation &y, const Permutation &x) { return contains(x, y); });
  r.contain = extremal(r.contain, [](const Permutation &y, const Permutation &x) { return contains(y, x); });
  return r;
}

bool is_empty_sufficient(const Restriction &r)
{
  for (const auto &e : r.avoid) {
    if (e.size() == 1)
      return true;
    for (const auto &a : r.contain)
      if (contains(a, e))
        return true;
  }
  return false;
}

bool subset_sufficient(const Restriction &r1, const Restriction &r2)
{
  if (r1.delta != r2.delta)
    throw InvalidInput("subset_sufficient: delta mismatch");
  for (const auto &p : r2.avoid)
    if (std::none_of(r1.avoid.begin(), r1.avoid.end(), [&](const Permutation &t) { return contains(p, t); }))
      return false;
  for (const auto &p : r2.contain)
    if (std::none_of(r1.contain.begin(), r1.contain.end(), [&](const Permutation &t) { return contains(t, p); }))
      return false;
  return true;
}

Restriction intersect_restrictions(const Restriction &r1, const Restriction &r2)
{
  if (r1.delta != r2.delta)
    throw InvalidInput("intersect_restrictions: delta mismatch");
  Restriction r{r1.delta, r1.avoid, r1.contain};
  r.avoid.insert(r.avoid.end(), r2.avoid.begin(), r2.avoid.end());
  r.contain.insert(r.contain.end(), r2.contain.begin(), r2.contain.end());
  return canonicalize(std::move(r));
}

std::vector<Restriction> complement_restriction(const Restriction &r)
{
  const std::size_t k = r.avoid.size(), l = r.contain.size();
  std::vector<Restriction> out;
  // bit b < k flips avoid[b] into the contain side (Y), bit k + b flips contain[b] (X)
  for (unsigned long mask = 1; mask < (1UL << (k + l)); ++mask) {
    Restriction piece{r.delta, {}, {}};
    for (std::size_t b = 0; b < k; ++b)
      ((mask >> b) & 1 ? piece.contain : piece.avoid).push_back(r.avoid[b]);
    for (std::size_t b = 0; b < l; ++b)
      ((mask >> (k + b)) & 1 ? piece.avoid : piece.contain).push_back(r.contain[b]);
    out.push_back(canonicalize(std::move(piece)));
  }
  return out;
}

std::string Term::pretty() const
{
  std::string out = root == plus_root() ? "+" : root == minus_root() ? "-" : root.compact();
  out += "[";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i)
      out += ", ";
    out += children[i].pretty();
  }
  return out + "]";
}

Delta child_delta(const Permutation &root, std::size_t k)
{
  if (k == 0 && root == plus_root())
    return Delta::plus;
  if (k == 0 && root == minus_root())
    return Delta::minus;
  return Delta::plain;
}

Term closure_term(const Permutation &root)
{
  Term t{root, {}};
  for (std::size_t k = 0; k < root.size(); ++k)
    t.children.push_back(Restriction{child_delta(root, k), {}, {}});
  return t;
}

bool term_is_empty_sufficient(const Term &t)
{
  return std::any_of(t.children.begin(), t.children.end(), is_empty_sufficient);
}

bool term_subset_sufficient(const Term &t1, const Term &t2)
{
  if (!(t1.root == t2.root))
    return false;
  for (std::size_t k = 0; k < t1.children.size(); ++k)
    if (!subset_sufficient(t1.children[k], t2.children[k]))
      return false;
  return true;
}

std::optional<Term> intersect_terms(const Term &t1, const Term &t2)
{
  if (!(t1.root == t2.root))
    return std::nullopt;
  Term t{t1.root, {}};
  for (std::size_t k = 0; k < t1.children.size(); ++k) {
    t.children.push_back(intersect_restrictions(t1.children[k], t2.children[k]));
    if (is_empty_sufficient(t.children.back()))
      return std::nullopt;
  }
  return t;
}

std::vector<Term> complement_term(const Term &t)
{
  // options[k][0] is the child itself, the rest are its complement pieces
  std::vector<std::vector<Restriction>> options;
  for (const auto &c : t.children) {
    std::vector<Restriction> opt{c};
    for (auto &piece : complement_restriction(c))
      if (!is_empty_sufficient(piece))
        opt.push_back(std::move(piece));
    options.push_back(std::move(opt));
  }
  std::vector<Term> out;
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == options[k].size())
      pick[k++] = 0;
    if (k == pick.size())
      break;
    Term c{t.root, {}};
    for (std::size_t m = 0; m < pick.size(); ++m)
      c.children.push_back(options[m][pick[m]]);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Term> simplify_union(std::vector<Term> terms)
{
  std::vector<Term> live;
  for (auto &t : terms) {
    for (auto &c : t.children)
      c = canonicalize(std::move(c));
    if (!term_is_empty_sufficient(t))
      live.push_back(std::move(t));
  }
  std::vector<Term> out;
  for (std::size_t i = 0; i < live.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < live.size() && !dominated; ++j) {
      if (i == j || !term_subset_sufficient(live[i], live[j]))
        continue;
      // mutual inclusion: keep the first of the pair only
      dominated = !term_subset_sufficient(live[j], live[i]) || j < i;
    }
    if (!dominated)
      out.push_back(live[i]);
  }
  return out;
}

std::string Equation::pretty() const
{
  std::string out = lhs.pretty() + " =";
  const char *sep = disjoint ? " (+) " : " U ";
  bool first = true;
  if (has_one) {
    out += " 1";
    first = false;
  }
  for (const auto &t : terms) {
    out += first ? " " : sep;
    out += t.pretty();
    first = false;
  }
  if (first)
    out += " 0";
  return out;
}

std::map<std::string, std::size_t> EquationSystem::index() const
{
  std::map<std::string, std::size_t> m;
  for (std::size_t i = 0; i < equations.size(); ++i)
    m.emplace(equations[i].lhs.key(), i);
  return m;
}

std::string EquationSystem::pretty() const
{
  std::string out;
  for (const auto &e : equations)
    out += e.pretty() + "\n";
  return out;
}

} // namespace permspec
