#include "permspec/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace permspec {

namespace {

bool is_bijection(const std::vector<int> &v)
{
  std::vector<char> seen(v.size() + 1, 0);
  for (int x : v) {
    if (x < 1 || static_cast<std::size_t>(x) > v.size() || seen[x])
      return false;
    seen[x] = 1;
  }
  return true;
}

// For each pattern position t, the earlier positions holding the nearest
// smaller and nearest larger value (-1 if none). A candidate text value must
// fall strictly between the text values chosen at those two positions.
struct PatternFrame {
  std::vector<int> below, above;

  explicit PatternFrame(const Permutation &pi)
    : below(pi.size(), -1), above(pi.size(), -1)
  {
    for (std::size_t t = 0; t < pi.size(); ++t) {
      int v = pi.values()[t];
      int lo = 0, hi = static_cast<int>(pi.size()) + 1;
      for (std::size_t s = 0; s < t; ++s) {
        int w = pi.values()[s];
        if (w < v && w > lo) {
          lo = w;
          below[t] = static_cast<int>(s);
        }
        if (w > v && w < hi) {
          hi = w;
          above[t] = static_cast<int>(s);
        }
      }
    }
  }
};

// Calls visit(chosen) for every occurrence; stops early when visit returns false.
template <typename Visit>
bool search(const Permutation &sigma, const Permutation &pi, const PatternFrame &f,
            std::vector<int> &chosen, std::size_t start, Visit &visit)
{
  std::size_t t = chosen.size();
  std::size_t k = pi.size(), n = sigma.size();
  if (t == k)
    return visit(chosen);
  for (std::size_t idx = start; idx + (k - t) <= n; ++idx) {
    int v = sigma.values()[idx];
    if (f.below[t] >= 0 && v < sigma.values()[chosen[f.below[t]]])
      continue;
    if (f.above[t] >= 0 && v > sigma.values()[chosen[f.above[t]]])
      continue;
    chosen.push_back(static_cast<int>(idx));
    bool go_on = search(sigma, pi, f, chosen, idx + 1, visit);
    chosen.pop_back();
    if (!go_on)
      return false;
  }
  return true;
}

bool in_closure_unchecked(const Permutation &sigma, const std::vector<Permutation> &simples)
{
  if (sigma.size() <= 1)
    return true;
  Decomposition d = decompose(sigma);
  if (d.root.size() >= 4 && std::find(simples.begin(), simples.end(), d.root) == simples.end())
    return false;
  for (const auto &c : d.children)
    if (!in_closure_unchecked(c, simples))
      return false;
  return true;
}

} // namespace

Permutation::Permutation(std::vector<int> values) : v_(std::move(values))
{
  if (!is_bijection(v_))
    throw InvalidInput("not a permutation of 1..n");
}

Permutation::Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

Permutation Permutation::identity(std::size_t n)
{
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

std::strong_ordering Permutation::operator<=>(const Permutation &o) const
{
  if (auto c = v_.size() <=> o.v_.size(); c != 0)
    return c;
  return std::lexicographical_compare_three_way(v_.begin(), v_.end(), o.v_.begin(), o.v_.end());
}

std::string Permutation::compact() const
{
  bool digits = v_.size() <= 9;
  std::string out;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (!digits && i)
      out += '.';
    out += std::to_string(v_[i]);
  }
  return out;
}

std::string Permutation::spaced() const
{
  std::string out;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(v_[i]);
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const Permutation &p)
{
  return os << (p.empty() ? std::string("e") : p.compact());
}

Permutation parse_permutation(std::string_view text)
{
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;)
    tokens.push_back(tok);

  std::vector<int> v;
  auto all_digits = [](const std::string &t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  if (tokens.size() == 1 && tokens[0].size() > 1 && tokens[0].size() <= 9 && all_digits(tokens[0])) {
    for (char c : tokens[0])
      v.push_back(c - '0');
  } else {
    for (const auto &t : tokens) {
      if (!all_digits(t))
        throw InvalidInput("bad permutation token '" + t + "'");
      v.push_back(std::stoi(t));
    }
  }
  return Permutation(std::move(v));
}

Permutation normalize(std::span<const int> s)
{
  std::vector<int> idx(s.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return s[a] < s[b]; });
  std::vector<int> out(s.size());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    if (r && s[idx[r]] == s[idx[r - 1]])
      throw InvalidInput("normalize: duplicate entries");
    out[idx[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(out));
}

std::vector<std::vector<int>> occurrences(const Permutation &sigma, const Permutation &pi)
{
  std::vector<std::vector<int>> out;
  if (pi.size() > sigma.size())
    return out;
  PatternFrame f(pi);
  std::vector<int> chosen;
  auto visit = [&](const std::vector<int> &c) {
    std::vector<int> one(c.size());
    std::transform(c.begin(), c.end(), one.begin(), [](int x) { return x + 1; });
    out.push_back(std::move(one));
    return true;
  };
  search(sigma, pi, f, chosen, 0, visit);
  return out;
}

bool contains(const Permutation &sigma, const Permutation &pi)
{
  if (pi.size() > sigma.size())
    return false;
  if (pi.size() <= 1)
    return pi.empty() || !sigma.empty();
  PatternFrame f(pi);
  std::vector<int> chosen;
  bool found = false;
  auto visit = [&](const std::vector<int> &) {
    found = true;
    return false;
  };
  search(sigma, pi, f, chosen, 0, visit);
  return found;
}

std::vector<Interval> intervals_from(const Permutation &gamma, int i)
{
  int n = static_cast<int>(gamma.size());
  if (i < 1 || i > n)
    throw InvalidInput("intervals_from: index out of range");
  std::vector<Interval> out;
  int lo = gamma(i), hi = gamma(i);
  for (int j = i; j <= n; ++j) {
    lo = std::min(lo, gamma(j));
    hi = std::max(hi, gamma(j));
    if (hi - lo == j - i)
      out.push_back({i, j});
  }
  return out;
}

Permutation block(const Permutation &gamma, Interval iv)
{
  if (iv.i == 0)
    return {};
  return normalize(std::span<const int>(gamma.values()).subspan(iv.i - 1, iv.length()));
}

bool is_simple(const Permutation &pi)
{
  int n = static_cast<int>(pi.size());
  if (n < 4)
    return false;
  for (int i = 1; i <= n; ++i)
    for (const auto &iv : intervals_from(pi, i))
      if (iv.length() > 1 && iv.length() < n)
        return false;
  return true;
}

Permutation generalized_substitute(const Permutation &sigma, std::span<const Permutation> blocks)
{
  if (blocks.size() != sigma.size())
    throw InvalidInput("substitute: block count differs from |sigma|");
  std::size_t n = sigma.size();
  // offset[v] = total size of blocks whose sigma-value is below v
  std::vector<int> size_at_value(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k)
    size_at_value[sigma.values()[k]] = static_cast<int>(blocks[k].size());
  std::vector<int> offset(n + 2, 0);
  for (std::size_t v = 1; v <= n; ++v)
    offset[v + 1] = offset[v] + size_at_value[v];
  std::vector<int> out;
  out.reserve(offset[n + 1]);
  for (std::size_t k = 0; k < n; ++k) {
    int base = offset[sigma.values()[k]];
    for (int x : blocks[k].values())
      out.push_back(base + x);
  }
  return Permutation(std::move(out));
}

Permutation substitute(const Permutation &sigma, std::span<const Permutation> blocks)
{
  for (const auto &b : blocks)
    if (b.empty())
      throw InvalidInput("substitute: empty block");
  return generalized_substitute(sigma, blocks);
}

const Permutation &plus_root()
{
  static const Permutation p{1, 2};
  return p;
}

const Permutation &minus_root()
{
  static const Permutation p{2, 1};
  return p;
}

namespace {

// Length of the shortest proper prefix whose values are {1..k} (plus) or
// {n-k+1..n} (minus); 0 if none.
std::size_t first_split(const Permutation &pi, bool plus)
{
  std::size_t n = pi.size();
  int extreme = plus ? 0 : static_cast<int>(n) + 1;
  for (std::size_t k = 1; k < n; ++k) {
    int v = pi.values()[k - 1];
    extreme = plus ? std::max(extreme, v) : std::min(extreme, v);
    if (plus ? extreme == static_cast<int>(k) : extreme == static_cast<int>(n - k + 1))
      return k;
  }
  return 0;
}

} // namespace

bool is_plus_decomposable(const Permutation &pi) { return pi.size() >= 2 && first_split(pi, true) != 0; }

bool is_minus_decomposable(const Permutation &pi) { return pi.size() >= 2 && first_split(pi, false) != 0; }

Decomposition decompose(const Permutation &pi)
{
  std::size_t n = pi.size();
  if (n <= 1)
    throw DomainError("decompose: permutation of size <= 1");
  const auto &v = pi.values();
  for (bool plus : {true, false}) {
    if (std::size_t k = first_split(pi, plus)) {
      Decomposition d{plus ? plus_root() : minus_root(), {}};
      d.children.push_back(normalize(std::span<const int>(v).first(k)));
      d.children.push_back(normalize(std::span<const int>(v).subspan(k)));
      return d;
    }
  }
  // Prime root: blocks are the maximal proper intervals, taken greedily.
  std::vector<Interval> parts;
  for (int i = 1; i <= static_cast<int>(n);) {
    Interval best{i, i};
    for (const auto &iv : intervals_from(pi, i))
      if (iv.length() < static_cast<int>(n))
        best = iv;
    parts.push_back(best);
    i = best.j + 1;
  }
  std::vector<int> reps;
  Decomposition d;
  for (const auto &iv : parts) {
    reps.push_back(pi(iv.i));
    d.children.push_back(block(pi, iv));
  }
  d.root = normalize(reps);
  return d;
}

Permutation DecompositionTree::permutation() const
{
  if (kind == Kind::leaf)
    return Permutation{1};
  std::vector<Permutation> blocks;
  for (const auto &c : children)
    blocks.push_back(c.permutation());
  return substitute(label, blocks);
}

DecompositionTree decomposition_tree(const Permutation &pi)
{
  if (pi.empty())
    throw DomainError("decomposition_tree: empty permutation");
  DecompositionTree t;
  if (pi.size() == 1)
    return t;
  Decomposition d = decompose(pi);
  t.label = d.root;
  t.kind = d.root == plus_root()    ? DecompositionTree::Kind::plus
           : d.root == minus_root() ? DecompositionTree::Kind::minus
                                    : DecompositionTree::Kind::prime;
  for (const auto &c : d.children)
    t.children.push_back(decomposition_tree(c));
  return t;
}

bool in_closure(const Permutation &sigma, const std::vector<Permutation> &simples)
{
  for (const auto &s : simples)
    if (!is_simple(s))
      throw InvalidInput("in_closure: " + s.compact() + " is not simple");
  return in_closure_unchecked(sigma, simples);
}

std::vector<Permutation> all_permutations(std::size_t n)
{
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do
    out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

} // namespace permspec
