#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permspec/embedding.hpp"
#include "permspec/enumeration.hpp"
#include "permspec/oracle.hpp"
#include "permspec/spec_io.hpp"
#include "permspec/specification.hpp"

namespace permspec::test {

inline Permutation P(std::string_view s) { return parse_permutation(s); }

inline std::vector<Permutation> Ps(std::initializer_list<std::string_view> xs)
{
  std::vector<Permutation> out;
  for (auto x : xs)
    out.push_back(P(x));
  return out;
}

inline Restriction R(Delta d, std::initializer_list<std::string_view> avoid, std::initializer_list<std::string_view> contain = {})
{
  return canonicalize(Restriction{d, Ps(avoid), Ps(contain)});
}

inline std::string data_path(const std::string &name) { return std::string(PERMSPEC_TEST_DATA) + "/" + name; }

/// lhs -> (atom and right-hand terms) of a system written one equation per
/// line, separators "U" or "(+)"; '#' lines are comments.
using SystemShape = std::map<std::string, std::set<std::string>>;

inline SystemShape shape_of_text(const std::string &text)
{
  SystemShape out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    auto eq = line.find(" = ");
    std::string lhs = line.substr(0, eq), rhs = line.substr(eq + 3);
    for (const std::string sep : {" (+) ", " U "})
      for (std::size_t p; (p = rhs.find(sep)) != std::string::npos;)
        rhs.replace(p, sep.size(), "|");
    auto &terms = out[lhs];
    std::size_t start = 0;
    for (std::size_t p; (p = rhs.find('|', start)) != std::string::npos; start = p + 1)
      terms.insert(rhs.substr(start, p - start));
    terms.insert(rhs.substr(start));
  }
  return out;
}

inline SystemShape shape_of_file(const std::string &name)
{
  std::ifstream in(data_path(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return shape_of_text(ss.str());
}

inline SystemShape shape_of(const EquationSystem &sys) { return shape_of_text(sys.pretty()); }
inline SystemShape shape_of(const Equation &eq) { return shape_of_text(eq.pretty()); }

struct ClassFixture {
  std::string name;
  std::vector<Permutation> basis;
  std::vector<Permutation> simples;
};

/// The classes used throughout the tests, with their (complete) simple sets.
inline std::vector<ClassFixture> fixture_classes()
{
  return {
      {"Av21", Ps({"21"}), {}},
      {"Av132", Ps({"132"}), {}},
      {"Separable", Ps({"2413", "3142"}), {}},
      {"Av2413_3142_2143", Ps({"2413", "3142", "2143"}), {}},
      {"FourBasis", Ps({"1243", "2413", "531642", "41352"}), Ps({"3142"})},
      {"FiveBasis", Ps({"1243", "2341", "2413", "41352", "531642"}), Ps({"3142"})},
  };
}

inline EquationSystem fixture_spec(const ClassFixture &c)
{
  return specification(make_basis(c.basis), make_simple_set(c.simples));
}

/// |Av(basis)_n| for n = 0..N by filtering all permutations.
inline Series brute_counts(const std::vector<Permutation> &basis, std::size_t N)
{
  Series out(N + 1);
  for (std::size_t n = 1; n <= N; ++n)
    out[n] = enumerate_class(basis, n).size();
  return out;
}

/// Taylor coefficients of num/den through z^N by exact rational division.
inline Series series_quotient(const std::vector<long> &num, const std::vector<long> &den, std::size_t N)
{
  using boost::multiprecision::cpp_rational;
  std::vector<cpp_rational> q(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    cpp_rational acc = n < num.size() ? cpp_rational(num[n]) : cpp_rational(0);
    for (std::size_t k = 1; k <= n && k < den.size(); ++k)
      acc -= cpp_rational(den[k]) * q[n - k];
    q[n] = acc / cpp_rational(den[0]);
  }
  Series out(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    if (denominator(q[n]) != 1)
      throw std::logic_error("non-integral coefficient");
    out[n] = numerator(q[n]);
  }
  return out;
}

/// z(z^6 - 7z^5 + 20z^4 - 28z^3 + 20z^2 - 7z + 1) / (1 - 9z + 32z^2 - 59z^3 + 62z^4 - 37z^5 + 13z^6 - 2z^7)
inline Series five_basis_closed_form(std::size_t N)
{
  return series_quotient({0, 1, -7, 20, -28, 20, -7, 1}, {1, -9, 32, -59, 62, -37, 13, -2}, N);
}

// One embedding per line: cells "i-j" or "-".
inline std::set<Embedding> read_embedding_table(const std::string &name)
{
  std::ifstream in(data_path(name));
  std::set<Embedding> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream cells(line);
    Embedding e;
    for (std::string c; cells >> c;) {
      if (c == "-") {
        e.cells.push_back({0, 0});
      } else {
        auto dash = c.find('-');
        e.cells.push_back({std::stoi(c.substr(0, dash)), std::stoi(c.substr(dash + 1))});
      }
    }
    out.insert(e);
  }
  return out;
}

inline std::vector<Permutation> all_up_to(std::size_t n)
{
  std::vector<Permutation> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto &p : all_permutations(k))
      out.push_back(std::move(p));
  return out;
}

/// Members of the closure of `simples` of size 1..n.
inline std::vector<Permutation> closure_up_to(const std::vector<Permutation> &simples, std::size_t n)
{
  std::vector<Permutation> out;
  for (auto &p : all_up_to(n))
    if (in_closure(p, simples))
      out.push_back(std::move(p));
  return out;
}

/// Restriction and term membership for members of a fixed closure, with
/// pattern containment memoized. Every sigma handed in must lie in the closure.
class MemberCache {
public:
  bool restriction(const Permutation &sigma, const Restriction &r)
  {
    if (sigma.empty())
      return false;
    if (r.delta == Delta::plus && is_plus_decomposable(sigma))
      return false;
    if (r.delta == Delta::minus && is_minus_decomposable(sigma))
      return false;
    for (const auto &e : r.avoid)
      if (has(sigma, e))
        return false;
    for (const auto &a : r.contain)
      if (!has(sigma, a))
        return false;
    return true;
  }

  bool term(const Permutation &sigma, const Term &t)
  {
    if (sigma.size() < 2)
      return false;
    const Decomposition &d = split(sigma);
    if (!(d.root == t.root))
      return false;
    for (std::size_t k = 0; k < t.children.size(); ++k)
      if (!restriction(d.children[k], t.children[k]))
        return false;
    return true;
  }

  bool has(const Permutation &sigma, const Permutation &p)
  {
    auto [it, fresh] = contains_.try_emplace({sigma, p}, false);
    if (fresh)
      it->second = contains(sigma, p);
    return it->second;
  }

  const Decomposition &split(const Permutation &sigma)
  {
    auto [it, fresh] = split_.try_emplace(sigma);
    if (fresh)
      it->second = decompose(sigma);
    return it->second;
  }

private:
  std::map<std::pair<Permutation, Permutation>, bool> contains_;
  std::map<Permutation, Decomposition> split_;
};

} // namespace permspec::test
