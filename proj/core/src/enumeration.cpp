#include "permspec/enumeration.hpp"

#include <stdexcept>

#include "permspec/specification.hpp"

namespace permspec {

GFSystem to_gf_system(const EquationSystem &spec)
{
  const auto index = spec.index();
  GFSystem gf;
  for (const auto &eq : spec.equations) {
    if (!eq.disjoint)
      throw DomainError("equation for " + eq.lhs.key() + " is not disjoint; refusing to count");
    GFSystem::Equation g{eq.lhs.key(), eq.has_one, {}};
    for (const auto &t : eq.terms) {
      std::vector<std::size_t> factors;
      for (const auto &c : t.children) {
        auto it = index.find(c.key());
        if (it == index.end())
          throw InvalidInput("no equation for " + c.key());
        factors.push_back(it->second);
      }
      g.terms.push_back(std::move(factors));
    }
    gf.equations.push_back(std::move(g));
  }
  return gf;
}

CountTable count_table(const EquationSystem &spec, std::size_t N)
{
  CountTable ct;
  ct.order = N;
  ct.gf = to_gf_system(spec);
  const auto &eqs = ct.gf.equations;
  ct.series.assign(eqs.size(), Series(N + 1));
  ct.suffix.resize(eqs.size());
  for (std::size_t e = 0; e < eqs.size(); ++e)
    for (const auto &t : eqs[e].terms)
      ct.suffix[e].emplace_back(t.size(), Series(N + 1));

  // Every child has size >= 1 and every term has >= 2 children, so the size-n
  // coefficients only read coefficients of size < n.
  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t e = 0; e < eqs.size(); ++e) {
      for (std::size_t t = 0; t < eqs[e].terms.size(); ++t) {
        const auto &f = eqs[e].terms[t];
        auto &suf = ct.suffix[e][t];
        for (std::size_t j = f.size() - 1; j-- > 0;) {
          BigInt acc = 0;
          const Series &head = ct.series[f[j]];
          const Series &tail = j + 2 == f.size() ? ct.series[f[j + 1]] : suf[j + 1];
          for (std::size_t m = 1; m < n; ++m)
            if (!head[m].is_zero() && !tail[n - m].is_zero())
              acc += head[m] * tail[n - m];
          suf[j][n] = std::move(acc);
        }
      }
    }
    for (std::size_t e = 0; e < eqs.size(); ++e) {
      BigInt c = (n == 1 && eqs[e].has_one) ? 1 : 0;
      for (const auto &suf : ct.suffix[e])
        c += suf[0][n];
      ct.series[e][n] = std::move(c);
    }
    // the last suffix is the last child's own series
    for (std::size_t e = 0; e < eqs.size(); ++e)
      for (std::size_t t = 0; t < eqs[e].terms.size(); ++t)
        ct.suffix[e][t].back()[n] = ct.series[eqs[e].terms[t].back()][n];
  }
  return ct;
}

Series coefficients(const EquationSystem &spec, std::size_t N)
{
  return count_table(spec, N).top();
}

Series multiply(const Series &a, const Series &b, std::size_t N)
{
  Series out(N + 1);
  for (std::size_t i = 0; i < a.size() && i <= N; ++i) {
    if (a[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b.size() && i + j <= N; ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Series> coefficients_by_iteration(const GFSystem &gf, std::size_t N)
{
  const auto &eqs = gf.equations;
  std::vector<Series> cur(eqs.size(), Series(N + 1));
  for (std::size_t pass = 0; pass <= N; ++pass) {
    std::vector<Series> next(eqs.size(), Series(N + 1));
    for (std::size_t e = 0; e < eqs.size(); ++e) {
      if (eqs[e].has_one && N >= 1)
        next[e][1] = 1;
      for (const auto &f : eqs[e].terms) {
        Series prod = cur[f[0]];
        for (std::size_t j = 1; j < f.size(); ++j)
          prod = multiply(prod, cur[f[j]], N);
        for (std::size_t n = 0; n <= N; ++n)
          next[e][n] += prod[n];
      }
    }
    // pass p is exact through order p + 1, so it must agree with pass p - 1 through order p
    for (std::size_t e = 0; pass > 0 && e < eqs.size(); ++e)
      for (std::size_t n = 0; n <= std::min(pass, N); ++n)
        if (next[e][n] != cur[e][n])
          throw std::logic_error("fixed-point iteration is not converging");
    cur = std::move(next);
  }
  return cur;
}

Series quadratic_residual(const std::vector<Permutation> &simples, std::size_t N)
{
  const Series C = coefficients(substitution_closed_spec(simples), N);
  Series S(N + 1);
  for (const auto &s : simples) {
    Series power = C;
    for (std::size_t k = 1; k < s.size(); ++k)
      power = multiply(power, C, N);
    for (std::size_t n = 0; n <= N; ++n)
      S[n] += power[n];
  }
  Series factor = S;
  factor[0] -= 1;
  if (N >= 1)
    factor[1] += 1;
  Series r = multiply(C, C, N);
  Series lin = multiply(factor, C, N);
  for (std::size_t n = 0; n <= N; ++n)
    r[n] += lin[n] + S[n];
  if (N >= 1)
    r[1] += 1;
  return r;
}

} // namespace permspec
