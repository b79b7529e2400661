#include "permspec/sampler.hpp"

#include <boost/random/uniform_int_distribution.hpp>

namespace permspec {

Sampler::Sampler(const EquationSystem &spec, std::size_t N) : tables_(count_table(spec, N))
{
  for (const auto &eq : spec.equations) {
    std::vector<Permutation> roots;
    for (const auto &t : eq.terms)
      roots.push_back(t.root);
    term_roots_.push_back(std::move(roots));
  }
}

const BigInt &Sampler::count(std::size_t n) const
{
  if (n > tables_.order)
    throw DomainError("size " + std::to_string(n) + " exceeds the table bound " + std::to_string(tables_.order));
  return tables_.top()[n];
}

// index 0 is the atom, index t + 1 is term t
Sampler::Choice Sampler::top_choice(std::size_t e, std::size_t n) const
{
  Choice c;
  c.weights.push_back(n == 1 && tables_.gf.equations[e].has_one ? 1 : 0);
  for (const auto &suf : tables_.suffix[e])
    c.weights.push_back(suf[0][n]);
  c.total = tables_.series[e][n];
  return c;
}

// size m of child j given r points left for children j..: index m - 1
Sampler::Choice Sampler::size_choice(std::size_t e, std::size_t t, std::size_t j, std::size_t r) const
{
  const auto &f = tables_.gf.equations[e].terms[t];
  const auto &suf = tables_.suffix[e][t];
  Choice c;
  for (std::size_t m = 1; m < r; ++m)
    c.weights.push_back(tables_.series[f[j]][m] * suf[j + 1][r - m]);
  c.total = suf[j][r];
  return c;
}

namespace {

std::size_t pick(const std::vector<BigInt> &weights, const BigInt &total, std::mt19937_64 &rng)
{
  boost::random::uniform_int_distribution<BigInt> dist(0, total - 1);
  BigInt x = dist(rng);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (x < weights[i])
      return i;
    x -= weights[i];
  }
  throw std::logic_error("sampler weights do not add up to their total");
}

} // namespace

Permutation Sampler::draw(std::size_t e, std::size_t n, std::mt19937_64 &rng) const
{
  Choice top = top_choice(e, n);
  std::size_t idx = pick(top.weights, top.total, rng);
  if (idx == 0)
    return Permutation{1};
  std::size_t t = idx - 1;
  const auto &f = tables_.gf.equations[e].terms[t];
  std::vector<Permutation> blocks;
  std::size_t r = n;
  for (std::size_t j = 0; j + 1 < f.size(); ++j) {
    Choice c = size_choice(e, t, j, r);
    std::size_t m = pick(c.weights, c.total, rng) + 1;
    blocks.push_back(draw(f[j], m, rng));
    r -= m;
  }
  blocks.push_back(draw(f.back(), r, rng));
  return substitute(term_roots_[e][t], blocks);
}

Permutation Sampler::sample(std::size_t n, std::mt19937_64 &rng) const
{
  if (count(n).is_zero())
    throw DomainError("the class has no permutation of size " + std::to_string(n));
  return draw(0, n, rng);
}

const Sampler::Distribution &Sampler::spread(std::size_t e, std::size_t n, Memo &memo) const
{
  if (auto it = memo.find({e, n}); it != memo.end())
    return it->second;
  Distribution out;
  Choice top = top_choice(e, n);
  if (!top.total.is_zero()) {
    if (!top.weights[0].is_zero())
      out.emplace_back(Permutation{1}, Rational(top.weights[0], top.total));
    for (std::size_t t = 0; t + 1 < top.weights.size(); ++t) {
      if (top.weights[t + 1].is_zero())
        continue;
      const auto &f = tables_.gf.equations[e].terms[t];
      // partial derivations: blocks chosen so far with their probability
      std::vector<std::pair<std::vector<Permutation>, Rational>> partial{{{}, Rational(top.weights[t + 1], top.total)}};
      std::vector<std::size_t> left{n};
      for (std::size_t j = 0; j < f.size(); ++j) {
        std::vector<std::pair<std::vector<Permutation>, Rational>> next;
        std::vector<std::size_t> next_left;
        for (std::size_t p = 0; p < partial.size(); ++p) {
          std::size_t r = left[p];
          std::vector<std::pair<std::size_t, Rational>> sizes;
          if (j + 1 == f.size()) {
            sizes.emplace_back(r, Rational(1));
          } else {
            Choice c = size_choice(e, t, j, r);
            for (std::size_t m = 1; m < r; ++m)
              if (!c.weights[m - 1].is_zero())
                sizes.emplace_back(m, Rational(c.weights[m - 1], c.total));
          }
          for (const auto &[m, pm] : sizes)
            for (const auto &[child, pc] : spread(f[j], m, memo)) {
              auto blocks = partial[p].first;
              blocks.push_back(child);
              next.emplace_back(std::move(blocks), partial[p].second * pm * pc);
              next_left.push_back(r - m);
            }
        }
        partial = std::move(next);
        left = std::move(next_left);
      }
      for (auto &[blocks, prob] : partial)
        out.emplace_back(substitute(term_roots_[e][t], blocks), prob);
    }
  }
  return memo.emplace(std::make_pair(e, n), std::move(out)).first->second;
}

std::vector<std::pair<Permutation, Rational>> Sampler::derivation_distribution(std::size_t n) const
{
  count(n);
  Memo memo;
  return spread(0, n, memo);
}

} // namespace permspec
