#include "permspec/embedding.hpp"

#include <algorithm>
#include <cassert>

namespace permspec {

Permutation Embedding::pattern(const Permutation &gamma, std::size_t k) const
{
  return block(gamma, cells[k - 1]);
}

namespace {

void extend(const Permutation &gamma, int next, BlockDecomposition &cur,
            std::vector<BlockDecomposition> &out)
{
  if (next > static_cast<int>(gamma.size())) {
    out.push_back(cur);
    return;
  }
  for (const auto &iv : intervals_from(gamma, next)) {
    cur.push_back(iv);
    extend(gamma, iv.j + 1, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<BlockDecomposition> block_decompositions(const Permutation &gamma)
{
  if (gamma.empty())
    throw InvalidInput("block_decompositions: empty permutation");
  std::vector<BlockDecomposition> out;
  BlockDecomposition cur;
  extend(gamma, 1, cur, out);
  return out;
}

std::vector<Embedding> embeddings_for(const Permutation &gamma, const BlockDecomposition &d,
                                      const Permutation &pi)
{
  std::vector<Embedding> out;
  if (d.size() > pi.size())
    return out;
  std::vector<int> reps;
  for (const auto &iv : d)
    reps.push_back(gamma(iv.i));
  Permutation skeleton = normalize(reps);
  for (const auto &occ : occurrences(pi, skeleton)) {
    Embedding e{std::vector<Interval>(pi.size(), Interval{0, 0})};
    for (std::size_t t = 0; t < occ.size(); ++t)
      e.cells[occ[t] - 1] = d[t];
    assert(is_valid_embedding(gamma, pi, e));
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Embedding> all_embeddings(const Permutation &gamma, const Permutation &pi)
{
  std::vector<Embedding> out;
  for (const auto &d : block_decompositions(gamma)) {
    auto part = embeddings_for(gamma, d, pi);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_valid_embedding(const Permutation &gamma, const Permutation &pi, const Embedding &e)
{
  if (e.cells.size() != pi.size())
    return false;
  int next = 1;
  std::vector<Permutation> blocks;
  for (const auto &c : e.cells) {
    if (Embedding::is_empty_cell(c)) {
      blocks.emplace_back();
      continue;
    }
    if (c.i != next || c.j < c.i || c.j > static_cast<int>(gamma.size()))
      return false;
    next = c.j + 1;
    blocks.push_back(block(gamma, c));
  }
  if (next != static_cast<int>(gamma.size()) + 1)
    return false;
  return generalized_substitute(pi, blocks) == gamma;
}

} // namespace permspec
