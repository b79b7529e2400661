#pragma once

#include <vector>

#include "permspec/permutation.hpp"

namespace permspec {

/// Consecutive intervals of gamma covering 1..|gamma|.
using BlockDecomposition = std::vector<Interval>;

/// An embedding of gamma in pi: one cell per position of pi, each an interval
/// of gamma or empty (Interval{0, 0}).
struct Embedding {
  std::vector<Interval> cells;

  static bool is_empty_cell(Interval c) { return c.i == 0; }
  /// Normalized block of gamma in cell k (1-based); empty for an empty cell.
  Permutation pattern(const Permutation &gamma, std::size_t k) const;

  auto operator<=>(const Embedding &) const = default;
};

std::vector<BlockDecomposition> block_decompositions(const Permutation &gamma);

std::vector<Embedding> embeddings_for(const Permutation &gamma, const BlockDecomposition &d,
                                      const Permutation &pi);

/// Sorted, duplicate-free.
std::vector<Embedding> all_embeddings(const Permutation &gamma, const Permutation &pi);

/// Checks the defining properties of an embedding; used by tests and debug builds.
bool is_valid_embedding(const Permutation &gamma, const Permutation &pi, const Embedding &e);

} // namespace permspec
