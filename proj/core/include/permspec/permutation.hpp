#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permspec {

/// Raised for malformed arguments (duplicate entries, non-simple node sets, ...).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an input is well formed but the requested object does not exist
/// (trivial class, bound exceeded, no permutation of the requested size).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A permutation of [1..n] in one-line notation, values 1-based.
/// The empty permutation is the default-constructed value.
class Permutation {
public:
  Permutation() = default;
  /// Throws InvalidInput unless `values` is a bijection of 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  /// 1-based access, as in the usual notation pi(i).
  int operator()(std::size_t i) const { return v_[i - 1]; }
  const std::vector<int> &values() const { return v_; }

  /// Order by size first, then lexicographically.
  std::strong_ordering operator<=>(const Permutation &o) const;
  bool operator==(const Permutation &o) const = default;

  /// "3142" when every value is a single digit, else "10.2.1..." style.
  std::string compact() const;
  /// "3 1 4 2"
  std::string spaced() const;

private:
  std::vector<int> v_;
};

std::ostream &operator<<(std::ostream &os, const Permutation &p);

/// Parses "3 1 4 2", "3,1,4,2" or the digit form "3142" (n <= 9).
Permutation parse_permutation(std::string_view text);

/// Order-isomorphic permutation of a sequence of distinct integers.
Permutation normalize(std::span<const int> s);

/// All increasing index tuples (1-based) I with sigma_I order-isomorphic to pi.
std::vector<std::vector<int>> occurrences(const Permutation &sigma, const Permutation &pi);
/// pi <= sigma in the pattern order.
bool contains(const Permutation &sigma, const Permutation &pi);

struct Interval {
  int i = 0;
  int j = 0;
  auto operator<=>(const Interval &) const = default;
  int length() const { return j - i + 1; }
};

/// All intervals (i, j) of gamma starting at index i.
std::vector<Interval> intervals_from(const Permutation &gamma, int i);
/// Normalized pattern of gamma restricted to an index interval.
Permutation block(const Permutation &gamma, Interval iv);

bool is_simple(const Permutation &pi);

/// Inflation sigma[blocks...]; every block must be non-empty.
Permutation substitute(const Permutation &sigma, std::span<const Permutation> blocks);
/// Inflation where empty blocks are dropped.
Permutation generalized_substitute(const Permutation &sigma, std::span<const Permutation> blocks);

bool is_plus_decomposable(const Permutation &pi);
bool is_minus_decomposable(const Permutation &pi);

/// Top-level substitution decomposition. The root is 12 for a direct sum, 21
/// for a skew sum, or a simple permutation.
struct Decomposition {
  Permutation root;
  std::vector<Permutation> children;
};

const Permutation &plus_root();
const Permutation &minus_root();

/// Throws DomainError when |pi| <= 1.
Decomposition decompose(const Permutation &pi);

struct DecompositionTree {
  enum class Kind { leaf, plus, minus, prime };
  Kind kind = Kind::leaf;
  Permutation label; // 12, 21 or the simple root; empty for leaves
  std::vector<DecompositionTree> children;

  Permutation permutation() const;
};

DecompositionTree decomposition_tree(const Permutation &pi);

/// Every prime node of the decomposition tree of sigma is labelled by an element of S.
bool in_closure(const Permutation &sigma, const std::vector<Permutation> &simples);

/// All permutations of size n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

} // namespace permspec
