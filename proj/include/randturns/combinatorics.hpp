#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "randturns/common.hpp"

namespace randturns {

// One-line notation; entries are a rearrangement of {1, ..., n}.
struct Permutation {
  std::vector<int> entries;

  int size() const { return static_cast<int>(entries.size()); }
  bool operator==(const Permutation&) const = default;
};

// Integer partition written as weakly decreasing positive parts.
struct Shape {
  std::vector<int> parts;

  int rows() const { return static_cast<int>(parts.size()); }
  int weight() const;
  bool operator==(const Shape&) const = default;
};

// Partition shape filled with 1..n, strictly increasing along rows and down
// columns (English convention).
struct StandardTableau {
  std::vector<std::vector<int>> rows;

  Shape shape() const;
  int size() const;
  bool operator==(const StandardTableau&) const = default;
};

// Insertion/recording pair; both tableaux share one shape.
struct TableauPair {
  StandardTableau p;
  StandardTableau q;

  bool operator==(const TableauPair&) const = default;
};

void validate(const Permutation& perm);
void validate(const Shape& shape);
void validate(const StandardTableau& tableau);
void validate(const TableauPair& pair);

BigInt factorial(int n);
BigInt binomial(int n, int k);

// Length of the longest strictly increasing subsequence, by patience-sorting
// pile counting in O(n log n).
int lis_length(const Permutation& perm);

// Schensted row insertion. The first row of the insertion tableau has length
// lis_length(perm), and both tableaux share a shape.
TableauPair rsk_forward(const Permutation& perm);

// Exact inverse of rsk_forward.
Permutation rsk_inverse(const TableauPair& pair);

// Number of standard tableaux of the shape (hook length formula).
BigInt syt_count(const Shape& shape);

// Every standard tableau of the shape. Weight is capped by
// caps.syt_enum_max_weight.
std::vector<StandardTableau> enumerate_syt(const Shape& shape,
                                           const Caps& caps = {});

// Every partition of n with at most max_parts parts, each exactly once.
void for_each_partition(int n, int max_parts,
                        const std::function<void(const Shape&)>& fn);
std::vector<Shape> partitions(int n, int max_parts);

// Permutations of {1..n} with LIS length at most p, by exhaustive scan over
// all n! permutations. Capped by caps.bruteforce_max_n.
BigInt f_np_bruteforce(int n, int p, const Caps& caps = {});

// The same count as the sum of squared tableau numbers over shapes of n with
// at most p rows; scales far beyond the brute-force range.
BigInt f_np_via_shapes(int n, int p);

// Uniform permutation by Fisher-Yates shuffle; deterministic given the seed.
Permutation random_permutation(int n, std::uint64_t seed);
Permutation random_permutation(int n, std::mt19937_64& gen);

}  // namespace randturns
