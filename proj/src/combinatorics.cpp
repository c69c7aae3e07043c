#include "randturns/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace randturns {

namespace {

std::string cell_name(int row, int col) {
  return "(" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
}

// Column lengths of the transposed shape.
std::vector<int> conjugate(const Shape& shape) {
  std::vector<int> conj(shape.parts.empty() ? 0 : shape.parts.front(), 0);
  for (int part : shape.parts)
    for (int j = 0; j < part; ++j) ++conj[j];
  return conj;
}

}  // namespace

int Shape::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Shape StandardTableau::shape() const {
  Shape s;
  s.parts.reserve(rows.size());
  for (const auto& row : rows) s.parts.push_back(static_cast<int>(row.size()));
  return s;
}

int StandardTableau::size() const {
  int total = 0;
  for (const auto& row : rows) total += static_cast<int>(row.size());
  return total;
}

void validate(const Permutation& perm) {
  const int n = perm.size();
  std::vector<bool> seen(n, false);
  for (int value : perm.entries) {
    if (value < 1 || value > n)
      throw validation_error("permutation entry " + std::to_string(value) +
                             " outside 1.." + std::to_string(n));
    if (seen[value - 1])
      throw validation_error("permutation entry " + std::to_string(value) +
                             " repeated");
    seen[value - 1] = true;
  }
}

void validate(const Shape& shape) {
  for (std::size_t i = 0; i < shape.parts.size(); ++i) {
    if (shape.parts[i] < 1)
      throw validation_error("shape part " + std::to_string(shape.parts[i]) +
                             " is not positive");
    if (i > 0 && shape.parts[i] > shape.parts[i - 1])
      throw validation_error("shape parts must be weakly decreasing");
  }
}

void validate(const StandardTableau& tableau) {
  validate(tableau.shape());
  const int n = tableau.size();
  std::vector<bool> seen(n, false);
  for (std::size_t r = 0; r < tableau.rows.size(); ++r) {
    const auto& row = tableau.rows[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      const int value = row[c];
      if (value < 1 || value > n)
        throw validation_error("tableau entry " + std::to_string(value) +
                               " at " + cell_name(r, c) + " outside 1.." +
                               std::to_string(n));
      if (seen[value - 1])
        throw validation_error("tableau entry " + std::to_string(value) +
                               " repeated");
      seen[value - 1] = true;
      if (c > 0 && row[c - 1] >= value)
        throw validation_error("tableau row not increasing at " +
                               cell_name(r, c));
      if (r > 0 && tableau.rows[r - 1][c] >= value)
        throw validation_error("tableau column not increasing at " +
                               cell_name(r, c));
    }
  }
}

void validate(const TableauPair& pair) {
  validate(pair.p);
  validate(pair.q);
  if (pair.p.shape() != pair.q.shape())
    throw validation_error("tableau pair shapes differ");
}

BigInt factorial(int n) {
  BigInt result = 1;
  for (int k = 2; k <= n; ++k) result *= k;
  return result;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;  // exact: product of j consecutive integers
  }
  return result;
}

int lis_length(const Permutation& perm) {
  validate(perm);
  // pile_tops[i] is the smallest tail of an increasing subsequence of
  // length i+1; the number of piles is the LIS length.
  std::vector<int> pile_tops;
  for (int value : perm.entries) {
    auto it = std::lower_bound(pile_tops.begin(), pile_tops.end(), value);
    if (it == pile_tops.end())
      pile_tops.push_back(value);
    else
      *it = value;
  }
  return static_cast<int>(pile_tops.size());
}

TableauPair rsk_forward(const Permutation& perm) {
  validate(perm);
  TableauPair pair;
  auto& p_rows = pair.p.rows;
  auto& q_rows = pair.q.rows;
  for (int step = 0; step < perm.size(); ++step) {
    int value = perm.entries[step];
    std::size_t row = 0;
    for (;; ++row) {
      if (row == p_rows.size()) {
        p_rows.push_back({value});
        q_rows.push_back({step + 1});
        break;
      }
      auto& cells = p_rows[row];
      auto it = std::lower_bound(cells.begin(), cells.end(), value);
      if (it == cells.end()) {
        cells.push_back(value);
        q_rows[row].push_back(step + 1);
        break;
      }
      std::swap(*it, value);  // bump and continue into the next row
    }
  }
  return pair;
}

Permutation rsk_inverse(const TableauPair& pair) {
  validate(pair);
  auto p_rows = pair.p.rows;
  auto q_rows = pair.q.rows;
  const int n = pair.p.size();
  Permutation result;
  result.entries.assign(n, 0);
  for (int step = n; step >= 1; --step) {
    // The recording entry `step` sits at the end of its row.
    int row = -1;
    for (std::size_t r = 0; r < q_rows.size(); ++r) {
      if (!q_rows[r].empty() && q_rows[r].back() == step) {
        row = static_cast<int>(r);
        break;
      }
    }
    if (row < 0)
      throw validation_error("recording tableau misses step " +
                             std::to_string(step));
    q_rows[row].pop_back();
    int value = p_rows[row].back();
    p_rows[row].pop_back();
    for (int r = row - 1; r >= 0; --r) {
      // Reverse bump: displace the rightmost entry smaller than value.
      auto& cells = p_rows[r];
      auto it = std::lower_bound(cells.begin(), cells.end(), value);
      std::swap(*(it - 1), value);
    }
    result.entries[step - 1] = value;
    while (!p_rows.empty() && p_rows.back().empty()) {
      p_rows.pop_back();
      q_rows.pop_back();
    }
  }
  return result;
}

BigInt syt_count(const Shape& shape) {
  validate(shape);
  const std::vector<int> conj = conjugate(shape);
  BigInt hooks = 1;
  for (int i = 0; i < shape.rows(); ++i)
    for (int j = 0; j < shape.parts[i]; ++j)
      hooks *= shape.parts[i] - j + conj[j] - i - 1;
  return factorial(shape.weight()) / hooks;  // exact division
}

std::vector<StandardTableau> enumerate_syt(const Shape& shape,
                                           const Caps& caps) {
  validate(shape);
  const int n = shape.weight();
  if (!caps.unlimited && n > caps.syt_enum_max_weight)
    throw resource_limit_error(
        "enumerate_syt: weight " + std::to_string(n) + " exceeds cap " +
        std::to_string(caps.syt_enum_max_weight));

  std::vector<StandardTableau> result;
  StandardTableau tableau;
  tableau.rows.assign(shape.rows(), {});
  std::vector<int> filled(shape.rows(), 0);

  // Place 1..n one at a time; partial fillings must keep row lengths
  // weakly decreasing, which is exactly the standardness condition.
  auto place = [&](auto&& self, int value) -> void {
    if (value > n) {
      result.push_back(tableau);
      return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
      if (filled[r] == shape.parts[r]) continue;
      if (r > 0 && filled[r] == filled[r - 1]) continue;
      tableau.rows[r].push_back(value);
      ++filled[r];
      self(self, value + 1);
      --filled[r];
      tableau.rows[r].pop_back();
    }
  };
  place(place, 1);
  return result;
}

void for_each_partition(int n, int max_parts,
                        const std::function<void(const Shape&)>& fn) {
  if (n < 0) throw validation_error("partition of a negative integer");
  if (max_parts < 1) throw validation_error("max_parts must be positive");
  Shape current;
  auto descend = [&](auto&& self, int remaining, int max_part,
                     int slots) -> void {
    if (remaining == 0) {
      fn(current);
      return;
    }
    if (slots == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      if (static_cast<long long>(part) * slots < remaining) break;
      current.parts.push_back(part);
      self(self, remaining - part, part, slots - 1);
      current.parts.pop_back();
    }
  };
  descend(descend, n, n, max_parts);
}

std::vector<Shape> partitions(int n, int max_parts) {
  std::vector<Shape> result;
  for_each_partition(n, max_parts,
                     [&](const Shape& s) { result.push_back(s); });
  return result;
}

BigInt f_np_bruteforce(int n, int p, const Caps& caps) {
  if (n < 0 || p < 0) throw validation_error("f_np arguments must be >= 0");
  if (!caps.unlimited && n > caps.bruteforce_max_n)
    throw resource_limit_error("f_np_bruteforce: n " + std::to_string(n) +
                               " exceeds cap " +
                               std::to_string(caps.bruteforce_max_n));
  Permutation perm;
  perm.entries.resize(n);
  std::iota(perm.entries.begin(), perm.entries.end(), 1);
  BigInt count = 0;
  do {
    if (lis_length(perm) <= p) ++count;
  } while (std::next_permutation(perm.entries.begin(), perm.entries.end()));
  return count;
}

BigInt f_np_via_shapes(int n, int p) {
  if (n < 0 || p < 0) throw validation_error("f_np arguments must be >= 0");
  if (n == 0) return 1;
  if (p == 0) return 0;
  BigInt total = 0;
  for_each_partition(n, p, [&](const Shape& shape) {
    const BigInt count = syt_count(shape);
    total += count * count;
  });
  return total;
}

Permutation random_permutation(int n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return random_permutation(n, gen);
}

Permutation random_permutation(int n, std::mt19937_64& gen) {
  if (n < 1) throw validation_error("random_permutation requires n >= 1");
  Permutation perm;
  perm.entries.resize(n);
  std::iota(perm.entries.begin(), perm.entries.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng::uniform_index(gen, i + 1));
    std::swap(perm.entries[i], perm.entries[j]);
  }
  return perm;
}

}  // namespace randturns
