#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qjack/ratfun.hpp"

namespace qjack {

// Integer partition: weakly decreasing positive parts.  The empty partition
// is allowed and denotes weight zero.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  // Parses "3,1,1"; the empty string is the empty partition.
  static Partition parse(const std::string& text);

  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  // 1-indexed part, zero past the length.
  int part(int i) const;
  bool empty() const { return parts_.empty(); }

  // Multiplicity of the part value v.
  int mult(int v) const;
  std::map<int, int, std::greater<int>> multiplicities() const;
  // z = prod_i i^{m_i} m_i!
  BigInt z() const;
  // prod_i m_i!
  BigInt mult_factorial() const;

  Partition conjugate() const;
  bool contains(const Partition& mu) const;  // diagram inclusion

  std::string to_string() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }

private:
  std::vector<int> parts_;
};

// Strict reverse-lexicographic comparison on equal-weight partitions:
// a > b iff the first index where they differ has a larger part in a.
// (n) is the largest partition of n, (1^n) the smallest.
bool revlex_greater(const Partition& a, const Partition& b);

// Total order for containers: by weight, then reverse-lexicographically
// descending, so iteration visits (n) before (1^n).
struct PartitionLess {
  bool operator()(const Partition& a, const Partition& b) const;
};

// Dominance order.  Partitions of different weights are incomparable, so the
// function returns false whenever the weights differ.
bool dominance_leq(const Partition& mu, const Partition& la);

// All partitions of the given weight in descending reverse-lexicographic
// order: (n) first, (1^n) last.
std::vector<Partition> revlex_order(int weight);

// 1-indexed cell (row, column) of a Young diagram.
struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell& o) const { return row == o.row && col == o.col; }
};

enum class HookKind { Lower, Upper };

// Lower hook  a*(la_i - j) + (la'_j - i + 1)
// Upper hook  a*(la_i - j + 1) + (la'_j - i)
// Throws std::invalid_argument when the cell is outside the diagram.
RatFun hook(const Partition& la, Cell cell, HookKind kind);
RatFun hook_product(const Partition& la, const std::vector<Cell>& cells, HookKind kind);
// Product over the full diagram.
RatFun hook_product_full(const Partition& la, HookKind kind);

std::vector<Cell> cells_of(const Partition& la);

// Split of the cells of mu and la (mu inside la) into the columns that meet
// la/mu ("bottomed") and those that do not.
struct BottomedSplit {
  std::vector<Cell> mu_bottomed, mu_unbottomed;
  std::vector<Cell> la_bottomed, la_unbottomed;
};
BottomedSplit bottomed_split(const Partition& mu, const Partition& la);

// True iff la/mu is a horizontal strip with n cells:
// mu inside la, |la| - |mu| = n, and no column gains more than one cell.
bool is_horizontal_strip(const Partition& mu, const Partition& la, int n);

// Move k squares from row j up to row i (1-indexed, i < j), then re-sort.
struct MoveUp {
  int i = 0;
  int j = 0;
  int k = 0;
};
Partition move_up(const Partition& la, const MoveUp& mv);

// All distinct results of single moves applied to la.
std::set<Partition, PartitionLess> moving_up_set(const Partition& la);
// All partitions nu of the same weight with mu in moving_up_set(nu).
std::set<Partition, PartitionLess> moving_down_set(const Partition& mu);

// A chain mu = step[0], step[1] in moving_up_set(step[0]), ..., step[s] = la.
struct Filtration {
  std::vector<Partition> steps;
  const Partition& start() const { return steps.front(); }
  const Partition& end() const { return steps.back(); }
  int length() const { return static_cast<int>(steps.size()) - 1; }
};

// Every filtration from mu to la.  When mu == la the single length-zero
// filtration is returned; when la does not dominate mu the list is empty.
std::vector<Filtration> enumerate_filtrations(const Partition& mu, const Partition& la);

// Visits every filtration starting at mu whose steps stay dominated by cap
// (pass the weight's maximal partition to visit all of them).
void for_each_filtration_from(const Partition& mu, const Partition& cap,
                              const std::function<void(const Filtration&)>& visit);

// Multiset union of the parts.
Partition union_parts(const Partition& a, const Partition& b);

} // namespace qjack
