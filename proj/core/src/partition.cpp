#include "qjack/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qjack {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  if (text.empty()) return Partition();
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw std::invalid_argument("Partition: empty part in '" + text + "'");
    size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("Partition: bad part '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("Partition: bad part '" + tok + "'");
    parts.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("Partition::part: rows are 1-indexed");
  if (i > length()) return 0;
  return parts_[static_cast<size_t>(i) - 1];
}

int Partition::mult(int v) const {
  int m = 0;
  for (int p : parts_) m += (p == v);
  return m;
}

std::map<int, int, std::greater<int>> Partition::multiplicities() const {
  std::map<int, int, std::greater<int>> m;
  for (int p : parts_) ++m[p];
  return m;
}

BigInt Partition::z() const {
  BigInt r = 1;
  for (const auto& [v, m] : multiplicities()) {
    for (int t = 0; t < m; ++t) r *= v;
    r *= factorial(static_cast<unsigned>(m));
  }
  return r;
}

BigInt Partition::mult_factorial() const {
  BigInt r = 1;
  for (const auto& [v, m] : multiplicities()) r *= factorial(static_cast<unsigned>(m));
  return r;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> conj(static_cast<size_t>(parts_[0]));
  for (int col = 1; col <= parts_[0]; ++col) {
    int h = 0;
    for (int p : parts_) {
      if (p >= col) ++h;
      else break;
    }
    conj[static_cast<size_t>(col) - 1] = h;
  }
  return Partition(std::move(conj));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i) {
    if (mu.part(i) > part(i)) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  return out.str();
}

bool revlex_greater(const Partition& a, const Partition& b) {
  int n = std::max(a.length(), b.length());
  for (int i = 1; i <= n; ++i) {
    if (a.part(i) != b.part(i)) return a.part(i) > b.part(i);
  }
  return false;
}

bool PartitionLess::operator()(const Partition& a, const Partition& b) const {
  int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  return revlex_greater(a, b);
}

bool dominance_leq(const Partition& mu, const Partition& la) {
  if (mu.weight() != la.weight()) return false;
  int n = std::max(mu.length(), la.length());
  long sm = 0, sl = 0;
  for (int i = 1; i <= n; ++i) {
    sm += mu.part(i);
    sl += la.part(i);
    if (sm > sl) return false;
  }
  return true;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

} // namespace

std::vector<Partition> revlex_order(int weight) {
  if (weight < 0) throw std::invalid_argument("revlex_order: negative weight");
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(weight, weight, acc, out);
  return out;
}

RatFun hook(const Partition& la, Cell cell, HookKind kind) {
  if (cell.row < 1 || cell.col < 1 || cell.col > la.part(cell.row))
    throw std::invalid_argument("hook: cell outside diagram");
  Partition conj = la.conjugate();
  int arm_base = la.part(cell.row) - cell.col;
  int leg_base = conj.part(cell.col) - cell.row;
  if (kind == HookKind::Lower) {
    // a*(arm) + leg + 1
    return RatFun(IntPoly(std::vector<BigInt>{leg_base + 1, arm_base}));
  }
  // a*(arm + 1) + leg
  return RatFun(IntPoly(std::vector<BigInt>{leg_base, arm_base + 1}));
}

RatFun hook_product(const Partition& la, const std::vector<Cell>& cells, HookKind kind) {
  RatFun r(1);
  for (const Cell& c : cells) r *= hook(la, c, kind);
  return r;
}

RatFun hook_product_full(const Partition& la, HookKind kind) {
  return hook_product(la, cells_of(la), kind);
}

std::vector<Cell> cells_of(const Partition& la) {
  std::vector<Cell> cells;
  for (int i = 1; i <= la.length(); ++i) {
    for (int j = 1; j <= la.part(i); ++j) cells.push_back(Cell{i, j});
  }
  return cells;
}

BottomedSplit bottomed_split(const Partition& mu, const Partition& la) {
  if (!la.contains(mu)) throw std::invalid_argument("bottomed_split: mu not contained in la");
  Partition lc = la.conjugate();
  Partition mc = mu.conjugate();
  auto column_bottomed = [&](int col) { return lc.part(col) > mc.part(col); };
  BottomedSplit split;
  for (const Cell& c : cells_of(mu)) {
    (column_bottomed(c.col) ? split.mu_bottomed : split.mu_unbottomed).push_back(c);
  }
  for (const Cell& c : cells_of(la)) {
    (column_bottomed(c.col) ? split.la_bottomed : split.la_unbottomed).push_back(c);
  }
  return split;
}

bool is_horizontal_strip(const Partition& mu, const Partition& la, int n) {
  if (n < 0) return false;
  if (la.weight() - mu.weight() != n) return false;
  if (!la.contains(mu)) return false;
  // Equivalent to la_i >= mu_i >= la_{i+1}: each column gains at most one cell.
  for (int i = 1; i <= la.length(); ++i) {
    if (mu.part(i) < la.part(i + 1)) return false;
  }
  return true;
}

Partition move_up(const Partition& la, const MoveUp& mv) {
  if (mv.i < 1 || mv.j <= mv.i) throw std::invalid_argument("move_up: need 1 <= i < j");
  if (mv.j > la.length()) throw std::invalid_argument("move_up: row j outside partition");
  if (mv.k < 1 || mv.k > la.part(mv.j)) throw std::invalid_argument("move_up: need 1 <= k <= la_j");
  std::vector<int> parts = la.parts();
  parts[static_cast<size_t>(mv.i) - 1] += mv.k;
  parts[static_cast<size_t>(mv.j) - 1] -= mv.k;
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

std::set<Partition, PartitionLess> moving_up_set(const Partition& la) {
  std::set<Partition, PartitionLess> out;
  for (int j = 2; j <= la.length(); ++j) {
    for (int i = 1; i < j; ++i) {
      for (int k = 1; k <= la.part(j); ++k) {
        out.insert(move_up(la, MoveUp{i, j, k}));
      }
    }
  }
  return out;
}

std::set<Partition, PartitionLess> moving_down_set(const Partition& mu) {
  std::set<Partition, PartitionLess> out;
  for (const Partition& nu : revlex_order(mu.weight())) {
    if (moving_up_set(nu).count(mu)) out.insert(nu);
  }
  return out;
}

namespace {

void filtration_dfs(const Partition& cap, std::vector<Partition>& chain,
                    const std::function<void(const Filtration&)>& visit) {
  Filtration f{chain};
  visit(f);
  for (const Partition& nu : moving_up_set(chain.back())) {
    if (!dominance_leq(nu, cap)) continue;
    chain.push_back(nu);
    filtration_dfs(cap, chain, visit);
    chain.pop_back();
  }
}

} // namespace

void for_each_filtration_from(const Partition& mu, const Partition& cap,
                              const std::function<void(const Filtration&)>& visit) {
  if (mu.weight() != cap.weight() || !dominance_leq(mu, cap)) return;
  std::vector<Partition> chain{mu};
  filtration_dfs(cap, chain, visit);
}

std::vector<Filtration> enumerate_filtrations(const Partition& mu, const Partition& la) {
  std::vector<Filtration> out;
  for_each_filtration_from(mu, la, [&](const Filtration& f) {
    if (f.end() == la) out.push_back(f);
  });
  return out;
}

Partition union_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

} // namespace qjack
