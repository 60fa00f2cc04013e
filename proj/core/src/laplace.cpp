#include "qjack/laplace.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace qjack {

namespace {

long sum_of_squares(const Partition& la) {
  long s = 0;
  for (int p : la.parts()) s += static_cast<long>(p) * p;
  return s;
}

long weighted_row_sum(const Partition& la) {
  long s = 0;
  for (int i = 1; i <= la.length(); ++i) s += static_cast<long>(i) * la.part(i);
  return s;
}

std::vector<int> remove_one(std::vector<int> parts, int value) {
  auto it = std::find(parts.begin(), parts.end(), value);
  parts.erase(it);
  return parts;
}

Partition sorted_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

} // namespace

RatFun eig(const Partition& la) {
  long w = la.weight();
  return RatFun(IntPoly(std::vector<BigInt>{0, w - 2 * weighted_row_sum(la), sum_of_squares(la)}));
}

RatFun eig_prime(const Partition& la) {
  return RatFun(IntPoly(std::vector<BigInt>{-2 * weighted_row_sum(la), sum_of_squares(la)}),
                IntPoly(2));
}

SymExpr apply_d_p(const SymExpr& f) {
  if (f.basis() != Basis::Power) throw std::invalid_argument("apply_d_p: expected p basis");
  const RatFun a = RatFun::alpha();
  const RatFun a2 = a * a;
  const RatFun diag_scale = a2 - a;  // a(a-1)
  SymExpr r(Basis::Power);
  for (const auto& [la, c] : f.terms()) {
    auto mults = la.multiplicities();
    long k2 = 0;
    for (const auto& [v, m] : mults) k2 += static_cast<long>(v) * v * m;
    if (k2 != 0) r.add_term(la, c * diag_scale * RatFun(k2));
    // Splitting term: remove one part v, insert (i, v-i) for each ordered pair.
    for (const auto& [v, m] : mults) {
      if (v < 2) continue;
      std::vector<int> base = remove_one(la.parts(), v);
      RatFun factor = c * a * RatFun(static_cast<long>(v) * m);
      for (int i = 1; i < v; ++i) {
        std::vector<int> parts = base;
        parts.push_back(i);
        parts.push_back(v - i);
        r.add_term(sorted_partition(std::move(parts)), factor);
      }
    }
    // Joining term: remove parts i and j (ordered pairs), insert i+j.
    for (const auto& [vi, mi] : mults) {
      for (const auto& [vj, mj] : mults) {
        long count = vi == vj ? static_cast<long>(mi) * (mi - 1) : static_cast<long>(mi) * mj;
        if (count == 0) continue;
        std::vector<int> parts = remove_one(remove_one(la.parts(), vi), vj);
        parts.push_back(vi + vj);
        r.add_term(sorted_partition(std::move(parts)),
                   c * a2 * RatFun(static_cast<long>(vi) * vj * count));
      }
    }
  }
  return r;
}

SymExpr apply_d_q(const SymExpr& f) {
  if (f.basis() != Basis::Homog) throw std::invalid_argument("apply_d_q: expected q basis");
  const RatFun two_a = RatFun(IntPoly::monomial(2, 1));
  SymExpr r(Basis::Homog);
  for (const auto& [la, c] : f.terms()) {
    r.add_term(la, c * eig(la));
    const auto& parts = la.parts();
    for (size_t j = 1; j < parts.size(); ++j) {
      for (size_t i = 0; i < j; ++i) {
        for (int k = 1; k <= parts[j]; ++k) {
          std::vector<int> moved = parts;
          moved[i] += k;
          moved[j] -= k;
          r.add_term(sorted_partition(std::move(moved)),
                     c * two_a * RatFun(parts[i] - parts[j] + 2 * k));
        }
      }
    }
  }
  return r;
}

ActionTable::ActionTable(int weight) {
  if (weight < 0) throw std::invalid_argument("ActionTable: negative weight");
  weight_ = weight;
  order_ = revlex_order(weight);
  up_.resize(order_.size());
  for (size_t idx = 0; idx < order_.size(); ++idx) {
    const Partition& la = order_[idx];
    // Aggregate r coefficients over part-value classes (a, b, k): moving k
    // squares from a row of value b to a row of value a, counted
    // m_a m_b (a > b) or m_a (m_a - 1)/2 (a == b) times.
    std::map<Partition, RatFun, PartitionLess> row;
    auto mults = la.multiplicities();
    for (auto ia = mults.begin(); ia != mults.end(); ++ia) {
      for (auto ib = ia; ib != mults.end(); ++ib) {
        int a = ia->first, b = ib->first;
        long count = a == b ? static_cast<long>(ia->second) * (ia->second - 1) / 2
                            : static_cast<long>(ia->second) * ib->second;
        if (count == 0) continue;
        for (int k = 1; k <= b; ++k) {
          std::vector<int> parts = remove_one(remove_one(la.parts(), a), b);
          parts.push_back(a + k);
          if (b - k > 0) parts.push_back(b - k);
          RatFun contrib = RatFun(count * (a - b + 2 * k));
          Partition target = sorted_partition(std::move(parts));
          auto [it, ins] = row.emplace(target, contrib);
          if (!ins) it->second += contrib;
        }
      }
    }
    up_[idx].reserve(row.size());
    for (auto& [mu, rr] : row) {
      auto pos = std::lower_bound(order_.begin(), order_.end(), mu, PartitionLess());
      up_[idx].emplace_back(static_cast<int>(pos - order_.begin()), std::move(rr));
    }
  }
  finish();
}

void ActionTable::finish() {
  index_.clear();
  for (size_t i = 0; i < order_.size(); ++i) index_[order_[i]] = static_cast<int>(i);
  eprime_.resize(order_.size());
  for (size_t i = 0; i < order_.size(); ++i) eprime_[i] = eig_prime(order_[i]);
  down_.assign(order_.size(), {});
  for (size_t i = 0; i < order_.size(); ++i) {
    for (const auto& [j, r] : up_[i]) {
      down_[static_cast<size_t>(j)].emplace_back(static_cast<int>(i), r);
    }
  }
}

int ActionTable::index_of(const Partition& la) const {
  auto it = index_.find(la);
  if (it == index_.end()) throw std::invalid_argument("ActionTable: partition of wrong weight");
  return it->second;
}

const ActionTable& ActionTable::get(int weight) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ActionTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(weight);
  if (it == cache.end()) {
    it = cache.emplace(weight, std::make_unique<ActionTable>(weight)).first;
  }
  return *it->second;
}

ActionTable ActionTable::from_parts(int weight,
                                    std::vector<std::vector<std::pair<int, RatFun>>> up) {
  ActionTable t;
  t.weight_ = weight;
  t.order_ = revlex_order(weight);
  if (up.size() != t.order_.size()) throw std::invalid_argument("ActionTable: bad row count");
  for (const auto& row : up) {
    for (const auto& [j, r] : row) {
      if (j < 0 || j >= static_cast<int>(t.order_.size()))
        throw std::invalid_argument("ActionTable: index out of range");
      (void)r;
    }
  }
  t.up_ = std::move(up);
  t.finish();
  return t;
}

void ActionTable::bump_first_entry() {
  for (auto& row : up_) {
    if (!row.empty()) {
      row.front().second += RatFun(1);
      finish();
      return;
    }
  }
  throw std::logic_error("bump_first_entry: table has no off-diagonal entries");
}

SymExpr apply_dprime(const SymExpr& f) {
  if (f.basis() == Basis::Homog) {
    SymExpr r(Basis::Homog);
    for (const auto& [la, c] : f.terms()) {
      const ActionTable& t = ActionTable::get(la.weight());
      int idx = t.index_of(la);
      r.add_term(la, c * t.eprime_at(idx));
      for (const auto& [j, coeff] : t.up(idx)) {
        r.add_term(t.order()[static_cast<size_t>(j)], c * coeff);
      }
    }
    return r;
  }
  if (f.basis() == Basis::Monomial) {
    SymExpr r(Basis::Monomial);
    for (const auto& [mu, c] : f.terms()) {
      const ActionTable& t = ActionTable::get(mu.weight());
      int idx = t.index_of(mu);
      r.add_term(mu, c * t.eprime_at(idx));
      for (const auto& [i, coeff] : t.down(idx)) {
        r.add_term(t.order()[static_cast<size_t>(i)], c * coeff);
      }
    }
    return r;
  }
  throw std::invalid_argument("apply_dprime: expected q or m basis");
}

SymExpr a_mn(int m, int n) {
  if (m < n || n < 1) throw std::invalid_argument("a_mn: need m >= n >= 1");
  SymExpr acc(Basis::Power);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      SymExpr prod = mul(qn_to_p(m - i), qn_to_p(n - j));
      acc += heis(-(i + j), prod);
    }
  }
  return p_to_q(acc);
}

RatFun a_mn_closed(int m, int n, const Partition& la) {
  if (m < n || n < 1) throw std::invalid_argument("a_mn_closed: need m >= n >= 1");
  if (la.weight() != m + n || la.length() > 2) return RatFun();
  if (!dominance_leq(Partition({m, n}), la)) return RatFun();
  int m1 = la.part(1), n1 = la.part(2);
  long coeff = (m1 == m ? 0 : m1) - n1;
  return RatFun(IntPoly::monomial(coeff, 1));
}

} // namespace qjack
