#include "qjack/jack.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qjack/linalg.hpp"

namespace qjack {

namespace {
std::mutex jack_mutex;

RatFun alpha_pow(int n) { return RatFun(IntPoly::monomial(1, n)); }
}  // namespace

char norm_char(JackNorm n) {
  switch (n) {
    case JackNorm::P: return 'P';
    case JackNorm::Q: return 'Q';
    case JackNorm::J: return 'J';
  }
  throw std::logic_error("norm_char: bad norm");
}

std::optional<JackNorm> norm_from_char(char c) {
  switch (c) {
    case 'P': return JackNorm::P;
    case 'Q': return JackNorm::Q;
    case 'J': return JackNorm::J;
    default: return std::nullopt;
  }
}

std::string method_name(JackMethod m) {
  switch (m) {
    case JackMethod::Iteration: return "iteration";
    case JackMethod::Determinant: return "determinant";
    case JackMethod::GramSchmidt: return "gram-schmidt";
    case JackMethod::Filtration: return "filtration";
  }
  throw std::logic_error("method_name: bad method");
}

std::optional<JackMethod> method_from_name(const std::string& name) {
  if (name == "iteration") return JackMethod::Iteration;
  if (name == "determinant") return JackMethod::Determinant;
  if (name == "gram-schmidt") return JackMethod::GramSchmidt;
  if (name == "filtration") return JackMethod::Filtration;
  return std::nullopt;
}

RatFun norm_scalar(const Partition& la, JackNorm norm) {
  switch (norm) {
    case JackNorm::P: return RatFun(1);
    case JackNorm::Q:
      return hook_product_full(la, HookKind::Lower) / hook_product_full(la, HookKind::Upper);
    case JackNorm::J: return hook_product_full(la, HookKind::Lower);
  }
  throw std::logic_error("norm_scalar: bad norm");
}

RatFun self_inner(const Partition& la, JackNorm norm) {
  RatFun low = hook_product_full(la, HookKind::Lower);
  RatFun up = hook_product_full(la, HookKind::Upper);
  switch (norm) {
    case JackNorm::P: return up / low;
    case JackNorm::Q: return low / up;
    case JackNorm::J: return low * up;
  }
  throw std::logic_error("self_inner: bad norm");
}

JackExpansion jack_iteration(const Partition& la) {
  return jack_iteration_with_table(la, ActionTable::get(la.weight()));
}

JackExpansion jack_iteration_with_table(const Partition& la, const ActionTable& table) {
  if (table.weight() != la.weight()) {
    throw std::invalid_argument("jack_iteration: table weight mismatch");
  }
  const int idx0 = table.index_of(la);
  const RatFun& ep_la = table.eprime_at(idx0);
  std::vector<RatFun> c(static_cast<size_t>(idx0) + 1);
  c[static_cast<size_t>(idx0)] = RatFun(1);
  for (int idx = idx0 - 1; idx >= 0; --idx) {
    RatFun numer;
    for (const auto& [src, r] : table.down(idx)) {
      // Sources sit later in the sweep order; past idx0 the coefficient is 0.
      if (src <= idx0 && !c[static_cast<size_t>(src)].is_zero()) {
        numer += c[static_cast<size_t>(src)] * r;
      }
    }
    if (numer.is_zero()) continue;
    RatFun denom = ep_la - table.eprime_at(idx);
    if (denom.is_zero()) {
      throw std::logic_error("jack_iteration: equal e' with nonzero coupling");
    }
    c[static_cast<size_t>(idx)] = numer / denom;
  }
  JackExpansion out{la, JackNorm::Q, JackMethod::Iteration, SymExpr(Basis::Homog)};
  for (int idx = 0; idx <= idx0; ++idx) {
    if (!c[static_cast<size_t>(idx)].is_zero()) {
      out.expr.add_term(table.order()[static_cast<size_t>(idx)], c[static_cast<size_t>(idx)]);
    }
  }
  return out;
}

JackExpansion jack_determinant(const Partition& la) {
  const ActionTable& table = ActionTable::get(la.weight());
  const auto& order = table.order();
  // Dominance cone {mu : mu >= la}, ascending revlex so the cone starts at la.
  std::vector<int> cone;
  for (int gi = static_cast<int>(order.size()) - 1; gi >= 0; --gi) {
    if (dominance_leq(la, order[static_cast<size_t>(gi)])) cone.push_back(gi);
  }
  const int t = static_cast<int>(cone.size());
  std::vector<int> local(order.size(), -1);
  for (int i = 0; i < t; ++i) local[static_cast<size_t>(cone[i])] = i;

  // Restricted action minus e'_la, doubled to clear the halves in e'.  The
  // row for la itself is identically zero; the cofactors along it solve the
  // eigenvalue system.
  std::vector<std::vector<IntPoly>> a(static_cast<size_t>(t),
                                      std::vector<IntPoly>(static_cast<size_t>(t)));
  const RatFun& ep0 = table.eprime_at(cone[0]);
  const RatFun two(2);
  for (int i = 0; i < t; ++i) {
    RatFun diag = (table.eprime_at(cone[i]) - ep0) * two;
    if (!diag.is_integer_poly()) throw std::logic_error("jack_determinant: non-integral diagonal");
    a[static_cast<size_t>(i)][static_cast<size_t>(i)] = diag.num();
    for (const auto& [tgt, r] : table.up(cone[i])) {
      int lj = local[static_cast<size_t>(tgt)];
      if (lj < 0) throw std::logic_error("jack_determinant: move leaves the cone");
      RatFun entry = r * two;
      if (!entry.is_integer_poly()) throw std::logic_error("jack_determinant: non-integral entry");
      a[static_cast<size_t>(lj)][static_cast<size_t>(i)] += entry.num();
    }
  }

  auto minor_det = [&](int skip_col) {
    std::vector<std::vector<IntPoly>> m;
    m.reserve(static_cast<size_t>(t) - 1);
    for (int r = 1; r < t; ++r) {
      std::vector<IntPoly> row;
      row.reserve(static_cast<size_t>(t) - 1);
      for (int cidx = 0; cidx < t; ++cidx) {
        if (cidx == skip_col) continue;
        row.push_back(a[static_cast<size_t>(r)][static_cast<size_t>(cidx)]);
      }
      m.push_back(std::move(row));
    }
    return det_bareiss(std::move(m));
  };

  RatFun principal(minor_det(0));
  if (principal.is_zero()) throw std::logic_error("jack_determinant: singular principal minor");
  JackExpansion out{la, JackNorm::Q, JackMethod::Determinant, SymExpr(Basis::Homog)};
  out.expr.add_term(la, RatFun(1));
  for (int i = 1; i < t; ++i) {
    IntPoly mi = minor_det(i);
    if (mi.is_zero()) continue;
    RatFun coeff = (i % 2 == 0 ? RatFun(mi) : RatFun(-mi)) / principal;
    out.expr.add_term(order[static_cast<size_t>(cone[i])], coeff);
  }
  return out;
}

namespace {

struct GSData {
  std::vector<Partition> asc;               // ascending revlex, (1^n) first
  std::vector<std::vector<RatFun>> coef;    // coef[i][k]: m_{asc[k]} coefficient of P_{asc[i]}
  std::vector<RatFun> self;                 // <P_i, P_i>
};

const GSData& gs_data(int weight) {
  static std::map<int, GSData> cache;
  std::lock_guard<std::mutex> lock(jack_mutex);
  auto it = cache.find(weight);
  if (it != cache.end()) return it->second;

  GSData d;
  auto desc = revlex_order(weight);
  d.asc.assign(desc.rbegin(), desc.rend());
  const int t = static_cast<int>(d.asc.size());

  std::vector<SymExpr> mp;
  mp.reserve(static_cast<size_t>(t));
  for (const auto& mu : d.asc) {
    mp.push_back(to_p(SymExpr::term(Basis::Monomial, mu, RatFun(1))));
  }
  RatMat gram(static_cast<size_t>(t), std::vector<RatFun>(static_cast<size_t>(t)));
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j <= i; ++j) {
      gram[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          gram[static_cast<size_t>(j)][static_cast<size_t>(i)] =
              inner(mp[static_cast<size_t>(i)], mp[static_cast<size_t>(j)]);
    }
  }

  for (int i = 0; i < t; ++i) {
    std::vector<RatFun> v(static_cast<size_t>(i) + 1);
    v[static_cast<size_t>(i)] = RatFun(1);
    for (int j = 0; j < i; ++j) {
      RatFun num;
      for (int k = 0; k <= j; ++k) {
        num += d.coef[static_cast<size_t>(j)][static_cast<size_t>(k)] *
               gram[static_cast<size_t>(i)][static_cast<size_t>(k)];
      }
      if (num.is_zero()) continue;
      RatFun f = num / d.self[static_cast<size_t>(j)];
      for (int k = 0; k <= j; ++k) {
        v[static_cast<size_t>(k)] -=
            f * d.coef[static_cast<size_t>(j)][static_cast<size_t>(k)];
      }
    }
    // <P_i, P_i> = <m_i, P_i> because the correction is orthogonal to P_i.
    RatFun si;
    for (int k = 0; k <= i; ++k) {
      si += v[static_cast<size_t>(k)] * gram[static_cast<size_t>(i)][static_cast<size_t>(k)];
    }
    d.self.push_back(si);
    d.coef.push_back(std::move(v));
  }
  return cache.emplace(weight, std::move(d)).first->second;
}

}  // namespace

JackExpansion jack_gram_schmidt(const Partition& la) {
  const GSData& d = gs_data(la.weight());
  int i = 0;
  while (i < static_cast<int>(d.asc.size()) && d.asc[static_cast<size_t>(i)] != la) ++i;
  if (i == static_cast<int>(d.asc.size())) {
    throw std::logic_error("jack_gram_schmidt: shape not found");
  }
  JackExpansion out{la, JackNorm::P, JackMethod::GramSchmidt, SymExpr(Basis::Monomial)};
  for (int k = 0; k <= i; ++k) {
    const RatFun& c = d.coef[static_cast<size_t>(i)][static_cast<size_t>(k)];
    if (!c.is_zero()) out.expr.add_term(d.asc[static_cast<size_t>(k)], c);
  }
  return out;
}

namespace {

// Shared walker for both chain sums: every chain is visited once, carrying
// the running product of its step weights.
std::map<Partition, RatFun, PartitionLess> chain_sums(const Partition& root, bool forward) {
  const ActionTable& table = ActionTable::get(root.weight());
  const int r0 = table.index_of(root);
  const RatFun& ep0 = table.eprime_at(r0);
  std::vector<RatFun> acc(table.order().size());
  std::vector<bool> seen(table.order().size(), false);
  std::function<void(int, const RatFun&)> visit = [&](int idx, const RatFun& prod) {
    acc[static_cast<size_t>(idx)] += prod;
    seen[static_cast<size_t>(idx)] = true;
    if (forward) {
      for (const auto& [tgt, r] : table.up(idx)) {
        visit(tgt, prod * r / (ep0 - table.eprime_at(tgt)));
      }
    } else {
      for (const auto& [src, r] : table.down(idx)) {
        visit(src, prod * r / (ep0 - table.eprime_at(src)));
      }
    }
  };
  visit(r0, RatFun(1));
  std::map<Partition, RatFun, PartitionLess> out;
  for (size_t i = 0; i < acc.size(); ++i) {
    if (seen[i] && !acc[i].is_zero()) out.emplace(table.order()[i], acc[i]);
  }
  return out;
}

}  // namespace

std::map<Partition, RatFun, PartitionLess> filtration_start_sums(const Partition& start) {
  static std::map<Partition, std::map<Partition, RatFun, PartitionLess>, PartitionLess> cache;
  {
    std::lock_guard<std::mutex> lock(jack_mutex);
    auto it = cache.find(start);
    if (it != cache.end()) return it->second;
  }
  auto sums = chain_sums(start, /*forward=*/true);
  std::lock_guard<std::mutex> lock(jack_mutex);
  return cache.emplace(start, std::move(sums)).first->second;
}

std::map<Partition, RatFun, PartitionLess> filtration_end_sums(const Partition& la) {
  static std::map<Partition, std::map<Partition, RatFun, PartitionLess>, PartitionLess> cache;
  {
    std::lock_guard<std::mutex> lock(jack_mutex);
    auto it = cache.find(la);
    if (it != cache.end()) return it->second;
  }
  auto sums = chain_sums(la, /*forward=*/false);
  std::lock_guard<std::mutex> lock(jack_mutex);
  return cache.emplace(la, std::move(sums)).first->second;
}

JackExpansion jack_filtration(const Partition& la, FiltrationTarget target) {
  if (target == FiltrationTarget::QExpansion) {
    JackExpansion out{la, JackNorm::Q, JackMethod::Filtration, SymExpr(Basis::Homog)};
    for (const auto& [mu, c] : filtration_start_sums(la)) out.expr.add_term(mu, c);
    return out;
  }
  JackExpansion out{la, JackNorm::J, JackMethod::Filtration, SymExpr(Basis::Monomial)};
  RatFun vll = hook_product_full(la, HookKind::Lower);
  for (const auto& [mu, c] : filtration_end_sums(la)) out.expr.add_term(mu, vll * c);
  return out;
}

JackExpansion renormalize(const JackExpansion& e, JackNorm to) {
  if (e.norm == to) return e;
  RatFun ratio = norm_scalar(e.shape, to) / norm_scalar(e.shape, e.norm);
  return JackExpansion{e.shape, to, e.method, e.expr.scaled(ratio)};
}

JackExpansion convert_basis(const JackExpansion& e, Basis to) {
  if (e.expr.basis() == to) return e;
  return JackExpansion{e.shape, e.norm, e.method, to_basis(e.expr, to)};
}

SymExpr jack(const Partition& la, JackNorm norm, Basis basis, JackMethod method) {
  JackExpansion e;
  switch (method) {
    case JackMethod::Iteration: e = jack_iteration(la); break;
    case JackMethod::Determinant: e = jack_determinant(la); break;
    case JackMethod::GramSchmidt: e = jack_gram_schmidt(la); break;
    case JackMethod::Filtration:
      e = jack_filtration(la, basis == Basis::Monomial ? FiltrationTarget::MExpansion
                                                       : FiltrationTarget::QExpansion);
      break;
  }
  return convert_basis(renormalize(e, norm), basis).expr;
}

SymExpr jack_p(const Partition& la, JackNorm norm) {
  static std::map<std::pair<Partition, char>, SymExpr,
                  bool (*)(const std::pair<Partition, char>&, const std::pair<Partition, char>&)>
      cache([](const std::pair<Partition, char>& a, const std::pair<Partition, char>& b) {
        if (a.second != b.second) return a.second < b.second;
        return PartitionLess()(a.first, b.first);
      });
  std::pair<Partition, char> key{la, norm_char(norm)};
  {
    std::lock_guard<std::mutex> lock(jack_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  SymExpr value = jack(la, norm, Basis::Power);
  std::lock_guard<std::mutex> lock(jack_mutex);
  return cache.emplace(std::move(key), std::move(value)).first->second;
}

SymExpr two_row_q(int r, int s) {
  if (s < 0 || r < s) throw std::invalid_argument("two_row_q: need r >= s >= 0");
  const int d = r - s;
  const RatFun alpha = RatFun::alpha();
  SymExpr out(Basis::Homog);
  out.add_term(Partition(s > 0 ? std::vector<int>{r, s} : std::vector<int>{r}), RatFun(1));
  RatFun num(1), den(1);
  for (int i = 1; i <= s; ++i) {
    // Extend the running products from i-1 to i.
    if (i >= 2) num *= RatFun(d + i - 1) * (RatFun(1) - RatFun(i - 1) * alpha);
    den *= RatFun(i) * (RatFun(1) + RatFun(d + i) * alpha);
    RatFun ai = RatFun(i % 2 == 0 ? d + 2 * i : -(d + 2 * i)) * num / den;
    Partition mu(s - i > 0 ? std::vector<int>{r + i, s - i} : std::vector<int>{r + i});
    out.add_term(mu, ai);
  }
  return out;
}

SymExpr two_column_m(int r, int s) {
  if (s < 0 || r < s) throw std::invalid_argument("two_column_m: need r >= s >= 0");
  if (r == 0) return SymExpr::unit(Basis::Monomial);
  const RatFun alpha = RatFun::alpha();
  SymExpr out(Basis::Monomial);
  for (int i = 0; i <= s; ++i) {
    const int k = s - i;
    RatFun bk{IntPoly(factorial(static_cast<unsigned>(r + s - 2 * k)))};
    for (int j = 1; j <= k; ++j) {
      bk *= RatFun(s + 1 - j) * (alpha + RatFun(r + 1 - j));
    }
    // Conjugate of (r+i, s-i): s-i twos followed by (r-s+2i) ones.
    std::vector<int> parts(static_cast<size_t>(s - i), 2);
    parts.insert(parts.end(), static_cast<size_t>(r - s + 2 * i), 1);
    out.add_term(Partition(std::move(parts)), bk);
  }
  return out;
}

} // namespace qjack
