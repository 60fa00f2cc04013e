#include "qjack/symexpr.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "qjack/linalg.hpp"

namespace qjack {

char basis_char(Basis b) {
  switch (b) {
    case Basis::Power: return 'p';
    case Basis::Monomial: return 'm';
    case Basis::Homog: return 'q';
  }
  throw std::logic_error("basis_char: bad basis");
}

Basis basis_from_char(char c) {
  switch (c) {
    case 'p': return Basis::Power;
    case 'm': return Basis::Monomial;
    case 'q': return Basis::Homog;
  }
  throw std::invalid_argument(std::string("unknown basis '") + c + "'");
}

SymExpr SymExpr::term(Basis b, const Partition& la, const RatFun& c) {
  SymExpr e(b);
  e.add_term(la, c);
  return e;
}

RatFun SymExpr::coeff(const Partition& la) const {
  auto it = terms_.find(la);
  return it == terms_.end() ? RatFun() : it->second;
}

int SymExpr::max_weight() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.weight();
}

bool SymExpr::is_homogeneous(int* weight) const {
  int w = terms_.empty() ? 0 : terms_.begin()->first.weight();
  for (const auto& [la, c] : terms_) {
    if (la.weight() != w) return false;
  }
  if (weight) *weight = w;
  return true;
}

void SymExpr::add_term(const Partition& la, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(la, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymExpr& SymExpr::operator+=(const SymExpr& o) {
  if (basis_ != o.basis_) throw std::invalid_argument("SymExpr: basis mismatch in addition");
  for (const auto& [la, c] : o.terms_) add_term(la, c);
  return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& o) {
  if (basis_ != o.basis_) throw std::invalid_argument("SymExpr: basis mismatch in subtraction");
  for (const auto& [la, c] : o.terms_) add_term(la, -c);
  return *this;
}

SymExpr SymExpr::scaled(const RatFun& c) const {
  SymExpr r(basis_);
  if (c.is_zero()) return r;
  for (const auto& [la, v] : terms_) r.terms_.emplace(la, v * c);
  return r;
}

std::string SymExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [la, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << basis_char(basis_) << '[' << la.to_string() << "] * (" << c.to_string() << ')';
  }
  return out.str();
}

namespace {

std::mutex cache_mutex;

// p-basis product of two p-basis expressions.
SymExpr p_mul(const SymExpr& f, const SymExpr& g) {
  SymExpr r(Basis::Power);
  for (const auto& [la, a] : f.terms()) {
    for (const auto& [mu, b] : g.terms()) {
      r.add_term(union_parts(la, mu), a * b);
    }
  }
  return r;
}

// q-basis product (q_la q_mu = q_{la union mu}).
SymExpr q_mul(const SymExpr& f, const SymExpr& g) {
  SymExpr r(Basis::Homog);
  for (const auto& [la, a] : f.terms()) {
    for (const auto& [mu, b] : g.terms()) {
      r.add_term(union_parts(la, mu), a * b);
    }
  }
  return r;
}

const SymExpr& qn_to_p_cached(int n) {
  static std::map<int, SymExpr> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  SymExpr e(Basis::Power);
  if (n == 0) {
    e = SymExpr::unit(Basis::Power);
  } else if (n > 0) {
    for (const Partition& la : revlex_order(n)) {
      // a^{-l} z^{-1} p_la
      e.add_term(la, RatFun(IntPoly(1), IntPoly::monomial(la.z(), la.length())));
    }
  }
  return cache.emplace(n, std::move(e)).first->second;
}

const SymExpr& q_lambda_to_p_cached(const Partition& la) {
  static std::map<Partition, SymExpr, PartitionLess> cache;
  auto it = cache.find(la);
  if (it != cache.end()) return it->second;
  SymExpr e = SymExpr::unit(Basis::Power);
  for (int p : la.parts()) e = p_mul(e, qn_to_p_cached(p));
  return cache.emplace(la, std::move(e)).first->second;
}

// p_n expanded over q_mu:  n a (-1)^{l(mu)-1} (l(mu)-1)! / m(mu)!  q_mu.
const SymExpr& pn_to_q_cached(int n) {
  static std::map<int, SymExpr> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  SymExpr e(Basis::Homog);
  for (const Partition& mu : revlex_order(n)) {
    int l = mu.length();
    BigInt numc = BigInt(n) * factorial(static_cast<unsigned>(l - 1));
    if ((l - 1) % 2) numc = -numc;
    e.add_term(mu, RatFun(IntPoly::monomial(numc, 1), IntPoly(mu.mult_factorial())));
  }
  return cache.emplace(n, std::move(e)).first->second;
}

RatFun inner_pp(const SymExpr& f, const SymExpr& g) {
  RatFun r;
  const auto& big = f.term_count() <= g.term_count() ? g : f;
  const auto& small = f.term_count() <= g.term_count() ? f : g;
  for (const auto& [la, a] : small.terms()) {
    auto it = big.terms().find(la);
    if (it == big.terms().end()) continue;
    r += a * it->second * RatFun(IntPoly::monomial(la.z(), la.length()));
  }
  return r;
}

// Inverse of the degree-d transition matrix U with U[r][c] = <p_r, q_c> in
// revlex order; y = x U maps p coordinates to m coordinates.
const RatMat& m_to_p_matrix_cached(int d) {
  static std::map<int, RatMat> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<Partition> order = revlex_order(d);
  size_t n = order.size();
  RatMat u(n, std::vector<RatFun>(n));
  for (size_t c = 0; c < n; ++c) {
    const SymExpr& q = q_lambda_to_p_cached(order[c]);
    for (size_t r = 0; r < n; ++r) {
      RatFun coeff = q.coeff(order[r]);
      if (!coeff.is_zero()) {
        u[r][c] = coeff * RatFun(IntPoly::monomial(order[r].z(), order[r].length()));
      }
    }
  }
  return cache.emplace(d, inverse(std::move(u))).first->second;
}

} // namespace

SymExpr qn_to_p(int n) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  return qn_to_p_cached(n);
}

SymExpr q_to_p(const SymExpr& f) {
  if (f.basis() != Basis::Homog) throw std::invalid_argument("q_to_p: expected q basis");
  std::lock_guard<std::mutex> lock(cache_mutex);
  SymExpr r(Basis::Power);
  for (const auto& [la, c] : f.terms()) {
    r += q_lambda_to_p_cached(la).scaled(c);
  }
  return r;
}

SymExpr p_to_q(const SymExpr& f) {
  if (f.basis() != Basis::Power) throw std::invalid_argument("p_to_q: expected p basis");
  std::lock_guard<std::mutex> lock(cache_mutex);
  SymExpr r(Basis::Homog);
  for (const auto& [la, c] : f.terms()) {
    SymExpr prod = SymExpr::unit(Basis::Homog);
    for (int p : la.parts()) prod = q_mul(prod, pn_to_q_cached(p));
    r += prod.scaled(c);
  }
  return r;
}

SymExpr m_to_p(const SymExpr& f) {
  if (f.basis() != Basis::Monomial) throw std::invalid_argument("m_to_p: expected m basis");
  std::lock_guard<std::mutex> lock(cache_mutex);
  SymExpr r(Basis::Power);
  std::map<int, std::map<Partition, RatFun, PartitionLess>> by_weight;
  for (const auto& [la, c] : f.terms()) by_weight[la.weight()][la] = c;
  for (const auto& [w, comp] : by_weight) {
    std::vector<Partition> order = revlex_order(w);
    const RatMat& minv = m_to_p_matrix_cached(w);
    size_t n = order.size();
    for (size_t c = 0; c < n; ++c) {
      auto it = comp.find(order[c]);
      if (it == comp.end()) continue;
      for (size_t r0 = 0; r0 < n; ++r0) {
        if (!minv[c][r0].is_zero()) r.add_term(order[r0], it->second * minv[c][r0]);
      }
    }
  }
  return r;
}

SymExpr to_p(const SymExpr& f) {
  switch (f.basis()) {
    case Basis::Power: return f;
    case Basis::Homog: return q_to_p(f);
    case Basis::Monomial: return m_to_p(f);
  }
  throw std::logic_error("to_p: bad basis");
}

SymExpr to_m(const SymExpr& f) {
  if (f.basis() == Basis::Monomial) return f;
  SymExpr fp = to_p(f);
  SymExpr r(Basis::Monomial);
  std::lock_guard<std::mutex> lock(cache_mutex);
  std::map<int, SymExpr> by_weight;
  for (const auto& [la, c] : fp.terms()) {
    auto [it, ins] = by_weight.emplace(la.weight(), SymExpr(Basis::Power));
    it->second.add_term(la, c);
  }
  for (const auto& [w, comp] : by_weight) {
    for (const Partition& nu : revlex_order(w)) {
      RatFun c = inner_pp(comp, q_lambda_to_p_cached(nu));
      if (!c.is_zero()) r.add_term(nu, c);
    }
  }
  return r;
}

SymExpr to_basis(const SymExpr& f, Basis target) {
  if (f.basis() == target) return f;
  switch (target) {
    case Basis::Power: return to_p(f);
    case Basis::Monomial: return to_m(f);
    case Basis::Homog: return p_to_q(to_p(f));
  }
  throw std::logic_error("to_basis: bad basis");
}

SymExpr mul(const SymExpr& f, const SymExpr& g) {
  SymExpr fp = to_p(f);
  SymExpr gp = to_p(g);
  return p_mul(fp, gp);
}

RatFun inner(const SymExpr& f, const SymExpr& g) {
  return inner_pp(to_p(f), to_p(g));
}

SymExpr heis(int n, const SymExpr& f) {
  if (n == 0) throw std::invalid_argument("heis: mode 0 is not defined");
  SymExpr fp = to_p(f);
  SymExpr r(Basis::Power);
  if (n < 0) {
    Partition pn({-n});
    for (const auto& [la, c] : fp.terms()) {
      r.add_term(union_parts(la, pn), c);
    }
    return r;
  }
  RatFun na = RatFun(IntPoly::monomial(n, 1));  // n*a
  for (const auto& [la, c] : fp.terms()) {
    int m = la.mult(n);
    if (m == 0) continue;
    std::vector<int> parts = la.parts();
    parts.erase(std::find(parts.begin(), parts.end(), n));
    r.add_term(Partition(std::move(parts)), c * na * RatFun(m));
  }
  return r;
}

SymExpr adjoint_mul(const SymExpr& g, const SymExpr& f) {
  SymExpr gp = to_p(g);
  SymExpr fp = to_p(f);
  SymExpr r(Basis::Power);
  for (const auto& [mu, c] : gp.terms()) {
    SymExpr cur = fp;
    for (int p : mu.parts()) {
      if (cur.is_zero()) break;
      cur = heis(p, cur);
    }
    r += cur.scaled(c);
  }
  return r;
}

SymExpr eval_alpha(const SymExpr& f, const BigRat& alpha_value) {
  SymExpr r(f.basis());
  for (const auto& [la, c] : f.terms()) {
    r.add_term(la, RatFun(c.eval_at(alpha_value)));
  }
  return r;
}

} // namespace qjack
