#include "qjack/selfcheck.hpp"

#include <algorithm>
#include <chrono>

namespace qjack {

namespace {

class Suite {
public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok) {
      ++result_.failures;
      if (result_.detail.empty()) result_.detail = what;
    }
  }

  SuiteResult take() { return std::move(result_); }

private:
  SuiteResult result_;
};

SuiteResult field_suite() {
  Suite s("field");
  const RatFun a = RatFun::alpha();
  s.check((a + RatFun(1)) * (a - RatFun(1)) == a * a - RatFun(1), "difference of squares");
  RatFun f = RatFun(IntPoly(std::vector<BigInt>{2, 2}), IntPoly(std::vector<BigInt>{4, 0, 4}));  // (2+2a)/(4+4a^2)
  s.check(f == RatFun(IntPoly(std::vector<BigInt>{1, 1}), IntPoly(std::vector<BigInt>{2, 0, 2})), "common content cancelled");
  RatFun g = RatFun(IntPoly(1), IntPoly(std::vector<BigInt>{0, -1}));  // 1/(-a)
  s.check(g.den().leading() > 0, "denominator sign normalized");
  s.check(g * RatFun(IntPoly(std::vector<BigInt>{0, -1})) == RatFun(1), "inverse against negated variable");
  RatFun h = RatFun::fraction(3, 7) + RatFun::fraction(4, 7);
  s.check(h == RatFun(1), "rational addition");
  s.check((a / (a + RatFun(1)) + RatFun(1) / (a + RatFun(1))) == RatFun(1),
          "common denominator addition");
  IntPoly p = IntPoly(std::vector<BigInt>{1, 2, 1});  // (1+a)^2
  s.check(IntPoly::gcd(p, IntPoly(std::vector<BigInt>{1, 1})) == IntPoly(std::vector<BigInt>{1, 1}), "polynomial gcd");
  s.check(p.divide_exact(IntPoly(std::vector<BigInt>{1, 1})) == IntPoly(std::vector<BigInt>{1, 1}), "exact division");
  bool threw = false;
  try {
    RatFun bad = RatFun(1) / RatFun();
    (void)bad;
  } catch (const std::domain_error&) {
    threw = true;
  }
  s.check(threw, "division by zero rejected");
  return s.take();
}

SuiteResult partition_suite(int max_weight) {
  Suite s("partitions");
  static const int kCounts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135};
  for (int n = 0; n <= std::min(max_weight, 14); ++n) {
    auto order = revlex_order(n);
    s.check(static_cast<int>(order.size()) == kCounts[n], "partition count");
    for (const auto& la : order) {
      s.check(la.conjugate().conjugate() == la, "conjugate involution");
      s.check(dominance_leq(la, order.front()), "one-row shape dominates");
      s.check(dominance_leq(order.back(), la), "one-column shape is dominated");
    }
  }
  return s.take();
}

SuiteResult duality_suite(int max_weight) {
  Suite s("duality");
  for (int n = 1; n <= std::min(max_weight, 6); ++n) {
    for (const auto& la : revlex_order(n)) {
      SymExpr q = to_p(SymExpr::term(Basis::Homog, la, RatFun(1)));
      for (const auto& mu : revlex_order(n)) {
        SymExpr m = to_p(SymExpr::term(Basis::Monomial, mu, RatFun(1)));
        RatFun want(la == mu ? 1 : 0);
        s.check(inner(q, m) == want, "pairing of q[" + la.to_string() + "], m[" + mu.to_string() + "]");
      }
    }
  }
  return s.take();
}

SuiteResult shift_suite(int max_weight) {
  Suite s("shift-identity");
  const RatFun two_a = RatFun(2) * RatFun::alpha();
  for (int n = 0; n <= max_weight; ++n) {
    const RatFun aw = RatFun::alpha() * RatFun(n);
    for (const auto& la : revlex_order(n)) {
      SymExpr q = SymExpr::term(Basis::Homog, la, RatFun(1));
      SymExpr lhs = apply_d_q(q);
      SymExpr rhs = apply_dprime(q).scaled(two_a) + q.scaled(aw);
      s.check(lhs == rhs, "shift identity on q[" + la.to_string() + "]");
    }
  }
  return s.take();
}

SuiteResult method_suite(int max_weight, bool inject_fault, bool* fault_armed) {
  Suite s("methods");
  const int cap = std::min(max_weight, 6);
  for (int n = 0; n <= cap; ++n) {
    ActionTable table = ActionTable::get(n);
    bool bumped = false;
    if (inject_fault && n >= 2 && !*fault_armed) {
      table.bump_first_entry();
      *fault_armed = true;
      bumped = true;
    }
    for (const auto& la : revlex_order(n)) {
      JackExpansion it = jack_iteration_with_table(la, table);
      JackExpansion dt = jack_determinant(la);
      s.check(it.expr == dt.expr,
              std::string("triangular sweep vs cofactors on ") + la.to_string() +
                  (bumped ? " (table perturbed)" : ""));
    }
  }
  return s.take();
}

SuiteResult pieri_suite(int max_weight) {
  Suite s("products");
  const int cap = std::min(max_weight, 6);
  for (int total = 1; total <= cap; ++total) {
    for (int n = 1; n <= total; ++n) {
      for (const auto& mu : revlex_order(total - n)) {
        for (const auto& la : revlex_order(total)) {
          s.check(pieri_direct(n, mu, la) == pieri_hook(n, mu, la),
                  "row product pairing at n=" + std::to_string(n) + " mu=" + mu.to_string() +
                      " la=" + la.to_string());
        }
      }
    }
  }
  return s.take();
}

SuiteResult integrality_suite(int max_weight) {
  Suite s("integrality");
  IntegralityReport rep = integrality_report(std::min(max_weight, 6));
  s.check(rep.ok(), rep.ok() ? "" : rep.issues.front().what + " at " +
                                        rep.issues.front().shape.to_string());
  return s.take();
}

SuiteResult lowering_suite(int max_weight) {
  Suite s("lowering");
  const int cap = std::min(max_weight, 4);
  const RatFun a = RatFun::alpha();
  for (int n = 0; n <= cap; ++n) {
    for (const auto& la : revlex_order(n)) {
      SymExpr j = jack_p(la, JackNorm::J);
      s.check(m_op(0, j) == j.scaled(a * RatFun(n)), "quadratic mode at level zero");
      for (const auto& mu : revlex_order(std::max(0, n - 1))) {
        s.check(m1_pairing_ok(la, mu), "first pairing identity");
      }
      if (n >= 2) {
        for (const auto& mu : revlex_order(n - 2)) {
          s.check(m2_pairing_ok(la, mu), "second pairing identity");
        }
      }
    }
  }
  for (int r = 1; r <= 2; ++r) {
    for (int ss = 1; ss <= 2; ++ss) {
      SingularCheck c = singular_check(r, ss);
      s.check(c.is_singular() && c.matches_formula,
              "singular parameter for the " + std::to_string(r) + "x" + std::to_string(ss) +
                  " rectangle");
    }
  }
  return s.take();
}

}  // namespace

bool SelfCheckReport::all_passed() const {
  for (const auto& s : suites) {
    if (!s.passed()) return false;
  }
  return true;
}

SelfCheckReport run_selfcheck(int max_weight, bool inject_fault) {
  SelfCheckReport rep;
  rep.max_weight = max_weight;
  rep.fault_injected = inject_fault;
  rep.suites.push_back(field_suite());
  rep.suites.push_back(partition_suite(max_weight));
  rep.suites.push_back(duality_suite(max_weight));
  rep.suites.push_back(shift_suite(max_weight));
  bool fault_armed = false;
  rep.suites.push_back(method_suite(max_weight, inject_fault, &fault_armed));
  rep.suites.push_back(pieri_suite(max_weight));
  rep.suites.push_back(integrality_suite(max_weight));
  rep.suites.push_back(lowering_suite(max_weight));
  return rep;
}

ShapeBench run_shape_bench(int weight) {
  using clock = std::chrono::steady_clock;
  ShapeBench b;
  b.weight = weight;
  auto t0 = clock::now();
  const ActionTable& table = ActionTable::get(weight);
  auto t1 = clock::now();
  Partition ones(std::vector<int>(static_cast<size_t>(weight), 1));
  JackExpansion e = jack_iteration_with_table(ones, table);
  auto t2 = clock::now();
  b.table_seconds = std::chrono::duration<double>(t1 - t0).count();
  b.sweep_seconds = std::chrono::duration<double>(t2 - t1).count();
  b.terms = e.expr.term_count();
  return b;
}

} // namespace qjack
