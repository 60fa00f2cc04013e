#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qjack/symexpr.hpp"
#include "support/monomial_oracle.hpp"

using namespace qjack;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }

RatFun alpha_pow(int k) {
  RatFun r(1);
  for (int i = 0; i < k; ++i) r *= RatFun::alpha();
  return r;
}
} // namespace

TEST_CASE("expression container") {
  SymExpr f(Basis::Power);
  CHECK(f.is_zero());
  f.add_term(P("2"), RatFun(1));
  f.add_term(P("1,1"), RatFun::fraction(1, 2));
  f.add_term(P("2"), RatFun(-1));  // cancels to zero, term dropped
  CHECK(f.term_count() == 1);
  CHECK(f.coeff(P("1,1")) == RatFun::fraction(1, 2));
  CHECK(f.coeff(P("2")).is_zero());
  CHECK(f.max_weight() == 2);
  int w = 0;
  CHECK(f.is_homogeneous(&w));
  CHECK(w == 2);
  f.add_term(P("1"), RatFun(3));
  CHECK(!f.is_homogeneous());
  CHECK(f.scaled(RatFun(2)).coeff(P("1")) == RatFun(6));
  CHECK((f - f).is_zero());
  CHECK(SymExpr::unit(Basis::Homog).coeff(Partition()) == RatFun(1));
}

TEST_CASE("one-row family over the power sums") {
  // q_0 = 1, negative index vanishes.
  CHECK(qn_to_p(0) == SymExpr::unit(Basis::Power));
  CHECK(qn_to_p(-3).is_zero());
  // q_1 = p_1/a, q_2 = p_2/(2a) + p_11/(2a^2),
  // q_3 = p_3/(3a) + p_21/(2a^2) + p_111/(6a^3).
  SymExpr q1 = qn_to_p(1);
  CHECK(q1.term_count() == 1);
  CHECK(q1.coeff(P("1")) == alpha_pow(1).inverse());
  SymExpr q2 = qn_to_p(2);
  CHECK(q2.coeff(P("2")) == (RatFun(2) * alpha_pow(1)).inverse());
  CHECK(q2.coeff(P("1,1")) == (RatFun(2) * alpha_pow(2)).inverse());
  SymExpr q3 = qn_to_p(3);
  CHECK(q3.coeff(P("3")) == (RatFun(3) * alpha_pow(1)).inverse());
  CHECK(q3.coeff(P("2,1")) == (RatFun(2) * alpha_pow(2)).inverse());
  CHECK(q3.coeff(P("1,1,1")) == (RatFun(6) * alpha_pow(3)).inverse());
  // General coefficient: [p_la] q_n = a^{-l(la)} / z_la.
  for (int n = 1; n <= 8; ++n) {
    SymExpr qn = qn_to_p(n);
    for (const auto& la : revlex_order(n)) {
      CHECK(qn.coeff(la) == alpha_pow(la.length()).inverse() / RatFun(IntPoly(BigInt(la.z()))));
    }
  }
}

TEST_CASE("power-sum pairing") {
  // <p_la, p_mu> = delta a^{l(la)} z_la.
  for (int n = 0; n <= 6; ++n) {
    for (const auto& la : revlex_order(n)) {
      for (const auto& mu : revlex_order(n)) {
        RatFun v = inner(SymExpr::term(Basis::Power, la, RatFun(1)),
                         SymExpr::term(Basis::Power, mu, RatFun(1)));
        if (la == mu) {
          CHECK(v == alpha_pow(la.length()) * RatFun(IntPoly(BigInt(la.z()))));
        } else {
          CHECK(v.is_zero());
        }
      }
    }
  }
  // Different weights pair to zero; constants pair like scalars.
  CHECK(inner(SymExpr::term(Basis::Power, P("2"), RatFun(1)),
              SymExpr::term(Basis::Power, P("1,1"), RatFun(1)))
            .is_zero());
  CHECK(inner(SymExpr::unit(Basis::Power), SymExpr::unit(Basis::Power)) == RatFun(1));
  // Frozen example: <p_21 , p_21> = 2 a^2.
  CHECK(inner(SymExpr::term(Basis::Power, P("2,1"), RatFun(1)),
              SymExpr::term(Basis::Power, P("2,1"), RatFun(1))) ==
        RatFun(IntPoly::monomial(2, 2)));
}

TEST_CASE("monomial expansion of power sums matches the variable-level oracle") {
  const int nvars = 8;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& la : revlex_order(n)) {
      oracle::Poly expanded = oracle::power_sum_product(la, nvars);
      SymExpr in_m = to_m(SymExpr::term(Basis::Power, la, RatFun(1)));
      for (const auto& mu : revlex_order(n)) {
        BigInt expect = oracle::monomial_coeff(expanded, mu, nvars);
        RatFun got = in_m.coeff(mu);
        CHECK(got == RatFun(IntPoly(expect)));
      }
    }
  }
}

TEST_CASE("basis conversions round-trip") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& la : revlex_order(n)) {
      SymExpr p = SymExpr::term(Basis::Power, la, RatFun(1));
      CHECK(q_to_p(p_to_q(p)) == p);
      CHECK(to_p(to_m(p)) == p);
      SymExpr m = SymExpr::term(Basis::Monomial, la, RatFun(1));
      CHECK(to_m(m_to_p(m)) == m);
      SymExpr q = SymExpr::term(Basis::Homog, la, RatFun(1));
      CHECK(p_to_q(q_to_p(q)) == q);
      CHECK(to_basis(to_basis(q, Basis::Monomial), Basis::Homog) == q);
    }
  }
  // to_basis to the same basis is the identity.
  SymExpr f = SymExpr::term(Basis::Homog, P("2,1"), RatFun::fraction(3, 5));
  CHECK(to_basis(f, Basis::Homog) == f);
}

TEST_CASE("one-row/monomial duality") {
  // <q_la, m_mu> = delta.
  for (int n = 0; n <= 6; ++n) {
    for (const auto& la : revlex_order(n)) {
      for (const auto& mu : revlex_order(n)) {
        RatFun v = inner(SymExpr::term(Basis::Homog, la, RatFun(1)),
                         SymExpr::term(Basis::Monomial, mu, RatFun(1)));
        CHECK(v == (la == mu ? RatFun(1) : RatFun()));
      }
    }
  }
}

TEST_CASE("products") {
  SymExpr p1 = SymExpr::term(Basis::Power, P("1"), RatFun(1));
  SymExpr p2 = SymExpr::term(Basis::Power, P("2"), RatFun(1));
  CHECK(mul(p1, p2).coeff(P("2,1")) == RatFun(1));
  CHECK(mul(p1, p1).coeff(P("1,1")) == RatFun(1));
  CHECK(mul(p1, p2) == mul(p2, p1));
  // Mixed bases convert before multiplying.
  SymExpr m11 = SymExpr::term(Basis::Monomial, P("1,1"), RatFun(1));
  SymExpr prod = mul(m11, p1);
  CHECK(prod.basis() == Basis::Power);
  // m_11 p_1 = (p_11 - p_2)/2 * p_1.
  CHECK(prod.coeff(P("1,1,1")) == RatFun::fraction(1, 2));
  CHECK(prod.coeff(P("2,1")) == RatFun::fraction(-1, 2));
  CHECK(mul(SymExpr::unit(Basis::Power), p2) == p2);
  CHECK(mul(SymExpr::zero(Basis::Power), p2).is_zero());
}

TEST_CASE("ladder operators") {
  SymExpr p1 = SymExpr::term(Basis::Power, P("1"), RatFun(1));
  SymExpr p2 = SymExpr::term(Basis::Power, P("2"), RatFun(1));
  // Negative index multiplies by the power sum.
  CHECK(heis(-2, p1) == mul(p2, p1));
  // Positive index differentiates: h_n p_n = n a.
  CHECK(heis(2, p2) == SymExpr::unit(Basis::Power).scaled(RatFun(IntPoly::monomial(2, 1))));
  CHECK(heis(1, p2).is_zero());
  CHECK(heis(3, SymExpr::unit(Basis::Power)).is_zero());
  CHECK_THROWS_AS(heis(0, p1), std::invalid_argument);
  // Commutator [h_m, h_-m] = m a on the vacuum.
  SymExpr one = SymExpr::unit(Basis::Power);
  for (int m = 1; m <= 4; ++m) {
    SymExpr lhs = heis(m, heis(-m, one)) - heis(-m, heis(m, one));
    CHECK(lhs == one.scaled(RatFun(IntPoly::monomial(m, 1))));
  }

  // Adjointness: <p_n f, g> = <f, h_n g> over a weight-4 sample.
  for (int n = 1; n <= 3; ++n) {
    for (const auto& la : revlex_order(4 - n)) {
      for (const auto& mu : revlex_order(4)) {
        SymExpr f = SymExpr::term(Basis::Power, la, RatFun(1));
        SymExpr g = SymExpr::term(Basis::Power, mu, RatFun(1));
        CHECK(inner(heis(-n, f), g) == inner(f, heis(n, g)));
      }
    }
  }
}

TEST_CASE("adjoint of multiplication") {
  // <g f, h> = <f, adjoint_mul(g, h)> for g of low weight.
  std::vector<SymExpr> gs = {
      SymExpr::term(Basis::Power, P("1"), RatFun(1)),
      SymExpr::term(Basis::Power, P("2"), RatFun(1)) +
          SymExpr::term(Basis::Power, P("1,1"), RatFun::fraction(1, 3)),
  };
  for (const auto& g : gs) {
    int gw = g.max_weight();
    for (const auto& la : revlex_order(4 - gw)) {
      for (const auto& mu : revlex_order(4)) {
        SymExpr f = SymExpr::term(Basis::Power, la, RatFun(1));
        SymExpr h = SymExpr::term(Basis::Power, mu, RatFun(1));
        CHECK(inner(mul(g, f), h) == inner(f, adjoint_mul(g, h)));
      }
    }
  }
}

TEST_CASE("exact evaluation of the parameter") {
  SymExpr q2 = qn_to_p(2);
  SymExpr at2 = eval_alpha(q2, BigRat(2));
  CHECK(at2.coeff(P("2")) == RatFun::fraction(1, 4));
  CHECK(at2.coeff(P("1,1")) == RatFun::fraction(1, 8));
  // At a = 1 the one-row family is the complete homogeneous family:
  // q_n(1) = h_n = sum 1/z_la p_la.
  SymExpr h3 = eval_alpha(qn_to_p(3), BigRat(1));
  CHECK(h3.coeff(P("3")) == RatFun::fraction(1, 3));
  CHECK(h3.coeff(P("2,1")) == RatFun::fraction(1, 2));
  CHECK(h3.coeff(P("1,1,1")) == RatFun::fraction(1, 6));
  CHECK_THROWS_AS(eval_alpha(qn_to_p(2), BigRat(0)), std::domain_error);
}
