#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qjack/jack.hpp"
#include "support/schur_oracle.hpp"

using namespace qjack;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }

RatFun rf(std::vector<BigInt> num, std::vector<BigInt> den = {1}) {
  return RatFun(IntPoly(std::move(num)), IntPoly(std::move(den)));
}
} // namespace

TEST_CASE("names round-trip") {
  for (JackNorm n : {JackNorm::P, JackNorm::Q, JackNorm::J}) {
    CHECK(norm_from_char(norm_char(n)) == n);
  }
  CHECK(!norm_from_char('x').has_value());
  for (JackMethod m : {JackMethod::Iteration, JackMethod::Determinant, JackMethod::GramSchmidt,
                       JackMethod::Filtration}) {
    CHECK(method_from_name(method_name(m)) == m);
  }
  CHECK(!method_from_name("guess").has_value());
}

TEST_CASE("frozen expansions") {
  // Q over q.
  SymExpr q11 = jack(P("1,1"), JackNorm::Q, Basis::Homog);
  CHECK(q11.coeff(P("1,1")) == RatFun(1));
  CHECK(q11.coeff(P("2")) == rf({-2}, {1, 1}));
  CHECK(q11.term_count() == 2);
  SymExpr q21 = jack(P("2,1"), JackNorm::Q, Basis::Homog);
  CHECK(q21.coeff(P("2,1")) == RatFun(1));
  CHECK(q21.coeff(P("3")) == rf({-3}, {1, 2}));
  CHECK(q21.coeff(P("1,1,1")).is_zero());

  // P over m.
  SymExpr p2 = jack(P("2"), JackNorm::P, Basis::Monomial);
  CHECK(p2.coeff(P("2")) == RatFun(1));
  CHECK(p2.coeff(P("1,1")) == rf({2}, {1, 1}));
  SymExpr p21 = jack(P("2,1"), JackNorm::P, Basis::Monomial);
  CHECK(p21.coeff(P("2,1")) == RatFun(1));
  CHECK(p21.coeff(P("1,1,1")) == rf({6}, {2, 1}));

  // J over p and m.
  SymExpr j2 = jack(P("2"), JackNorm::J, Basis::Power);
  CHECK(j2.coeff(P("2")) == rf({0, 1}));
  CHECK(j2.coeff(P("1,1")) == RatFun(1));
  SymExpr j21 = jack(P("2,1"), JackNorm::J, Basis::Power);
  CHECK(j21.coeff(P("3")) == rf({0, -1}));
  CHECK(j21.coeff(P("2,1")) == rf({-1, 1}));
  CHECK(j21.coeff(P("1,1,1")) == RatFun(1));
  SymExpr j3 = jack(P("3"), JackNorm::J, Basis::Monomial);
  CHECK(j3.coeff(P("3")) == rf({1, 3, 2}));      // (1+a)(1+2a)
  CHECK(j3.coeff(P("2,1")) == rf({3, 3}));       // 3(1+a)
  CHECK(j3.coeff(P("1,1,1")) == RatFun(6));
  SymExpr j22 = jack(P("2,2"), JackNorm::J, Basis::Monomial);
  CHECK(j22.coeff(P("2,2")) == rf({4, 6, 2}));   // 2(1+a)(2+a)
  CHECK(j22.coeff(P("2,1,1")) == rf({8, 4}));    // 4(2+a)
  CHECK(j22.coeff(P("1,1,1,1")) == RatFun(24));

  // The empty shape in every guise.
  for (JackNorm n : {JackNorm::P, JackNorm::Q, JackNorm::J}) {
    for (Basis b : {Basis::Power, Basis::Monomial, Basis::Homog}) {
      CHECK(jack(P(""), n, b) == SymExpr::unit(b));
    }
  }
}

TEST_CASE("normalization scalars") {
  CHECK(norm_scalar(P("2,1"), JackNorm::P) == RatFun(1));
  CHECK(norm_scalar(P("2,1"), JackNorm::J) == rf({2, 1}));  // lower hooks
  CHECK(norm_scalar(P("2,1"), JackNorm::Q) == rf({2, 1}) / rf({0, 0, 1, 2}));
  CHECK(self_inner(P("2,1"), JackNorm::J) == rf({0, 0, 2, 5, 2}));  // a^2(2+a)(1+2a)
  CHECK(self_inner(P(""), JackNorm::J) == RatFun(1));

  // <X, X> matches the pairing for every normalization, small shapes.
  for (int n = 0; n <= 5; ++n) {
    for (const auto& la : revlex_order(n)) {
      for (JackNorm norm : {JackNorm::P, JackNorm::Q, JackNorm::J}) {
        SymExpr x = jack_p(la, norm);
        CHECK(inner(x, x) == self_inner(la, norm));
      }
    }
  }

  // Distinct shapes are orthogonal.
  for (const auto& la : revlex_order(5)) {
    for (const auto& mu : revlex_order(5)) {
      if (la == mu) continue;
      CHECK(inner(jack_p(la, JackNorm::J), jack_p(mu, JackNorm::J)).is_zero());
    }
  }
}

TEST_CASE("leading structure of the integral form") {
  // m coefficient at the shape itself is the lower hook product, and at the
  // one-column shape it is n factorial.
  for (int n = 1; n <= 6; ++n) {
    Partition ones(std::vector<int>(static_cast<size_t>(n), 1));
    for (const auto& la : revlex_order(n)) {
      SymExpr j = jack(la, JackNorm::J, Basis::Monomial);
      CHECK(j.coeff(la) == hook_product_full(la, HookKind::Lower));
      CHECK(j.coeff(ones) == RatFun(IntPoly(factorial(static_cast<unsigned>(n)))));
      // Triangularity: only shapes dominated by la appear.
      for (const auto& [mu, c] : j.terms()) {
        (void)c;
        CHECK(dominance_leq(mu, la));
      }
    }
  }
}

TEST_CASE("four methods agree") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& la : revlex_order(n)) {
      SymExpr ref = jack_iteration(la).expr;
      CHECK(renormalize(jack_determinant(la), JackNorm::Q).expr == ref);
      JackExpansion gs = jack_gram_schmidt(la);
      CHECK(convert_basis(renormalize(gs, JackNorm::Q), Basis::Homog).expr == ref);
      CHECK(jack_filtration(la, FiltrationTarget::QExpansion).expr == ref);
      SymExpr jm = jack_filtration(la, FiltrationTarget::MExpansion).expr;
      CHECK(jm == convert_basis(renormalize(jack_iteration(la), JackNorm::J),
                                Basis::Monomial)
                      .expr);
    }
  }
}

TEST_CASE("iteration survives the equal-eigenvalue collision") {
  // (3,3) and (4,1,1) share e'; both expansions still come out, and the
  // off-cone coefficient stays zero.
  SymExpr a = jack(P("3,3"), JackNorm::Q, Basis::Homog);
  SymExpr b = jack(P("4,1,1"), JackNorm::Q, Basis::Homog);
  CHECK(a.coeff(P("3,3")) == RatFun(1));
  CHECK(a.coeff(P("4,1,1")).is_zero());
  CHECK(b.coeff(P("4,1,1")) == RatFun(1));
  CHECK(b.coeff(P("3,3")).is_zero());
  // Cross pairing vanishes like any distinct pair.
  CHECK(inner(jack_p(P("3,3"), JackNorm::J), jack_p(P("4,1,1"), JackNorm::J)).is_zero());
}

TEST_CASE("entry point composes normalization, basis, and method") {
  for (JackMethod m : {JackMethod::Iteration, JackMethod::Determinant, JackMethod::GramSchmidt,
                       JackMethod::Filtration}) {
    CHECK(jack(P("3,1"), JackNorm::J, Basis::Monomial, m) ==
          jack(P("3,1"), JackNorm::J, Basis::Monomial));
  }
  CHECK(jack_p(P("3,1"), JackNorm::J) == jack(P("3,1"), JackNorm::J, Basis::Power));
  // Repeated calls hit the memo and stay identical.
  CHECK(jack_p(P("3,1"), JackNorm::J) == jack_p(P("3,1"), JackNorm::J));
  // Renormalization scalars connect the families.
  SymExpr q = jack(P("3,1"), JackNorm::Q, Basis::Power);
  SymExpr j = jack(P("3,1"), JackNorm::J, Basis::Power);
  CHECK(j == q.scaled(hook_product_full(P("3,1"), HookKind::Upper)));
}

TEST_CASE("two-row closed form") {
  // a_1 at (1,1) is the canonical -2/(1+a).
  CHECK(two_row_q(1, 1).coeff(P("2")) == rf({-2}, {1, 1}));
  CHECK(two_row_q(1, 1).coeff(P("1,1")) == RatFun(1));
  for (int r = 1; r <= 7; ++r) {
    for (int s = 0; s <= r && r + s <= 8; ++s) {
      Partition la = s > 0 ? Partition({r, s}) : Partition({r});
      SymExpr closed = two_row_q(r, s);
      SymExpr engine = jack(la, JackNorm::Q, Basis::Homog);
      CHECK(closed == engine);
    }
  }
  // One-row degenerate case: Q_(r) is q_r itself.
  for (int r = 1; r <= 6; ++r) {
    CHECK(jack(Partition({r}), JackNorm::Q, Basis::Homog) ==
          SymExpr::term(Basis::Homog, Partition({r}), RatFun(1)));
  }
}

TEST_CASE("two-column closed form") {
  for (int r = 1; r <= 7; ++r) {
    for (int s = 0; s <= r && r + s <= 8; ++s) {
      Partition shape = (s > 0 ? Partition({r, s}) : Partition({r})).conjugate();
      SymExpr closed = two_column_m(r, s);
      SymExpr engine = jack(shape, JackNorm::J, Basis::Monomial);
      CHECK(closed == engine);
    }
  }
}

TEST_CASE("chain sums") {
  // Unique chain (1,1,1) -> (2,1) -> (3) with forward divided differences.
  auto s = filtration_start_sums(P("1,1,1"));
  CHECK(s.at(P("1,1,1")) == RatFun(1));
  CHECK(s.at(P("3")) == rf({6}, {2, 3, 1}));  // 6 / ((1+a)(2+a))
  // End-anchored sums reproduce the one-column coefficient of the integral
  // form: end_sums(la)[(1^n)] = n! / lower-hooks(la).
  auto e = filtration_end_sums(P("2,1"));
  CHECK(e.at(P("1,1,1")) == rf({6}) / rf({2, 1}));
  CHECK(e.at(P("2,1")) == RatFun(1));
}

TEST_CASE("specialization at one is Schur") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& la : revlex_order(n)) {
      SymExpr p_at_one = eval_alpha(jack(la, JackNorm::P, Basis::Monomial), BigRat(1));
      CHECK(p_at_one == oracle::schur_in_m(la));
    }
  }
}
