#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qjack/virasoro.hpp"
#include "support/quadext.hpp"

using namespace qjack;
using quadext::QuadExt;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }

RatFun rf(std::vector<BigInt> num, std::vector<BigInt> den = {1}) {
  return RatFun(IntPoly(std::move(num)), IntPoly(std::move(den)));
}
} // namespace

TEST_CASE("central charge") {
  CHECK(central_charge() == rf({-6, 13, -6}, {0, 1}));
  CHECK(central_charge().eval_at(BigRat(1)) == BigRat(1));   // free boson
  CHECK(central_charge().eval_at(BigRat(2)) == BigRat(-2));
  CHECK(central_charge().eval_at(BigRat(1, 2)) == BigRat(-2));
}

TEST_CASE("central charge factors through the two-charge parametrization") {
  // In Q(a)[t]/(t^2 - 2a) put a+ = t and a- = -2/t; then
  // c = 1 - 3 (a+ + a-)^2 lands back in Q(a) and matches.
  QuadExt t = QuadExt::t();
  QuadExt aplus = t;
  QuadExt aminus = QuadExt::scalar(RatFun(-2)) * t.inverse();
  QuadExt sum = aplus + aminus;
  QuadExt c = QuadExt::scalar(RatFun(1)) - QuadExt::scalar(RatFun(3)) * sum * sum;
  CHECK(c.rational());
  CHECK(c.lo == central_charge());
  // The two charges multiply to -2 (the defining normalization).
  CHECK(aplus * aminus == QuadExt::scalar(RatFun(-2)));
}

TEST_CASE("singular parameter matches the two-charge form") {
  // beta*(r, s) = 2 a_{-r,-s} / a+ with a_{r,s} = ((1-r) a+ + (1-s) a-) / 2.
  QuadExt t = QuadExt::t();
  QuadExt aminus = QuadExt::scalar(RatFun(-2)) * t.inverse();
  for (int r = 1; r <= 4; ++r) {
    for (int s = 1; s <= 4; ++s) {
      QuadExt ars = (QuadExt::scalar(RatFun(1 + r)) * t +
                     QuadExt::scalar(RatFun(1 + s)) * aminus) *
                    QuadExt::scalar(RatFun::fraction(1, 2));
      QuadExt beta = QuadExt::scalar(RatFun(2)) * ars * t.inverse();
      CHECK(beta.rational());
      CHECK(beta.lo == singular_beta_formula(r, s));
    }
  }
}

TEST_CASE("quadratic modes") {
  SymExpr one = SymExpr::unit(Basis::Power);
  SymExpr p1 = SymExpr::term(Basis::Power, P("1"), RatFun(1));
  // Annihilation side kills low weights.
  CHECK(m_op(1, one).is_zero());
  CHECK(m_op(2, p1).is_zero());
  CHECK(m_op(1, jack_p(P("2"), JackNorm::J)) == p1.scaled(rf({0, 0, 2})));
  // Creation side: M_{-1} p_1 = a p_2.
  CHECK(m_op(-1, p1) == SymExpr::term(Basis::Power, P("2"), rf({0, 1})));
  CHECK(m_op(-2, one).is_zero());  // needs two ladder factors, none fit
  // The zero mode scales by a * weight.
  for (int w = 0; w <= 5; ++w) {
    for (const auto& la : revlex_order(w)) {
      SymExpr f = SymExpr::term(Basis::Power, la, RatFun(1));
      CHECK(m_op(0, f) == f.scaled(rf({0, w})));
    }
  }
  // M_{-n} is adjoint to M_n.
  for (int n = 1; n <= 3; ++n) {
    for (int w = 0; w <= 4; ++w) {
      for (const auto& la : revlex_order(w)) {
        for (const auto& mu : revlex_order(w + n)) {
          SymExpr f = SymExpr::term(Basis::Power, la, RatFun(1));
          SymExpr g = SymExpr::term(Basis::Power, mu, RatFun(1));
          CHECK(inner(m_op(-n, f), g) == inner(f, m_op(n, g)));
        }
      }
    }
  }
}

TEST_CASE("pairing identities for the quadratic modes") {
  for (int w = 1; w <= 5; ++w) {
    for (const auto& la : revlex_order(w)) {
      for (const auto& mu : revlex_order(w - 1)) CHECK(m1_pairing_ok(la, mu));
      if (w >= 2) {
        for (const auto& mu : revlex_order(w - 2)) CHECK(m2_pairing_ok(la, mu));
      }
    }
  }
}

TEST_CASE("lowering operators on small states") {
  // L_1 J_(1) = (beta - 2 + 2/a) a scales the vacuum; zero exactly at the
  // singular parameter of the unit square.
  VirasoroParams at_zero{RatFun()};
  SymExpr l1 = l_apply(at_zero, 1, jack_p(P("1"), JackNorm::J));
  CHECK(l1 == SymExpr::unit(Basis::Power).scaled(rf({2, -2})));  // 2 - 2a at beta = 0
  VirasoroParams at_star{singular_beta_formula(1, 1)};
  CHECK(l_apply(at_star, 1, jack_p(P("1"), JackNorm::J)).is_zero());

  // L_2 J_(2) = 2a^2 (3 - 2/a - beta) on the vacuum.
  SymExpr l2 = l_apply(at_zero, 2, jack_p(P("2"), JackNorm::J));
  CHECK(l2 == SymExpr::unit(Basis::Power).scaled(rf({0, -4, 6})));  // 6a^2 - 4a
  VirasoroParams at_21{singular_beta_formula(2, 1)};
  CHECK(l_apply(at_21, 2, jack_p(P("2"), JackNorm::J)).is_zero());
  CHECK(l_apply(at_21, 1, jack_p(P("2"), JackNorm::J)).is_zero());

  CHECK_THROWS_AS(l_apply(at_zero, 0, l1), std::invalid_argument);
  CHECK_THROWS_AS(l_apply(at_zero, 5, l1), std::invalid_argument);
  CHECK(l_apply(at_zero, 5, l1, 6).is_zero());  // raised bound, weight too low anyway
}

TEST_CASE("whole lowering family vanishes on certified rectangles") {
  for (int r = 1; r <= 3; ++r) {
    for (int s = 1; s <= 3; ++s) {
      if (r * s > 6) continue;
      Partition shape(std::vector<int>(static_cast<size_t>(s), r));
      VirasoroParams vp{singular_beta_formula(r, s)};
      SymExpr j = jack_p(shape, JackNorm::J);
      for (int n = 1; n <= 4 && n <= shape.weight(); ++n) {
        CHECK(l_apply(vp, n, j).is_zero());
      }
    }
  }
}

TEST_CASE("affine solve certifies rectangles and rejects the rest") {
  for (int r = 1; r <= 2; ++r) {
    for (int s = 1; s <= 2; ++s) {
      SingularCheck c = singular_check(r, s);
      CHECK(c.is_singular());
      CHECK(c.matches_formula);
      CHECK(c.beta == singular_beta_formula(r, s));
      CHECK(c.shape == Partition(std::vector<int>(static_cast<size_t>(s), r)));
    }
  }
  for (int w = 2; w <= 5; ++w) {
    for (const auto& la : revlex_order(w)) {
      bool rectangle = la.mult(la.part(1)) == la.length();
      if (rectangle) {
        CHECK(singular_parameter(la).has_value());
      } else {
        CHECK(!singular_parameter(la).has_value());
      }
    }
  }
}
