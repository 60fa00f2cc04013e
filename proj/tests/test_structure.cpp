#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qjack/structure.hpp"

using namespace qjack;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }

RatFun rf(std::vector<BigInt> num, std::vector<BigInt> den = {1}) {
  return RatFun(IntPoly(std::move(num)), IntPoly(std::move(den)));
}
} // namespace

TEST_CASE("one-row product pairing anchors") {
  CHECK(pieri_direct(1, P(""), P("1")) == rf({0, 1}));             // a
  CHECK(pieri_direct(1, P("1"), P("1,1")) == rf({0, 0, 2}));       // 2a^2
  CHECK(pieri_direct(1, P("1"), P("2")) == rf({0, 0, 2}));         // 2a^2
  CHECK(pieri_direct(2, P("1"), P("2,1")) == rf({0, 0, 0, 4, 2})); // 2a^3(2+a)
  CHECK(pieri_hook(2, P("1"), P("2,1")) == rf({0, 0, 0, 4, 2}));
  // Off the strip: zero both ways.
  CHECK(pieri_direct(2, P("1"), P("1,1,1")).is_zero());
  CHECK(pieri_hook(2, P("1"), P("1,1,1")).is_zero());
  // Weight mismatch is zero, not an error.
  CHECK(pieri_hook(2, P("1"), P("2")).is_zero());
  CHECK(pieri_direct(2, P("1"), P("2")).is_zero());
  // n = 0 collapses to the self pairing.
  CHECK(pieri_hook(0, P("2,1"), P("2,1")) == self_inner(P("2,1"), JackNorm::J));
  CHECK(pieri_hook(0, P("2,1"), P("1,1,1")).is_zero());
}

TEST_CASE("hook form equals the expanded product everywhere small") {
  for (int w = 1; w <= 5; ++w) {
    for (const auto& la : revlex_order(w)) {
      for (int n = 0; n <= w; ++n) {
        for (const auto& mu : revlex_order(w - n)) {
          CHECK(pieri_direct(n, mu, la) == pieri_hook(n, mu, la));
        }
      }
    }
  }
}

TEST_CASE("hook form structure") {
  // Nonzero exactly on horizontal strips, and then a polynomial with
  // positive integer coefficients.
  for (int w = 2; w <= 6; ++w) {
    for (const auto& la : revlex_order(w)) {
      for (int n = 1; n <= w; ++n) {
        for (const auto& mu : revlex_order(w - n)) {
          RatFun v = pieri_hook(n, mu, la);
          bool strip = is_horizontal_strip(mu, la, n);
          CHECK(v.is_zero() == !strip);
          if (strip) CHECK(v.is_nonneg_integer_poly());
        }
      }
    }
  }
}

TEST_CASE("general product pairing anchors") {
  CHECK(lr_direct(P("1"), P("1"), P("2")) == rf({0, 0, 2}));
  CHECK(lr_direct(P("1"), P("1"), P("1,1")) == rf({0, 0, 2}));
  CHECK(lr_filtration(P("1"), P("1"), P("2")) == rf({0, 0, 2}));
  CHECK(lr_filtration(P("1"), P("1"), P("1,1")) == rf({0, 0, 2}));
  // Empty factor degenerates to the orthogonality relation.
  CHECK(lr_direct(P(""), P("2"), P("2")) == self_inner(P("2"), JackNorm::J));
  CHECK(lr_filtration(P(""), P("2"), P("2")) == self_inner(P("2"), JackNorm::J));
  CHECK(lr_filtration(P(""), P("2"), P("1,1")).is_zero());
  // Weight mismatch.
  CHECK(lr_direct(P("1"), P("1"), P("3")).is_zero());
  CHECK(lr_filtration(P("1"), P("1"), P("3")).is_zero());
}

TEST_CASE("the two product routes agree") {
  for (int w = 0; w <= 5; ++w) {
    for (const auto& la : revlex_order(w)) {
      for (int w1 = 0; w1 <= w; ++w1) {
        for (const auto& mu : revlex_order(w1)) {
          for (const auto& nu : revlex_order(w - w1)) {
            CHECK(lr_direct(mu, nu, la) == lr_filtration(mu, nu, la));
          }
        }
      }
    }
  }
}

TEST_CASE("product pairing is symmetric and reduces to the one-row case") {
  for (const auto& la : revlex_order(5)) {
    for (int w1 = 1; w1 <= 4; ++w1) {
      for (const auto& mu : revlex_order(w1)) {
        for (const auto& nu : revlex_order(5 - w1)) {
          CHECK(lr_direct(mu, nu, la) == lr_direct(nu, mu, la));
        }
      }
      // A one-row factor reduces to the dedicated pairing.
      for (const auto& mu : revlex_order(5 - w1)) {
        CHECK(lr_direct(Partition({w1}), mu, la) == pieri_direct(w1, mu, la));
      }
    }
  }
}

TEST_CASE("witnesses decompose the chain-splice value") {
  std::vector<LRWitness> wit;
  RatFun total = lr_filtration(P("2,1"), P("1,1"), P("3,2"), &wit);
  CHECK(!wit.empty());
  RatFun sum;
  for (const auto& w : wit) {
    CHECK(!w.contribution.is_zero());
    CHECK(w.tau1.weight() == 3);
    CHECK(w.tau2.weight() == 2);
    sum += w.contribution;
  }
  CHECK(sum == total);
  // A zero value comes with no witnesses.
  std::vector<LRWitness> none;
  CHECK(lr_filtration(P("1"), P("1"), P("3")).is_zero());
  lr_filtration(P("1"), P("1"), P("3"), &none);
  CHECK(none.empty());
}

TEST_CASE("product coefficients are integral in the parameter") {
  for (int w = 0; w <= 5; ++w) {
    for (const auto& la : revlex_order(w)) {
      for (int w1 = 0; w1 <= w; ++w1) {
        for (const auto& mu : revlex_order(w1)) {
          for (const auto& nu : revlex_order(w - w1)) {
            CHECK(lr_direct(mu, nu, la).is_integer_poly());
          }
        }
      }
    }
  }
}

TEST_CASE("integrality report") {
  IntegralityReport rep = integrality_report(6);
  CHECK(rep.ok());
  CHECK(rep.max_weight == 6);
  CHECK(rep.shapes_checked == 30);  // p(0) + ... + p(6)
  CHECK(rep.coefficients_checked > rep.shapes_checked);
  CHECK(rep.issues.empty());
}
