#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "ncpt/exterior.hpp"
#include "ncpt/intmat.hpp"
#include "ncpt/monodromy.hpp"

using namespace ncpt;

namespace {

IntMatrix random_winding(int n, std::size_t b, int bound, std::mt19937& rng) {
  PairIndex pi(n);
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix w(pi.count(), b);
  for (std::size_t r = 0; r < w.rows(); ++r)
    for (std::size_t c = 0; c < b; ++c) w.at(r, c) = d(rng);
  return w;
}

std::vector<Int> random_loop(std::size_t b, int bound, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<Int> g(b);
  for (auto& v : g) v = d(rng);
  return g;
}

}  // namespace

TEST_CASE("single pair generator on explicit wedges", "[monodromy]") {
  // Indices 1 and 3 with 2 strictly between: sign (-1)^1.
  auto x = ExteriorElement::basis(3, {1, 2, 3});
  auto y = pair_generator_apply(x, 1, 3, 1);
  auto expect = x - ExteriorElement::generator(3, 2);
  REQUIRE(y == expect);

  // Adjacent pair: nothing in between, positive sign.
  auto z = pair_generator_apply(ExteriorElement::basis(3, {1, 2}), 1, 2, 5);
  ExteriorElement want(3);
  want.add_term({1, 2}, 1);
  want.add_term({}, 5);
  REQUIRE(z == want);

  // Sets not containing both indices are fixed.
  auto f = ExteriorElement::basis(3, {1, 2});
  REQUIRE(pair_generator_apply(f, 1, 3, 7) == f);
  REQUIRE(pair_generator_apply(f, 2, 3, 7) == f);

  REQUIRE_THROWS_AS(pair_generator_apply(f, 2, 2, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(pair_generator_apply(f, 1, 4, 1), std::invalid_argument);
}

TEST_CASE("zero winding gives the identity action", "[monodromy]") {
  for (int n : {2, 3, 4}) {
    PairIndex pi(n);
    IntMatrix w(pi.count(), 2);
    REQUIRE(monodromy_is_trivial(n, w));
    auto pair = monodromy_pair(n, w, {3, -1}, BasisOrder::Lex);
    REQUIRE(pair.even.is_identity());
    REQUIRE(pair.odd.is_identity());
  }
}

TEST_CASE("rank-2 one-parameter family", "[monodromy]") {
  for (int k = -4; k <= 4; ++k) {
    IntMatrix w{{1}};
    auto pair = monodromy_pair(2, w, {k}, BasisOrder::Lex);
    // Even basis (1, e12): unipotent with offset k; odd block is fixed.
    REQUIRE(pair.even == IntMatrix{{1, k}, {0, 1}});
    REQUIRE(pair.odd.is_identity());
  }
}

TEST_CASE("rank-3 block family over exponent triples", "[monodromy]") {
  // Winding = identity on pairs, loop chosen so that the pair exponents are
  // (a, c, b) in enumeration order (1,2), (1,3), (2,3).
  IntMatrix w = IntMatrix::identity(3);
  for (Int a = -2; a <= 2; ++a)
    for (Int b = -2; b <= 2; ++b)
      for (Int c = -2; c <= 2; ++c) {
        std::vector<Int> gamma{a, c, b};
        auto pair = monodromy_pair(3, w, gamma, BasisOrder::Dim3);
        IntMatrix even{{1, a, b, c}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
        IntMatrix odd{{1, 0, 0, b}, {0, 1, 0, -c}, {0, 0, 1, a}, {0, 0, 0, 1}};
        REQUIRE(pair.even == even);
        REQUIRE(pair.odd == odd);
      }
}

TEST_CASE("pair generators commute", "[monodromy]") {
  std::mt19937 rng(60);
  for (int n = 2; n <= 5; ++n) {
    PairIndex pi(n);
    std::uniform_int_distribution<int> t(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
      // Random element, two random generators in both orders.
      ExteriorElement x(n);
      auto full = basis_index_sets(n, BasisOrder::Lex);
      std::uniform_int_distribution<std::size_t> pick(0, full.size() - 1);
      std::uniform_int_distribution<int> coeff(-4, 4);
      for (int s = 0; s < 3; ++s) x.add_term(full[pick(rng)], coeff(rng));
      std::uniform_int_distribution<std::size_t> pp(0, pi.count() - 1);
      auto [i1, j1] = pi.pair(pp(rng));
      auto [i2, j2] = pi.pair(pp(rng));
      Int t1 = t(rng), t2 = t(rng);
      auto ab = pair_generator_apply(pair_generator_apply(x, i1, j1, t1), i2, j2, t2);
      auto ba = pair_generator_apply(pair_generator_apply(x, i2, j2, t2), i1, j1, t1);
      REQUIRE(ab == ba);
    }
  }
}

TEST_CASE("loop actions preserve parity and are unipotent", "[monodromy]") {
  std::mt19937 rng(61);
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 8; ++trial) {
      auto w = random_winding(n, 2, 3, rng);
      auto gamma = random_loop(2, 3, rng);
      for (int parity : {0, 1}) {
        auto m = monodromy_matrix(n, w, gamma, parity, BasisOrder::Lex);
        // (M - I)^{n+1} = 0.
        IntMatrix nil = m - IntMatrix::identity(m.rows());
        REQUIRE(nil.pow(static_cast<unsigned long>(n) + 1).is_zero());
      }
      // Parity preservation: image of a pure-parity element stays pure.
      for (int parity : {0, 1}) {
        for (const auto& j : basis_index_sets(n, parity, BasisOrder::Lex)) {
          auto img = monodromy_apply(ExteriorElement::basis(n, j), w, gamma);
          REQUIRE(img.has_parity(parity));
        }
      }
    }
  }
}

TEST_CASE("action is a homomorphism in the loop", "[monodromy]") {
  std::mt19937 rng(62);
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto w = random_winding(n, 3, 3, rng);
      auto g1 = random_loop(3, 3, rng);
      auto g2 = random_loop(3, 3, rng);
      std::vector<Int> sum(3);
      for (std::size_t i = 0; i < 3; ++i) sum[i] = g1[i] + g2[i];
      for (int parity : {0, 1}) {
        auto m1 = monodromy_matrix(n, w, g1, parity, BasisOrder::Lex);
        auto m2 = monodromy_matrix(n, w, g2, parity, BasisOrder::Lex);
        auto ms = monodromy_matrix(n, w, sum, parity, BasisOrder::Lex);
        REQUIRE(ms == m1 * m2);
      }
    }
  }
}

TEST_CASE("additivity in the winding matrix", "[monodromy]") {
  std::mt19937 rng(63);
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 6; ++trial) {
      auto w1 = random_winding(n, 2, 3, rng);
      auto w2 = random_winding(n, 2, 3, rng);
      auto gamma = random_loop(2, 3, rng);
      REQUIRE(additivity_check(n, w1, w2, gamma));
      // Special cases: w2 = 0 and w2 = -w1.
      PairIndex pi(n);
      IntMatrix zero(pi.count(), 2);
      REQUIRE(additivity_check(n, w1, zero, gamma));
      REQUIRE(additivity_check(n, w1, -w1, gamma));
    }
  }
  IntMatrix a(1, 2), b(1, 3);
  REQUIRE_THROWS_AS(additivity_check(2, a, b, {1, 1}), std::invalid_argument);
}

TEST_CASE("pair readout recovers the exponent vector", "[monodromy]") {
  std::mt19937 rng(64);
  for (int n : {2, 3, 4}) {
    PairIndex pi(n);
    for (int trial = 0; trial < 10; ++trial) {
      auto w = random_winding(n, 2, 4, rng);
      auto gamma = random_loop(2, 4, rng);
      auto t = loop_exponents(n, w, gamma);
      for (std::size_t p = 0; p < pi.count(); ++p) {
        auto [k, l] = pi.pair(p);
        REQUIRE(pair_readout(n, w, gamma, k, l) == t[p]);
      }
    }
  }
}

TEST_CASE("matrix assignment is injective on exponent vectors", "[monodromy]") {
  // With W the identity on pairs, distinct exponent vectors give distinct
  // actions; zero gives the identity.
  for (int n : {2, 3}) {
    PairIndex pi(n);
    const std::size_t np = pi.count();
    IntMatrix w = IntMatrix::identity(np);
    std::vector<Int> t(np, -2);
    for (;;) {
      bool zero = std::all_of(t.begin(), t.end(), [](const Int& v) { return v == 0; });
      auto pair = monodromy_pair(n, w, t, BasisOrder::Lex);
      bool ident = pair.even.is_identity() && pair.odd.is_identity();
      REQUIRE(ident == zero);
      // next vector in [-2, 2]^np
      std::size_t i = 0;
      while (i < np && t[i] == 2) t[i++] = -2;
      if (i == np) break;
      t[i] += 1;
    }
  }
}

TEST_CASE("triviality test equals zero winding", "[monodromy]") {
  std::mt19937 rng(65);
  for (int n : {2, 3}) {
    PairIndex pi(n);
    IntMatrix zero(pi.count(), 3);
    REQUIRE(monodromy_is_trivial(n, zero));
    for (int trial = 0; trial < 10; ++trial) {
      auto w = random_winding(n, 3, 3, rng);
      REQUIRE(monodromy_is_trivial(n, w) == w.is_zero());
    }
    IntMatrix bad(pi.count() + 1, 3);
    REQUIRE_THROWS_AS(monodromy_is_trivial(n, bad), std::invalid_argument);
  }
  REQUIRE_THROWS_AS(loop_exponents(2, IntMatrix{{1}}, {1, 2}), std::invalid_argument);
}
