#include <doctest.h>

#include "cliquecover/bounds.hpp"
#include "cliquecover/cliques.hpp"
#include "cliquecover/random.hpp"

using namespace cliquecover;

TEST_CASE("balanced multipartite clique counts match the floor-product formula") {
  CHECK(erdos_h(8, 5, 4) == 16);
  CHECK(erdos_h(5, 5, 4) == 2);
  CHECK(erdos_h(9, 4, 3) == 27);
  CHECK(erdos_h(12, 5, 4) == 81);

  // Independent oracle: literally count cliques of the balanced (k-1)-partite
  // graph, whose part sizes are exactly the floor terms of the formula.
  for (long long n = 1; n <= 20; ++n)
    for (int k = 2; k <= 6; ++k)
      for (int t = 1; t < k; ++t) {
        INFO("n=", n, " k=", k, " t=", t);
        REQUIRE(erdos_h(n, k, t) == count_cliques(turan_graph(static_cast<int>(n), k - 1), t));
      }

  CHECK_THROWS_AS(erdos_h(0, 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(erdos_h(5, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(erdos_h(5, 4, 0), std::invalid_argument);
}

TEST_CASE("clique count ratio inequality with exact slack") {
  // Complete graph: equality.
  MoonMoserCheck k4 = moon_moser_check(turan_graph(4, 4), 2);
  CHECK(k4.holds);
  CHECK(k4.slack == Rational(0));
  CHECK(k4.k_prev == 4);
  CHECK(k4.k_cur == 6);
  CHECK(k4.k_next == 4);

  // Balanced tripartite: both sides equal 1.
  MoonMoserCheck t9 = moon_moser_check(turan_graph(9, 3), 2);
  CHECK(t9.holds);
  CHECK(t9.lhs == Rational(1));
  CHECK(t9.rhs == Rational(1));

  // Triangle-free: left side 0, right side negative.
  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  MoonMoserCheck pent = moon_moser_check(c5, 2);
  CHECK(pent.holds);
  CHECK(pent.lhs == Rational(0));
  CHECK(pent.slack == rat(1, 3));

  CHECK_THROWS_AS(moon_moser_check(turan_graph(4, 4), 1), std::invalid_argument);
  CHECK_THROWS_AS(moon_moser_check(Graph(4), 2), std::invalid_argument);   // no edges
  CHECK_THROWS_AS(moon_moser_check(c5, 3), std::invalid_argument);         // no triangles

  // The inequality is universal: check random graphs wherever it applies.
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = graph_from_mask(7, rng() & ((1ull << 21) - 1));
    for (int t = 2; t <= 3; ++t) {
      if (count_cliques(g, t) == 0 || count_cliques(g, t - 1) == 0) continue;
      INFO("trial=", trial, " t=", t);
      REQUIRE(moon_moser_check(g, t).holds);
    }
  }
}

TEST_CASE("4-clique count of the balanced 4-partite graph sits between the quartics") {
  BoundReport six = turan_k4_identities(6);
  CHECK(six.pass);
  REQUIRE(six.items.size() == 5);
  CHECK(six.items[0].lhs == "4");  // (n-2)^2 (n+2)^2 / 256 = 4 exactly at n = 6

  BoundReport eight = turan_k4_identities(8);
  CHECK(eight.pass);
  for (const auto& item : eight.items) CHECK(item.pass);

  // Below 6 only the increment identity applies.
  CHECK(turan_k4_identities(4).items.size() == 1);
  CHECK(turan_k4_identities(4).pass);
  CHECK_THROWS_AS(turan_k4_identities(3), std::invalid_argument);

  for (long long n = 4; n <= 1000; ++n) {
    INFO("n=", n);
    REQUIRE(turan_k4_identities(n).pass);
  }
}

TEST_CASE("increment identity against directly counted cliques") {
  for (int n = 5; n <= 60; ++n) {
    long long diff = count_cliques(turan_graph(n, 4), 4) - count_cliques(turan_graph(n - 1, 4), 4);
    INFO("n=", n);
    REQUIRE(diff == erdos_h(3LL * n / 4, 4, 3));
  }
}

TEST_CASE("peeling a large clique beats the 4-clique lower bound") {
  CHECK(peel_margin(6, 6) == Rational(3));
  for (int c = 6; c <= 10; ++c)
    for (long long n = c; n <= 400; ++n) {
      INFO("c=", c, " n=", n);
      REQUIRE(peel_margin(n, c) > 0);
      // Agreement at more than four points per c makes the cubics identical
      // as polynomials.
      REQUIRE(peel_margin_cubic(n, c) == peel_margin(n, c));
    }
  for (int c = 6; c <= 10; ++c)
    for (long long n : {static_cast<long long>(c), 50LL, 2000LL}) {
      INFO("c=", c, " n=", n);
      REQUIRE(peel_margin_cubic_derivative(n, c) > 0);
    }

  // Tiny peels are allowed but do not pay off: margin 9/16 - 1 at n = c = 4.
  CHECK(peel_margin(4, 4) == rat(-7, 16));
  CHECK_THROWS_AS(peel_margin(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(peel_margin(10, 3), std::invalid_argument);
  CHECK_THROWS_AS(peel_margin_cubic(12, 5), std::invalid_argument);
  CHECK_THROWS_AS(peel_margin_cubic_derivative(12, 11), std::invalid_argument);
}

TEST_CASE("five-vertex-peel margin is positive on the induction range") {
  CHECK(base_case_margin(8) == rat(156, 25));
  CHECK(base_case_margin_cubic(8) == rat(236, 25));  // the tabulated cubic drifts here
  CHECK(base_case_margin(97) == rat(-366, 25));
  CHECK(base_case_margin_cubic(97) == rat(-366, 25));
  CHECK(base_case_margin(101) == rat(-2207, 25));
  CHECK(base_case_margin_cubic(101) == rat(-2207, 25));

  int mismatches = 0;
  for (long long n = 6; n <= 104; ++n) {
    if (base_case_margin(n) != base_case_margin_cubic(n)) ++mismatches;
    if (n == 97 || n == 101) {
      REQUIRE(base_case_margin(n) < 0);
      continue;
    }
    INFO("n=", n);
    REQUIRE(base_case_margin(n) > 0);
  }
  CHECK(mismatches == 24);

  CHECK_THROWS_AS(base_case_margin(5), std::invalid_argument);
  CHECK_THROWS_AS(base_case_margin_cubic(5), std::invalid_argument);
}

TEST_CASE("chained induction sweep at the two special orders") {
  ChainCheckResult a = chain_check(97);
  CHECK(a.pass);
  CHECK(a.pairs == 19);
  CHECK(a.violations.empty());
  REQUIRE(a.equalities.size() == 1);
  CHECK(a.equalities[0].d == 73);
  CHECK(a.equalities[0].q == 24);
  CHECK(a.equalities[0].branch == 1);
  CHECK(a.increment == Rational(13824));
  CHECK(a.endpoint_low_q == 20);
  CHECK(a.endpoint_high_q == 24);
  CHECK(a.endpoint_low_value == Rational(13406));
  CHECK(a.endpoint_high_value == rat(116038, 9));
  CHECK(a.endpoint_bound == Rational(13824));

  ChainCheckResult b = chain_check(101);
  CHECK(b.pass);
  CHECK(b.pairs == 21);
  REQUIRE(b.equalities.size() == 1);
  CHECK(b.equalities[0].d == 76);
  CHECK(b.equalities[0].q == 25);
  CHECK(b.equalities[0].branch == 1);
  CHECK(b.endpoint_low_value == Rational(15099));
  CHECK(b.endpoint_high_value == rat(131455, 9));
  CHECK(b.endpoint_bound == Rational(15625));
}

TEST_CASE("chained induction sweep across consecutive orders") {
  for (long long n = 105; n <= 140; ++n) {
    ChainCheckResult r = chain_check(n);
    INFO("n=", n);
    REQUIRE(r.pass);
    REQUIRE(r.violations.empty());
    if (n % 4 == 1) {
      // The first admissible pair meets the increment exactly.
      REQUIRE(r.equalities.size() == 1);
      REQUIRE(r.equalities[0].d == 3 * n / 4 + 1);
      REQUIRE(r.equalities[0].q == n - r.equalities[0].d);
      REQUIRE(r.equalities[0].branch == 1);
    } else {
      REQUIRE(r.equalities.empty());
    }
  }
  CHECK_THROWS_AS(chain_check(5), std::invalid_argument);

  // Small orders may have no admissible pairs at all; the sweep still passes.
  ChainCheckResult tiny = chain_check(6);
  CHECK(tiny.pass);
  CHECK(tiny.pairs == 0);
}
