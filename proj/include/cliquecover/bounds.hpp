#pragma once

#include <string>
#include <vector>

#include "cliquecover/graph.hpp"
#include "cliquecover/rational.hpp"

namespace cliquecover {

// Number of t-cliques of the balanced complete multipartite graph on n
// vertices and k-1 parts: the sum over 0 <= i_1 < ... < i_t <= k-2 of
// prod_r floor((n + i_r) / (k-1)).  Requires n >= 1 and k > t >= 1.
long long erdos_h(long long n, int k, int t);

struct MoonMoserCheck {
  long long k_prev = 0, k_cur = 0, k_next = 0;  // k_{t-1}, k_t, k_{t+1}
  Rational lhs, rhs, slack;                     // slack = lhs - rhs
  bool holds = false;
};

// k_{t+1}/k_t >= (t^2 k_t / k_{t-1} - n) / (t^2 - 1), exact.
// Requires t >= 2 and nonzero k_t and k_{t-1}.
MoonMoserCheck moon_moser_check(const Graph& g, int t);

struct BoundCheckItem {
  std::string name;
  bool pass = false;
  std::string lhs, rhs;  // exact values as rational strings
};

struct BoundReport {
  bool pass = true;
  std::vector<BoundCheckItem> items;
};

// For T = balanced 4-partite on n vertices, checks
//   (n-2)^2 (n+2)^2 / 256 <= k4(T(n)) <= n^4 / 256 and
//   (n-1)^3 / 64 <= k4(T(n)) - k4(T(n-1)) <= n^3 / 64      (n >= 6)
// and the identity k4(T(n)) - k4(T(n-1)) = k3(T(floor(3n/4), 3 parts)) (n >= 4).
BoundReport turan_k4_identities(long long n);

// Margin between the 4-clique lower bound (n-2)^2(n+2)^2/256 and the cost of
// peeling a c-clique: ((n-c)/4)^4 + 1 + (n-c) + C(c,2)((n-c)/c)^2 +
// C(c,3)((n-c)/c)^3.  Positive margin means peeling wins.  Requires n >= c >= 4.
Rational peel_margin(long long n, int c);

// Reference cubic expansion of peel_margin for c in 6..10, and its derivative
// in n; both agree with the direct definition as polynomials.
Rational peel_margin_cubic(long long n, int c);
Rational peel_margin_cubic_derivative(long long n, int c);

// Margin of the 5-vertex-peel recurrence at small n (n >= 6):
// k4(T(n)) - k4(T(n-5)) - 1 - (n-5) - (2/5)(n-5)^2 - (2/25)(n-5)^3.
// The direct definition is authoritative.
Rational base_case_margin(long long n);

// Residue-case cubic for the same margin (depends on n mod 4); kept separate
// because it disagrees with the direct value at some n (first at n = 8), and
// the report surfaces both instead of reconciling them.
Rational base_case_margin_cubic(long long n);

struct ChainEquality {
  long long d = 0, q = 0;
  int branch = 0;  // which correction term attains the bound
};

struct ChainCheckResult {
  long long n = 0;
  bool pass = true;         // no admissible pair exceeds the increment
  long long pairs = 0;      // admissible (d, q) pairs swept (may be zero)
  std::vector<ChainEquality> equalities;  // pairs meeting the increment exactly
  std::vector<ChainEquality> violations;  // pairs exceeding it (expected empty)
  Rational increment;       // k4(T(n)) - k4(T(n-1))
  // Third-branch bound evaluated at the endpoints q = ceil(n/5) and
  // ceil(n/4) - 1 with d = n - q, against (n-1)^3/64.
  long long endpoint_low_q = 0, endpoint_high_q = 0;
  Rational endpoint_low_value, endpoint_high_value, endpoint_bound;
};

// Sweeps every admissible pair floor(3n/4)+1 <= d <= floor(4n/5),
// ceil(d/4) <= q <= n - d and checks that all three branch bounds
// F_i(q, d) = main cubic + correction_i stay at or below the Turan 4-clique
// increment.  pass reflects the sweep only; the endpoint fields are
// informational.  Requires n >= 6.
ChainCheckResult chain_check(long long n);

}  // namespace cliquecover
