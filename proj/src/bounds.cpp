#include "cliquecover/bounds.hpp"

#include <stdexcept>

#include "cliquecover/cliques.hpp"

namespace cliquecover {

long long erdos_h(long long n, int k, int t) {
  if (n < 1 || t < 1 || k <= t)
    throw std::invalid_argument("erdos_h requires n >= 1 and k > t >= 1");
  long long total = 0;
  std::vector<int> idx(t);
  // All index tuples 0 <= idx[0] < ... < idx[t-1] <= k-2.
  auto descend = [&](auto&& self, int pos, int from, long long product) -> void {
    if (pos == t) {
      total += product;
      return;
    }
    for (int i = from; i <= k - 2; ++i)
      self(self, pos + 1, i + 1, product * ((n + i) / (k - 1)));
  };
  descend(descend, 0, 0, 1);
  return total;
}

MoonMoserCheck moon_moser_check(const Graph& g, int t) {
  if (t < 2) throw std::invalid_argument("moon_moser_check requires t >= 2");
  MoonMoserCheck out;
  out.k_prev = count_cliques(g, t - 1);
  out.k_cur = count_cliques(g, t);
  out.k_next = count_cliques(g, t + 1);
  if (out.k_prev == 0 || out.k_cur == 0)
    throw std::invalid_argument("moon_moser_check requires nonzero clique counts at t-1 and t");
  out.lhs = rat(out.k_next, out.k_cur);
  long long tt = static_cast<long long>(t) * t;
  out.rhs = (rat(tt, 1) * out.k_cur / out.k_prev - g.size()) / (tt - 1);
  out.slack = out.lhs - out.rhs;
  out.holds = out.slack >= 0;
  return out;
}

namespace {

Rational k4_balanced(long long n) {
  if (n < 4) return 0;
  return erdos_h(n, 5, 4);
}

void push_item(BoundReport& report, const std::string& name, bool pass, const Rational& lhs,
               const Rational& rhs) {
  report.items.push_back({name, pass, to_string(lhs), to_string(rhs)});
  if (!pass) report.pass = false;
}

// The cubic-plus-correction branch bounds shared by the chain sweep; m plays
// the role of the vertex count, q the reduced sequence length.
Rational branch_main(long long m, long long q) {
  Rational qq(q), mm(m);
  return rat(59, 2) * qq * qq * qq - 24 * qq * qq * mm + rat(13, 2) * qq * mm * mm -
         rat(5, 9) * mm * mm * mm;
}

Rational branch_correction(int branch, long long m, long long q) {
  Rational qq(q), mm(m);
  switch (branch) {
    case 1:
      return rat(13, 2) * qq * qq - rat(17, 6) * qq * mm + rat(2, 9) * mm * mm + rat(1, 3) * qq -
             rat(1, 9) * mm + rat(4, 9);
    case 2:
      return -23 * qq * qq + rat(79, 6) * qq * mm - rat(35, 18) * mm * mm + rat(11, 2) * qq -
             rat(11, 6) * mm;
    case 3:
      return -rat(105, 2) * qq * qq + rat(175, 6) * qq * mm - rat(37, 9) * mm * mm +
             rat(92, 3) * qq - rat(80, 9) * mm - rat(16, 3);
    default:
      throw std::invalid_argument("branch must be 1, 2 or 3");
  }
}

}  // namespace

BoundReport turan_k4_identities(long long n) {
  if (n < 4) throw std::invalid_argument("turan_k4_identities requires n >= 4");
  BoundReport report;
  Rational k4_n = k4_balanced(n);
  Rational k4_prev = k4_balanced(n - 1);
  Rational increment = k4_n - k4_prev;
  if (n >= 6) {
    Rational lower = rat((n - 2) * (n - 2) * (n + 2) * (n + 2), 256);
    Rational upper = rat(n * n * n * n, 256);
    push_item(report, "k4_lower", lower <= k4_n, lower, k4_n);
    push_item(report, "k4_upper", k4_n <= upper, k4_n, upper);
    Rational inc_lower = rat((n - 1) * (n - 1) * (n - 1), 64);
    Rational inc_upper = rat(n * n * n, 64);
    push_item(report, "increment_lower", inc_lower <= increment, inc_lower, increment);
    push_item(report, "increment_upper", increment <= inc_upper, increment, inc_upper);
  }
  Rational k3_turan = erdos_h(3 * n / 4, 4, 3);
  push_item(report, "increment_identity", increment == k3_turan, increment, k3_turan);
  return report;
}

Rational peel_margin(long long n, int c) {
  if (c < 4 || n < c) throw std::invalid_argument("peel_margin requires n >= c >= 4");
  long long r = n - c;
  Rational rest = rat(r * r * r * r, 256) + 1 + r +
                  rat(c * (c - 1) / 2, 1) * rat(r, c) * rat(r, c) +
                  rat(static_cast<long long>(c) * (c - 1) * (c - 2) / 6, 1) * rat(r, c) *
                      rat(r, c) * rat(r, c);
  return rat((n - 2) * (n - 2) * (n + 2) * (n + 2), 256) - rest;
}

Rational peel_margin_cubic(long long n, int c) {
  Rational nn(n);
  Rational n2 = nn * nn, n3 = nn * nn * nn;
  switch (c) {
    case 6:
      return rat(1, 864) * n3 + rat(3, 8) * n2 - rat(21, 8) * nn + 5;
    case 7:
      return rat(23, 3136) * n3 + rat(479, 896) * n2 - rat(297, 64) * nn + rat(2735, 256);
    case 8:
      return rat(1, 64) * n3 + rat(21, 32) * n2 - 7 * nn + rat(305, 16);
    case 9:
      return rat(395, 15552) * n3 + rat(283, 384) * n2 - rat(615, 64) * nn + rat(7791, 256);
    case 10:
      return rat(29, 800) * n3 + rat(31, 40) * n2 - rat(99, 8) * nn + 45;
    default:
      throw std::invalid_argument("peel_margin_cubic is tabulated for 6 <= c <= 10");
  }
}

Rational peel_margin_cubic_derivative(long long n, int c) {
  Rational nn(n);
  Rational n2 = nn * nn;
  switch (c) {
    case 6:
      return rat(1, 288) * n2 + rat(3, 4) * nn - rat(21, 8);
    case 7:
      return rat(69, 3136) * n2 + rat(479, 448) * nn - rat(297, 64);
    case 8:
      return rat(3, 64) * n2 + rat(21, 16) * nn - 7;
    case 9:
      return rat(395, 5184) * n2 + rat(283, 192) * nn - rat(615, 64);
    case 10:
      return rat(87, 800) * n2 + rat(31, 20) * nn - rat(99, 8);
    default:
      throw std::invalid_argument("peel_margin_cubic_derivative is tabulated for 6 <= c <= 10");
  }
}

Rational base_case_margin(long long n) {
  if (n < 6) throw std::invalid_argument("base_case_margin requires n >= 6");
  long long r = n - 5;
  return k4_balanced(n) - k4_balanced(n - 5) - 1 - r - rat(2, 5) * r * r -
         rat(2, 25) * r * r * r;
}

Rational base_case_margin_cubic(long long n) {
  if (n < 6) throw std::invalid_argument("base_case_margin_cubic requires n >= 6");
  long long k = n / 4;
  Rational kk(k);
  Rational k2 = kk * kk, k3 = kk * kk * kk;
  switch (n % 4) {
    case 0:
      return -rat(1, 25) * (3 * k3 - 90 * k2 + 75 * kk - 50);
    case 1:
      return -rat(1, 25) * (3 * k3 - 74 * k2 + 64 * kk - 18);
    case 2:
      return -rat(1, 25) * (3 * k3 - 78 * k2 + 51 * kk - 14);
    default:
      return -rat(1, 25) * (3 * k3 - 82 * k2 + 11 * kk - 1);
  }
}

ChainCheckResult chain_check(long long n) {
  if (n < 6) throw std::invalid_argument("chain_check requires n >= 6");
  ChainCheckResult out;
  out.n = n;
  out.increment = k4_balanced(n) - k4_balanced(n - 1);

  long long d_lo = 3 * n / 4 + 1;
  long long d_hi = 4 * n / 5;
  for (long long d = d_lo; d <= d_hi; ++d) {
    long long q_lo = (d + 3) / 4;
    long long q_hi = n - d;
    for (long long q = q_lo; q <= q_hi; ++q) {
      ++out.pairs;
      Rational main = branch_main(d, q);
      for (int branch = 1; branch <= 3; ++branch) {
        Rational value = main + branch_correction(branch, d, q);
        if (value == out.increment) out.equalities.push_back({d, q, branch});
        else if (value > out.increment) {
          out.violations.push_back({d, q, branch});
          out.pass = false;
        }
      }
    }
  }

  out.endpoint_low_q = (n + 4) / 5;
  out.endpoint_high_q = (n + 3) / 4 - 1;
  out.endpoint_low_value =
      branch_main(n - out.endpoint_low_q, out.endpoint_low_q) +
      branch_correction(3, n - out.endpoint_low_q, out.endpoint_low_q);
  out.endpoint_high_value =
      branch_main(n - out.endpoint_high_q, out.endpoint_high_q) +
      branch_correction(3, n - out.endpoint_high_q, out.endpoint_high_q);
  out.endpoint_bound = rat((n - 1) * (n - 1) * (n - 1), 64);
  return out;
}

}  // namespace cliquecover
