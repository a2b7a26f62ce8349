#include <doctest.h>

#include <functional>
#include <vector>

#include "cliquecover/certificate.hpp"
#include "cliquecover/sequence.hpp"

using namespace cliquecover;

namespace {

// Every non-increasing sequence with entries 1..4 and sum <= max_sum.
std::vector<std::vector<int>> all_sequences(int max_sum) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> grow = [&](int sum, int cap) {
    for (int e = std::min(cap, max_sum - sum); e >= 1; --e) {
      cur.push_back(e);
      out.push_back(cur);
      grow(sum + e, e);
      cur.pop_back();
    }
  };
  grow(0, 4);
  return out;
}

long long f_of(const std::vector<int>& entries) { return value_f(GreedySequence(entries)).f; }

}  // namespace

TEST_CASE("sequence validation") {
  CHECK_THROWS_AS(GreedySequence({}), std::invalid_argument);
  CHECK_THROWS_AS(GreedySequence({5, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GreedySequence({0}), std::invalid_argument);
  CHECK_THROWS_AS(GreedySequence({3, 4}), std::invalid_argument);
  GreedySequence a({4, 3, 1});
  CHECK(a.sum() == 8);
  CHECK(a.length() == 3);
  CHECK(a.count_at_least(4) == 1);
  CHECK(a.count_at_least(3) == 2);
  CHECK(a.count_at_least(2) == 2);
}

TEST_CASE("anchor values of f") {
  CHECK(f_of({3}) == 1);
  CHECK(f_of({4, 3}) == 8);
  CHECK(f_of({4, 4, 3}) == 32);
  CHECK(f_of({4, 4, 4}) == 39);
  CHECK(f_of({3, 2, 2}) == 9);
  CHECK(f_of({3, 3, 1}) == 12);
  CHECK(f_of({4, 3, 2}) == 18);
  CHECK(f_of({4, 3, 1}) == 12);
  CHECK(f_of({3, 2, 1}) == 6);
  CHECK(f_of({2, 1, 1}) == 0);
  CHECK(f_of({2, 2}) == 0);
  CHECK(f_of({3, 3}) == 8);
}

TEST_CASE("operation selection follows the 1 > 2 > 3 priority") {
  // Two 1s: first becomes 2, last removed.
  auto step = apply_operation(GreedySequence({3, 1, 1}));
  REQUIRE(step.has_value());
  CHECK(step->op == 1);
  CHECK(step->result.entries() == std::vector<int>{3, 2});

  // One 1 and a 2: the 2 becomes 3, the 1 is removed.
  step = apply_operation(GreedySequence({2, 2, 1}));
  REQUIRE(step.has_value());
  CHECK(step->op == 2);
  CHECK(step->result.entries() == std::vector<int>{3, 2});

  // No 1, two 2s: first 2 becomes 3, last 2 becomes 1.
  step = apply_operation(GreedySequence({2, 2, 2}));
  REQUIRE(step.has_value());
  CHECK(step->op == 3);
  CHECK(step->result.entries() == std::vector<int>{3, 2, 1});

  CHECK_FALSE(apply_operation(GreedySequence({4, 3, 3})).has_value());
  CHECK_FALSE(apply_operation(GreedySequence({3, 3, 2})).has_value());
  CHECK_FALSE(apply_operation(GreedySequence({4, 4, 1})).has_value());
  CHECK_FALSE(apply_operation(GreedySequence({2})).has_value());
  CHECK_FALSE(apply_operation(GreedySequence({1})).has_value());
}

TEST_CASE("irreducible types partition the irreducible sequences") {
  CHECK(irreducible_type(GreedySequence({4, 3, 3})) == 1);
  CHECK(irreducible_type(GreedySequence({4, 4, 2})) == 2);
  CHECK(irreducible_type(GreedySequence({3, 3, 1})) == 3);
  CHECK(irreducible_type(GreedySequence({3, 2, 1})) == 0);
  CHECK(irreducible_type(GreedySequence({2, 2})) == 0);
  CHECK(irreducible_type(GreedySequence({2})) == 2);
  CHECK(irreducible_type(GreedySequence({1})) == 3);
}

TEST_CASE("exhaustive sequence calculus up to sum 18") {
  auto sequences = all_sequences(18);
  // Sum over s = 1..18 of the number of partitions of s into parts of size <= 4.
  CHECK(sequences.size() == 514);

  long long checked_steps = 0;
  for (const auto& entries : sequences) {
    GreedySequence a(entries);
    const int m = a.sum();
    const int p = a.length();
    const int a4 = a.count_at_least(4);
    const int b = a.count_at_least(3);
    const int c = a.count_at_least(2);
    FValue before = value_f(a);
    CHECK(before.s1 == b);

    auto step = apply_operation(a);
    if (step) {
      // The step never changes the sum or the number of 4s, and f never drops.
      CHECK(step->result.sum() == m);
      CHECK(step->result.length() == (step->op == 3 ? p : p - 1));
      CHECK(step->result.count_at_least(4) == a4);
      CHECK(step->f_before == before.f);
      CHECK(step->f_after >= step->f_before);

      // Closed-form deltas per operation.
      FValue after = value_f(step->result);
      long long delta = after.f - before.f;
      if (step->op == 1) {
        CHECK(after.s2 - before.s2 == b);
        CHECK(after.s3 - before.s3 == static_cast<long long>(b) * (p - c - 2));
        CHECK(delta == b + static_cast<long long>(b) * (p - c - 2));
      } else if (step->op == 2) {
        CHECK(delta == static_cast<long long>(c) * (c - b));
      } else {
        CHECK(delta == static_cast<long long>(c) * (c - b - 1));
      }
      ++checked_steps;
      CHECK(irreducible_type(a) == 0);
    } else {
      CHECK(irreducible_type(a) != 0);
    }

    // Full reduction: f non-decreasing, 4-count invariant, final type matches
    // the closed form exactly.
    ReductionTrace trace = reduce(a);
    long long prev = before.f;
    for (const auto& s : trace.steps) {
      CHECK(s.f_before == prev);
      CHECK(s.f_after >= s.f_before);
      prev = s.f_after;
    }
    CHECK(trace.final.count_at_least(4) == a4);
    CHECK(trace.final_type != 0);
    CHECK(irreducible_type(trace.final) == trace.final_type);
    Rational closed = closed_form_f(trace.final_type, trace.final.sum(), trace.final.length());
    CHECK(closed == Rational(value_f(trace.final).f));
    CHECK(value_f(trace.final).f >= before.f);

    // The adjusted bound dominates the reduced value at (m', q).
    CHECK(adjustment_bound(trace.final.sum(), trace.final.length()) >= closed);
  }
  CHECK(checked_steps > 0);
}

TEST_CASE("closed forms reject inconsistent shapes") {
  CHECK_THROWS_AS(closed_form_f(1, 13, 3), std::invalid_argument);  // m > 4q
  CHECK_THROWS_AS(closed_form_f(1, 8, 3), std::invalid_argument);   // m < 3q
  CHECK_THROWS_AS(closed_form_f(4, 12, 3), std::invalid_argument);  // no such kind
  CHECK(closed_form_f(1, 12, 3) == Rational(39));  // (4,4,4)
  CHECK(closed_form_f(3, 7, 3) == Rational(12));   // (3,3,1)
  CHECK(closed_form_f(2, 8, 3) == Rational(f_of({3, 3, 2})));
}

TEST_CASE("bound evaluations are exact rationals") {
  CHECK(adjustment_bound(7, 2) == Rational(8));
  CHECK(to_string(key_lemma_bound(12, 3)) == "370/9");
  CHECK(key_lemma_bound(12, 3) == rat(370, 9));
}

TEST_CASE("reduction trace serialization") {
  ReductionTrace trace = reduce(GreedySequence({2, 2, 2, 1, 1}));
  auto j = trace_to_json(trace);
  CHECK(j.contains("steps"));
  CHECK(j.contains("final"));
  CHECK(j.contains("type"));
  CHECK(j["type"].get<int>() == trace.final_type);
  CHECK(j["steps"].size() == trace.steps.size());
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    CHECK(j["steps"][i]["op"].get<int>() == trace.steps[i].op);
    CHECK(j["steps"][i]["f_before"].get<long long>() == trace.steps[i].f_before);
    CHECK(j["steps"][i]["f_after"].get<long long>() == trace.steps[i].f_after);
  }
  // The reduction of (2,2,2,1,1) ends irreducible with q < 5 and the same
  // number of 4s (zero).
  CHECK(trace.final.length() < 5);
  CHECK(trace.final.count_at_least(4) == 0);
}
