#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliquecover/partition.hpp"
#include "cliquecover/rational.hpp"

namespace cliquecover {

// Non-increasing sequence of part sizes, entries in 1..4.
class GreedySequence {
 public:
  // Validates: nonempty, entries in 1..4, non-increasing.
  explicit GreedySequence(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int length() const { return static_cast<int>(entries_.size()); }
  int sum() const;                 // m
  int count_at_least(int k) const; // a = count(4), b = count(>=3), c = count(>=2)

  bool operator==(const GreedySequence& o) const = default;

 private:
  std::vector<int> entries_;
};

// Part sizes of a clique partition; rejects parts larger than 4.
GreedySequence sequence_of(const CliquePartition& p);

struct FValue {
  long long s1 = 0, s2 = 0, s3 = 0;
  long long f = 0;  // s1 + s2 + s3
};

// Cover-size budget of a sequence: s1 counts whole parts, s2 one-seed and
// same-part-pair closures, s3 cross-part-pair closures.
FValue value_f(const GreedySequence& a);

struct OpStep {
  int op = 0;           // 1, 2 or 3
  int i = -1, j = -1;   // 0-based positions touched in the pre-step sequence
  GreedySequence result;
  long long f_before = 0, f_after = 0;
};

// One rewrite step, if any applies.  Priority 1 > 2 > 3:
//   op 1 (two or more 1s): first 1 becomes 2, last 1 removed;
//   op 2 (exactly one 1, at least one 2): first 2 becomes 3, the 1 removed;
//   op 3 (no 1, two or more 2s): first 2 becomes 3, last 2 becomes 1.
// Every step keeps the number of 4s and the sum m, and never decreases f.
std::optional<OpStep> apply_operation(const GreedySequence& a);

// 1: all entries in {3,4};  2: last entry 2, the rest in {3,4};
// 3: last entry 1, the rest in {3,4};  0: a rewrite step still applies.
int irreducible_type(const GreedySequence& a);

struct ReductionTrace {
  std::vector<OpStep> steps;
  GreedySequence final;
  int final_type = 0;
};

// Applies rewrite steps until none applies.  Terminates because the pair
// (length, number of 2s) drops lexicographically at every step.
ReductionTrace reduce(const GreedySequence& a);

// f of the irreducible sequence of the given type with sum m and length q.
// Throws unless (kind, m, q) is consistent:
//   kind 1: 3q <= m <= 4q;  kind 2: 3q-1 <= m <= 4q-2;  kind 3: 3q-2 <= m <= 4q-3.
Rational closed_form_f(int kind, int m, int q);

// Upper bound for f over the three irreducible shapes at (m, q):
// 28q^3 - (45/2)q^2 m + 6qm^2 - m^3/2 plus the largest shape correction.
Rational adjustment_bound(int m, int q);

// Upper bound for the size of a refined 3-clique cover of a graph with m
// vertices whose reduced sequence has length q:
// (59/2)q^3 - 24q^2 m + (13/2)qm^2 - (5/9)m^3 plus the largest of three
// correction terms.
Rational key_lemma_bound(int m, int q);

}  // namespace cliquecover
