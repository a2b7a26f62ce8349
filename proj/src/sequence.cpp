#include "cliquecover/sequence.hpp"

#include <algorithm>
#include <numeric>

namespace cliquecover {

GreedySequence::GreedySequence(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("sequence must be nonempty");
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1 || entries_[i] > 4)
      throw std::invalid_argument("sequence entry " + std::to_string(entries_[i]) +
                                  " outside 1..4");
    if (i > 0 && entries_[i] > entries_[i - 1])
      throw std::invalid_argument("sequence entries must be non-increasing");
  }
}

int GreedySequence::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

int GreedySequence::count_at_least(int k) const {
  return static_cast<int>(
      std::count_if(entries_.begin(), entries_.end(), [k](int x) { return x >= k; }));
}

GreedySequence sequence_of(const CliquePartition& p) {
  std::vector<int> sizes = p.sizes();
  for (int s : sizes)
    if (s > 4)
      throw std::invalid_argument("partition has a part of size " + std::to_string(s) +
                                  "; only parts up to 4 are admissible");
  return GreedySequence(sizes);
}

FValue value_f(const GreedySequence& seq) {
  const auto& e = seq.entries();
  const long long p = seq.length();
  const long long m = seq.sum();
  const long long a = seq.count_at_least(4);
  const long long b = seq.count_at_least(3);
  const long long c = seq.count_at_least(2);
  auto at = [&](long long j) { return static_cast<long long>(e[j - 1]); };  // 1-based

  FValue out;
  out.s1 = b;
  out.s2 = m * b + a * a - a * b - b * b + b * c - a - 3 * b;
  long long s3 = 0;
  for (long long k = 3; k <= b; ++k) {
    long long inner = 0;
    for (long long j = 2; j < k; ++j) inner += (at(j) - 1) * (j - 1);
    s3 += at(k) * inner;
  }
  for (long long k = b + 1; k <= c; ++k) {
    long long inner = 0;
    for (long long j = 2; j <= b; ++j) inner += (at(j) - 1) * (j - 1);
    for (long long j = b + 1; j < k; ++j) inner += (at(j) - 1) * b;
    s3 += at(k) * inner;
  }
  for (long long k = c + 1; k <= p; ++k) {
    long long inner = 0;
    for (long long j = 2; j <= b; ++j) inner += (at(j) - 1) * (j - 1);
    for (long long j = b + 1; j <= c; ++j) inner += (at(j) - 1) * b;
    s3 += inner;
  }
  out.s3 = s3;
  out.f = out.s1 + out.s2 + out.s3;
  return out;
}

std::optional<OpStep> apply_operation(const GreedySequence& seq) {
  const auto& e = seq.entries();
  int p = seq.length();
  int ones = 0, twos = 0;
  for (int x : e) {
    if (x == 1) ++ones;
    if (x == 2) ++twos;
  }
  auto first_of = [&](int value) {
    return static_cast<int>(std::find(e.begin(), e.end(), value) - e.begin());
  };
  auto last_of = [&](int value) {
    for (int i = p - 1; i >= 0; --i)
      if (e[i] == value) return i;
    return -1;
  };

  std::vector<int> next = e;
  OpStep step{0, -1, -1, seq, value_f(seq).f, 0};
  if (ones >= 2) {
    step.op = 1;
    step.i = first_of(1);
    step.j = last_of(1);
    next[step.i] = 2;
    next.erase(next.begin() + step.j);
  } else if (ones == 1 && twos >= 1) {
    step.op = 2;
    step.i = first_of(2);
    step.j = last_of(1);
    next[step.i] = 3;
    next.erase(next.begin() + step.j);
  } else if (ones == 0 && twos >= 2) {
    step.op = 3;
    step.i = first_of(2);
    step.j = last_of(2);
    next[step.i] = 3;
    next[step.j] = 1;
  } else {
    return std::nullopt;
  }
  std::sort(next.begin(), next.end(), std::greater<int>());
  step.result = GreedySequence(std::move(next));
  step.f_after = value_f(step.result).f;
  return step;
}

int irreducible_type(const GreedySequence& seq) {
  const auto& e = seq.entries();
  auto big = [&](size_t upto) {
    for (size_t i = 0; i < upto; ++i)
      if (e[i] < 3) return false;
    return true;
  };
  if (big(e.size())) return 1;
  if (e.back() == 2 && big(e.size() - 1)) return 2;
  if (e.back() == 1 && big(e.size() - 1)) return 3;
  return 0;
}

ReductionTrace reduce(const GreedySequence& seq) {
  ReductionTrace trace{{}, seq, 0};
  while (auto step = apply_operation(trace.final)) {
    trace.final = step->result;
    trace.steps.push_back(std::move(*step));
  }
  trace.final_type = irreducible_type(trace.final);
  return trace;
}

namespace {

Rational main_cubic(const Rational& m, const Rational& q) {
  return 28 * q * q * q - Rational(45, 2) * q * q * m + 6 * q * m * m -
         Rational(1, 2) * m * m * m;
}

Rational shape_correction(int kind, const Rational& m, const Rational& q) {
  switch (kind) {
    case 1:
      return Rational(3, 2) * q * m - Rational(1, 2) * m * m - 3 * q + m;
    case 2:
      return -28 * q * q + Rational(33, 2) * q * m - Rational(5, 2) * m * m + 6 * q - 2 * m;
    case 3:
      return -56 * q * q + Rational(63, 2) * q * m - Rational(9, 2) * m * m + 34 * q - 10 * m - 6;
    default:
      throw std::invalid_argument("shape kind must be 1, 2 or 3");
  }
}

}  // namespace

Rational closed_form_f(int kind, int m, int q) {
  if (q < 1) throw std::invalid_argument("closed_form_f: q must be at least 1");
  bool consistent = false;
  switch (kind) {
    case 1: consistent = 3 * q <= m && m <= 4 * q; break;
    case 2: consistent = 3 * q - 1 <= m && m <= 4 * q - 2; break;
    case 3: consistent = 3 * q - 2 <= m && m <= 4 * q - 3; break;
    default: throw std::invalid_argument("shape kind must be 1, 2 or 3");
  }
  if (!consistent)
    throw std::invalid_argument("closed_form_f: no irreducible sequence of kind " +
                                std::to_string(kind) + " has sum " + std::to_string(m) +
                                " and length " + std::to_string(q));
  Rational mr(m), qr(q);
  return main_cubic(mr, qr) + shape_correction(kind, mr, qr);
}

Rational adjustment_bound(int m, int q) {
  if (m < 1 || q < 1) throw std::invalid_argument("adjustment_bound: m, q must be at least 1");
  Rational mr(m), qr(q);
  Rational best = shape_correction(1, mr, qr);
  best = std::max(best, shape_correction(2, mr, qr));
  best = std::max(best, shape_correction(3, mr, qr));
  return main_cubic(mr, qr) + best;
}

Rational key_lemma_bound(int m, int q) {
  if (m < 1 || q < 1) throw std::invalid_argument("key_lemma_bound: m, q must be at least 1");
  Rational mr(m), qr(q);
  Rational main = Rational(59, 2) * qr * qr * qr - 24 * qr * qr * mr +
                  Rational(13, 2) * qr * mr * mr - Rational(5, 9) * mr * mr * mr;
  Rational q1 = Rational(13, 2) * qr * qr - Rational(17, 6) * qr * mr +
                Rational(2, 9) * mr * mr + Rational(1, 3) * qr - Rational(1, 9) * mr +
                Rational(4, 9);
  Rational q2 = -23 * qr * qr + Rational(79, 6) * qr * mr - Rational(35, 18) * mr * mr +
                Rational(11, 2) * qr - Rational(11, 6) * mr;
  Rational q3 = -Rational(105, 2) * qr * qr + Rational(175, 6) * qr * mr -
                Rational(37, 9) * mr * mr + Rational(92, 3) * qr - Rational(80, 9) * mr -
                Rational(16, 3);
  return main + std::max(q1, std::max(q2, q3));
}

}  // namespace cliquecover
