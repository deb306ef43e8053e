#pragma once

/**
 * @file sequences.hpp
 * @brief Integer sequence machinery for modulo krinkle tilings.
 *
 * Everything here is exact integer arithmetic: modular progressions, the
 * prototile boundary sequences (lower/upper), shifted modular progressions,
 * and the characterization condition C(i) that pins down which sequences
 * can appear as boundaries of the growing region.
 */

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace krinkle {

inline void validate_mk(int m, int k) {
  if (m < 1) throw std::invalid_argument("m must be a positive integer");
  if (k <= m) throw std::invalid_argument("parameters must satisfy m < k");
  if (std::gcd(m, k) != 1)
    throw std::invalid_argument("parameters must satisfy gcd(m, k) = 1");
}

/// Modular inverse of a modulo k via extended Euclid; requires gcd(a, k) = 1.
inline int mod_inverse(int a, int k) {
  if (k < 1) throw std::invalid_argument("modulus must be positive");
  int r0 = k, r1 = ((a % k) + k) % k;
  int s0 = 0, s1 = 1;
  while (r1 != 0) {
    int q = r0 / r1;
    int r2 = r0 - q * r1;
    int s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw std::invalid_argument("value is not invertible modulo k");
  return ((s0 % k) + k) % k;
}

/**
 * Validated parameter bundle. The direction count n and the wedge count w
 * per fundamental region are derived from (m, k, t) and the offset mode:
 *
 *   n = t*k           w = k        (without offset)
 *   n = 2*(t*k - m)   w = n/2      (with offset)
 *
 * Either way 2k <= n holds.
 */
struct Params {
  int m = 0;
  int k = 0;
  int t = 0;
  int n = 0;
  bool offset = false;
  int w = 0;

  bool operator==(const Params&) const = default;

  static Params from_t(int m, int k, int t, bool offset) {
    validate_mk(m, k);
    if (t < 2) throw std::invalid_argument("parameters must satisfy t >= 2");
    Params p;
    p.m = m;
    p.k = k;
    p.t = t;
    p.offset = offset;
    p.n = offset ? 2 * (t * k - m) : t * k;
    p.w = offset ? p.n / 2 : k;
    if (2 * k > p.n) throw std::logic_error("internal: 2k <= n violated");
    return p;
  }

  // Resolve a raw (m, k, n) triple. When k divides n we are in the case
  // without offset and t = n/k; otherwise n must equal 2(t*k - m) for an
  // integer t >= 2. An explicit offset request overrides the k-divides-n
  // rule (both readings can exist, e.g. k = 2).
  static Params from_n(int m, int k, int n,
                       std::optional<bool> forced_offset = std::nullopt) {
    validate_mk(m, k);
    if (n < 2 * k) throw std::invalid_argument("n must satisfy 2k <= n");
    const bool divisible = n % k == 0;
    const bool use_offset = forced_offset ? *forced_offset : !divisible;
    if (!use_offset) {
      if (!divisible || n / k < 2)
        throw std::invalid_argument("without offset, n must equal t*k for an integer t >= 2");
      return from_t(m, k, n / k, false);
    }
    if (n % 2 != 0)
      throw std::invalid_argument("with offset, n = 2(t*k - m) must be even");
    const int half = n / 2;
    if ((half + m) % k != 0 || (half + m) / k < 2)
      throw std::invalid_argument("n does not equal 2(t*k - m) for any integer t >= 2");
    return from_t(m, k, (half + m) / k, true);
  }
};

/**
 * A direction sequence: integers in [0, n) read as unit steps at angles
 * 2*pi*d/n. A finite sequence has an empty period; an eventually periodic
 * one repeats `period` after `prefix`. Boundary sequences always use a
 * period of length exactly k, which is what makes equality of infinite
 * boundaries decidable.
 */
struct DirectionSequence {
  std::vector<int> prefix;
  std::vector<int> period;  // empty: the sequence is finite

  bool operator==(const DirectionSequence&) const = default;

  bool is_finite() const { return period.empty(); }

  std::size_t finite_length() const {
    if (!is_finite()) throw std::logic_error("sequence is infinite");
    return prefix.size();
  }

  int term(std::size_t j) const {
    if (j < prefix.size()) return prefix[j];
    if (period.empty()) throw std::out_of_range("index past the end of a finite sequence");
    return period[(j - prefix.size()) % period.size()];
  }

  std::vector<int> take(std::size_t count) const {
    std::vector<int> out;
    out.reserve(count);
    for (std::size_t j = 0; j < count; ++j) out.push_back(term(j));
    return out;
  }

  static DirectionSequence finite(std::vector<int> terms) {
    return DirectionSequence{std::move(terms), {}};
  }

  static DirectionSequence periodic(std::vector<int> period, std::vector<int> prefix = {}) {
    if (period.empty()) throw std::invalid_argument("period must be nonempty");
    return DirectionSequence{std::move(prefix), std::move(period)};
  }
};

/// First `count` terms of j*m mod k.
inline std::vector<int> progression_terms(int m, int k, std::size_t count) {
  std::vector<int> out;
  out.reserve(count);
  int v = 0;
  for (std::size_t j = 0; j < count; ++j) {
    out.push_back(v);
    v += m;
    if (v >= k) v -= k;
  }
  return out;
}

/// The modular progression s_j = j*m mod k. First k terms are a permutation
/// of 0..k-1.
inline DirectionSequence modular_progression(int m, int k, std::size_t count) {
  validate_mk(m, k);
  return DirectionSequence::finite(progression_terms(m, k, count));
}

/// Lower path sequence (l_j): the first k progression terms with k appended.
inline DirectionSequence lower_sequence(int m, int k) {
  validate_mk(m, k);
  std::vector<int> terms = progression_terms(m, k, static_cast<std::size_t>(k));
  terms.push_back(k);
  return DirectionSequence::finite(std::move(terms));
}

/// Upper path sequence (u_j): the lower sequence with first and last
/// elements exchanged.
inline DirectionSequence upper_sequence(int m, int k) {
  DirectionSequence seq = lower_sequence(m, k);
  std::swap(seq.prefix.front(), seq.prefix.back());
  return seq;
}

/// One period of the shifted modular progression s^i, computed by the
/// replacement recursion: s^0 is the plain progression, and s^{level+1}
/// replaces every occurrence of `level` with level + k. Value replacement
/// keeps the period at exactly k, so working on one period is exact.
inline std::vector<int> shifted_period(int m, int k, int i) {
  validate_mk(m, k);
  if (i < 0) throw std::invalid_argument("shift level must be nonnegative");
  std::vector<int> p = progression_terms(m, k, static_cast<std::size_t>(k));
  for (int level = 0; level < i; ++level) {
    for (int& v : p) {
      if (v == level) v += k;
    }
  }
  return p;
}

inline DirectionSequence shifted_progression_periodic(int m, int k, int i) {
  return DirectionSequence::periodic(shifted_period(m, k, i));
}

inline DirectionSequence shifted_progression(int m, int k, int i, std::size_t count) {
  return DirectionSequence::finite(shifted_progression_periodic(m, k, i).take(count));
}

struct ConditionViolation {
  int clause = 0;         // 1: range, 2: permutation/periodicity, 3: recurrence
  std::size_t index = 0;  // first offending term
  std::string message;
};

/**
 * Checks the characterization condition C(i) on [0, horizon):
 *   1. i <= a_j < i + k for all j,
 *   2. the first k terms are a permutation of i..i+k-1 and the sequence has
 *      period k,
 *   3. a_{j+1} = a_j + m, reduced by k whenever that reaches i + k.
 *
 * For a periodic representation the horizon is extended to cover the prefix
 * plus one full period and the wrap, which certifies the condition for all
 * j >= 0. The horizon must be at least 2k; a finite sequence shorter than
 * the horizon cannot be certified and is rejected.
 */
inline std::optional<ConditionViolation> condition_c_violation(
    const DirectionSequence& seq, int i, int m, int k, std::size_t horizon) {
  validate_mk(m, k);
  const std::size_t kk = static_cast<std::size_t>(k);
  if (horizon < 2 * kk)
    throw std::invalid_argument("horizon must be at least 2k to certify one period plus the wrap");
  std::size_t h = horizon;
  if (!seq.is_finite()) {
    h = std::max(h, seq.prefix.size() + 2 * kk);
  } else if (seq.finite_length() < h) {
    throw std::invalid_argument("finite sequence is shorter than the horizon");
  }

  const std::vector<int> a = seq.take(h);
  for (std::size_t j = 0; j < h; ++j) {
    if (a[j] < i || a[j] >= i + k)
      return ConditionViolation{1, j,
          "term " + std::to_string(j) + " = " + std::to_string(a[j]) +
          " outside [" + std::to_string(i) + ", " + std::to_string(i + k) + ")"};
  }
  std::vector<char> seen(kk, 0);
  for (std::size_t j = 0; j < kk; ++j) {
    const int slot = a[j] - i;
    if (seen[slot])
      return ConditionViolation{2, j,
          "value " + std::to_string(a[j]) + " repeats within the first k terms"};
    seen[slot] = 1;
  }
  for (std::size_t j = 0; j + kk < h; ++j) {
    if (a[j + kk] != a[j])
      return ConditionViolation{2, j + kk,
          "period-k repetition fails at index " + std::to_string(j + kk)};
  }
  for (std::size_t j = 0; j + 1 < h; ++j) {
    const int next = a[j] + m < i + k ? a[j] + m : a[j] + m - k;
    if (a[j + 1] != next)
      return ConditionViolation{3, j + 1,
          "recurrence fails at index " + std::to_string(j + 1) + ": got " +
          std::to_string(a[j + 1]) + ", expected " + std::to_string(next)};
  }
  return std::nullopt;
}

inline bool satisfies_condition_c(const DirectionSequence& seq, int i, int m, int k,
                                  std::size_t horizon) {
  return !condition_c_violation(seq, i, m, k, horizon).has_value();
}

/// Minimal index j* with s^i_{j*} = i, by the closed form (i * m^{-1}) mod k.
inline int alignment_index(long long i, int m, int k) {
  validate_mk(m, k);
  if (i < 0) throw std::invalid_argument("alignment level must be nonnegative");
  return static_cast<int>((i % k) * mod_inverse(m, k) % k);
}

}  // namespace krinkle
