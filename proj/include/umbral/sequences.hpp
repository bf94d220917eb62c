#pragma once

// Memoized exact integer sequences: derangement numbers, factorials,
// binomial coefficients and self-powers k^k.
//
// A Sequences object owns its caches and is internally synchronized, so one
// instance may be shared by any number of threads. The library reads the
// thread's *active* instance (see ScopedSequences), which defaults to a
// process-wide cache. Tests fork a cache with a deliberately wrong
// derangement value to check that the verifiers notice.

#include <umbral/numbers.hpp>

#include <deque>
#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

namespace umbral {

class Sequences {
public:
  Sequences();
  Sequences(const Sequences& other);
  Sequences& operator=(const Sequences&) = delete;

  /// D_n via D_n = n*D_{n-1} + (-1)^n, D_0 = 1.
  const Int& derangement(unsigned n) const;
  const Int& factorial(unsigned n) const;
  /// C(n, k); zero when k < 0 or k > n.
  Int binomial(unsigned n, long k) const;
  /// Row n of Pascal's triangle, C(n,0)..C(n,n).
  const std::vector<Int>& binomial_row(unsigned n) const;
  /// k^k with 0^0 = 1.
  const Int& self_power(unsigned k) const;

  /// A copy of this cache in which derangement(k) reports `value`. All other
  /// entries, and D_n for n > k, keep their true values.
  Sequences fork_with_derangement(unsigned k, Int value) const;

  /// Number of derangement values currently memoized (test hook).
  std::size_t derangement_cache_size() const;

private:
  void grow_derangements(unsigned n) const;
  void grow_factorials(unsigned n) const;
  void grow_self_powers(unsigned k) const;

  mutable std::shared_mutex mutex_;
  // deque keeps references to existing elements stable across growth.
  mutable std::deque<Int> derangements_;
  mutable std::deque<Int> factorials_;
  mutable std::deque<Int> self_powers_;
  mutable std::map<unsigned, std::unique_ptr<const std::vector<Int>>> rows_;
  std::map<unsigned, Int> overrides_;
};

/// The process-wide default cache.
Sequences& global_sequences();

/// The cache used by the calling thread: the innermost ScopedSequences, or
/// global_sequences() if none is installed.
const Sequences& active_sequences();

/// Installs a cache as the calling thread's active one for its lifetime.
class ScopedSequences {
public:
  explicit ScopedSequences(const Sequences& seq);
  ~ScopedSequences();
  ScopedSequences(const ScopedSequences&) = delete;
  ScopedSequences& operator=(const ScopedSequences&) = delete;

private:
  const Sequences* previous_;
};

// Shorthands over active_sequences().
inline const Int& derangement(unsigned n) { return active_sequences().derangement(n); }
inline const Int& factorial(unsigned n) { return active_sequences().factorial(n); }
inline Int binomial(unsigned n, long k) { return active_sequences().binomial(n, k); }

}  // namespace umbral
