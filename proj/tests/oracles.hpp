#pragma once

// Test-only reference computations. Each one follows the textbook
// definition directly and shares no code path with the library.

#include <umbral/numbers.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace umbral::oracle {

/// Counts fixed-point-free permutations of {0..n-1} by enumeration.
inline std::uint64_t brute_force_derangements(unsigned n) {
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::uint64_t count = 0;
  do {
    bool fixed = false;
    for (unsigned i = 0; i < n && !fixed; ++i) fixed = perm[i] == i;
    if (!fixed) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// n! * sum_{i=0..n} (-1)^i / i!, in exact rationals.
inline Rat alternating_sum_derangement(unsigned n) {
  Rat sum = 0;
  Int inv_fact = 1;  // i!
  for (unsigned i = 0; i <= n; ++i) {
    if (i > 0) inv_fact *= i;
    Rat term(Int(1), inv_fact);
    sum += (i % 2 == 0) ? term : Rat(-term);
  }
  Int nfact = 1;
  for (unsigned i = 2; i <= n; ++i) nfact *= i;
  Rat out = sum * nfact;
  out.canonicalize();
  return out;
}

/// Pascal's triangle rows 0..n by addition.
inline std::vector<std::vector<Int>> pascal(unsigned n) {
  std::vector<std::vector<Int>> rows(n + 1);
  for (unsigned r = 0; r <= n; ++r) {
    rows[r].assign(r + 1, Int(1));
    for (unsigned k = 1; k < r; ++k) rows[r][k] = rows[r - 1][k - 1] + rows[r - 1][k];
  }
  return rows;
}

inline Int iterated_factorial(unsigned n) {
  Int f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

/// b^e by repeated multiplication, 0^0 = 1.
inline Rat naive_pow(const Rat& b, unsigned e) {
  Rat r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

inline Int naive_pow(const Int& b, unsigned e) {
  Int r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

/// xi(n) summed literally over the fractions k/n in exact rationals.
inline Rat xi_from_definition(unsigned n, const std::vector<std::vector<Int>>& binom) {
  Rat sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    Rat p{Int(k), Int(n)};
    p.canonicalize();
    sum += binom[n][k] * naive_pow(p, k) * naive_pow(Rat(1) - p, n - k);
  }
  sum.canonicalize();
  return sum;
}

/// xi2(n) summed literally over (k/n, j/n) in exact rationals.
inline Rat xi2_from_definition(unsigned n, const std::vector<std::vector<Int>>& binom) {
  Rat sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned j = 0; j + k <= n; ++j) {
      Rat p{Int(k), Int(n)}, q{Int(j), Int(n)};
      p.canonicalize();
      q.canonicalize();
      sum += binom[n][k] * binom[n - k][j] * naive_pow(p, k) * naive_pow(q, j) *
             naive_pow(Rat(1) - p - q, n - k - j);
    }
  }
  sum.canonicalize();
  return sum;
}

/// Derangement numbers via the two-term recurrence D_n = (n-1)(D_{n-1} + D_{n-2}).
inline std::vector<Int> two_term_derangements(unsigned n) {
  std::vector<Int> d(std::max(n + 1, 2u));
  d[0] = 1;
  d[1] = 0;
  for (unsigned m = 2; m <= n; ++m) d[m] = (m - 1) * (d[m - 1] + d[m - 2]);
  d.resize(n + 1);
  return d;
}

/// Dpoly_n(x) = sum_k C(n,k) D_k x^(n-k), summed term by term.
inline Int naive_dpoly(unsigned n, const Int& x, const std::vector<Int>& d,
                       const std::vector<std::vector<Int>>& binom) {
  Int sum = 0;
  for (unsigned k = 0; k <= n; ++k) sum += binom[n][k] * d[k] * naive_pow(x, n - k);
  return sum;
}

}  // namespace umbral::oracle
