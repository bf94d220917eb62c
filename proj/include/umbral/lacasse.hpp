#pragma once

// Lacasse's xi(n) and xi2(n), n >= 1.
//
//   xi(n)  = sum_k C(n,k) (k/n)^k (1 - k/n)^(n-k)
//   xi2(n) = sum_{k,j} C(n,k) C(n-k,j) (k/n)^k (j/n)^j (1 - k/n - j/n)^(n-k-j)
//
// The *_scaled functions return n^n times the value, which is always an
// integer. 0^0 = 1 throughout. Every function throws std::domain_error for
// n == 0.

#include <umbral/numbers.hpp>

namespace umbral {

struct XiValue {
  unsigned n = 0;
  Int scaled;  ///< n^n * value
  Rat value;
};

/// sum_k C(n,k) k^k (n-k)^(n-k).
Int xi_scaled(unsigned n);
Rat xi(unsigned n);

/// The double sum: sum_{k,j} C(n,k) C(n-k,j) k^k j^j (n-k-j)^(n-k-j).
Int xi2_scaled(unsigned n);
Rat xi2(unsigned n);

/// sum_k C(n,k) k^k Dpoly_{n-k}(n-k+1).
Int xi2_via_derangement_scaled(unsigned n);

/// sum_k C(n,k) (k+1)! n^(n-k).
Int xi2_closed_scaled(unsigned n);

XiValue xi_value(unsigned n);
XiValue xi2_value(unsigned n);

}  // namespace umbral
