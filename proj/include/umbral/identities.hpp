#pragma once

// Exact verification of the derangement-polynomial identities and of
// xi2(n) = xi(n) + n.
//
// Identities in two free variables are checked on the integer grid
// {0..d} x {0..d}, where d bounds the degree of both sides in each variable.
// A nonzero polynomial of per-variable degree d cannot vanish on such a grid,
// so agreement everywhere proves the identity for that n.

#include <umbral/numbers.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace umbral {

enum class IdentityId {
  EQ22,             // Dpoly_n(l+m) = sum C(n,k) Dpoly_k(l) m^(n-k)
  EQ23,             // Dpoly_n(l+m) = sum C(n,k) (l+k)^k (m-k-1)^(n-k)
  EQ24,             // convolution recursion
  UMBRAL_PROPERTY,  // (D+l)(D+l+n+1)^n = (n+l)^(n+1)
  CONJECTURE,       // n^n xi2 = n^n xi + n^(n+1)
  XI_REWRITES,
  PROOF_CHAIN,
};

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);

struct Witness {
  std::string point;
  Int lhs;
  Int rhs;
};

struct VerifyReport {
  static constexpr std::size_t kMaxWitnesses = 10;

  IdentityId identity = IdentityId::EQ22;
  long n = 0;
  bool passed = true;
  std::vector<Witness> witnesses;

  /// Records a mismatch; keeps at most kMaxWitnesses.
  void fail(std::string point, Int lhs, Int rhs);
};

VerifyReport verify_basic_property(unsigned n);
VerifyReport verify_abel(unsigned n);
VerifyReport verify_recursion(unsigned n);
VerifyReport verify_umbral_property(unsigned n);
/// Throws std::domain_error for n == 0.
VerifyReport verify_conjecture(unsigned n);
/// Throws std::domain_error for n == 0.
VerifyReport verify_xi_rewrites(unsigned n);

struct ProofLine {
  std::string label;
  Int value;
};

// Step-by-step replay of the derivation of xi2(n) = xi(n) + n:
//
//   L1  n^(n+1) + Dpoly_n(n+1)
//   L2  sum_k C(n,k) D_k Dpoly_(n-k)(n+2)         (recursion at l=0, m=n+1)
//   L3  eval[ Dpoly_n(mu) at mu = D+n+2 ]          (basic property)
//   L4  sum_k C(n,k) k^k eval[(D+n+1-k)^(n-k)]     (Abel formula, under D)
//   L5  sum_k C(n,k) k^k Dpoly_(n-k)(n-k+1)
//   L6  n^n xi2(n) by the double sum
struct ProofTrace {
  unsigned n = 0;
  std::vector<ProofLine> lines;

  /// Index i of the first pair (lines[i], lines[i+1]) that differs.
  std::optional<std::size_t> first_mismatch() const;
  bool consistent() const { return !first_mismatch().has_value(); }
};

/// Throws std::domain_error for n == 0.
ProofTrace replay_proof(unsigned n);
/// replay_proof packaged as a report; witnesses name the unequal adjacent lines.
VerifyReport verify_proof_chain(unsigned n);

/// Smallest n the identity is defined for (0 or 1).
unsigned min_n(IdentityId id);
VerifyReport verify(IdentityId id, unsigned n);

}  // namespace umbral
