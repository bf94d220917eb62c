#include <umbral/identities.hpp>

#include <umbral/lacasse.hpp>
#include <umbral/polynomial.hpp>
#include <umbral/sequences.hpp>
#include <umbral/umbra.hpp>

#include <array>
#include <stdexcept>

namespace umbral {
namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 7> kNames{{
    {IdentityId::EQ22, "EQ22"},
    {IdentityId::EQ23, "EQ23"},
    {IdentityId::EQ24, "EQ24"},
    {IdentityId::UMBRAL_PROPERTY, "UMBRAL_PROPERTY"},
    {IdentityId::CONJECTURE, "CONJECTURE"},
    {IdentityId::XI_REWRITES, "XI_REWRITES"},
    {IdentityId::PROOF_CHAIN, "PROOF_CHAIN"},
}};

std::string grid_point(long lambda, long mu) {
  return "lambda=" + std::to_string(lambda) + ",mu=" + std::to_string(mu);
}

// table[k][x] = Dpoly_k(x) for 0 <= k <= n, 0 <= x <= x_max.
std::vector<std::vector<Int>> dpoly_table(unsigned n, unsigned x_max) {
  std::vector<std::vector<Int>> table(n + 1, std::vector<Int>(x_max + 1));
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned x = 0; x <= x_max; ++x) table[k][x] = derangement_poly_eval(k, Int(x));
  }
  return table;
}

void require_positive(unsigned n, const char* what) {
  if (n == 0) throw std::domain_error(std::string(what) + " is defined for n >= 1");
}

}  // namespace

std::string_view identity_name(IdentityId id) {
  for (const auto& [key, name] : kNames) {
    if (key == id) return name;
  }
  return "UNKNOWN";
}

std::optional<IdentityId> identity_from_name(std::string_view name) {
  for (const auto& [key, text] : kNames) {
    if (text == name) return key;
  }
  return std::nullopt;
}

void VerifyReport::fail(std::string point, Int lhs, Int rhs) {
  passed = false;
  if (witnesses.size() < kMaxWitnesses) {
    witnesses.push_back({std::move(point), std::move(lhs), std::move(rhs)});
  }
}

VerifyReport verify_basic_property(unsigned n) {
  VerifyReport report{IdentityId::EQ22, n, true, {}};
  const auto& row = active_sequences().binomial_row(n);
  // lambda + mu ranges over 0..2n
  auto dpoly = dpoly_table(n, 2 * n);
  for (unsigned lambda = 0; lambda <= n; ++lambda) {
    for (unsigned mu = 0; mu <= n; ++mu) {
      const Int& lhs = dpoly[n][lambda + mu];
      Int rhs = 0;
      for (unsigned k = 0; k <= n; ++k) {
        rhs += row[k] * dpoly[k][lambda] * ipow(long(mu), n - k);
      }
      if (lhs != rhs) report.fail(grid_point(lambda, mu), lhs, rhs);
    }
  }
  return report;
}

VerifyReport verify_abel(unsigned n) {
  VerifyReport report{IdentityId::EQ23, n, true, {}};
  const auto& row = active_sequences().binomial_row(n);
  for (long lambda = 0; lambda <= long(n); ++lambda) {
    for (long mu = 0; mu <= long(n); ++mu) {
      Int lhs = derangement_poly_eval(n, Int(lambda + mu));
      Int rhs = 0;
      for (unsigned k = 0; k <= n; ++k) {
        rhs += row[k] * ipow(lambda + k, k) * ipow(mu - long(k) - 1, n - k);
      }
      if (lhs != rhs) report.fail(grid_point(lambda, mu), std::move(lhs), std::move(rhs));
    }
  }
  return report;
}

VerifyReport verify_recursion(unsigned n) {
  VerifyReport report{IdentityId::EQ24, n, true, {}};
  const auto& row = active_sequences().binomial_row(n);
  const unsigned d = n + 1;
  // needs arguments up to lambda + mu = 2d and mu + 1 = d + 1
  auto dpoly = dpoly_table(n, 2 * d);
  for (unsigned lambda = 0; lambda <= d; ++lambda) {
    for (unsigned mu = 0; mu <= d; ++mu) {
      Int lhs = 0;
      for (unsigned k = 0; k <= n; ++k) {
        lhs += row[k] * dpoly[k][lambda] * dpoly[n - k][mu + 1];
      }
      long s = long(lambda) + long(mu);
      Int rhs = ipow(s - 1, n + 1) + Int(long(n) - s + 2) * dpoly[n][s];
      if (lhs != rhs) report.fail(grid_point(lambda, mu), std::move(lhs), std::move(rhs));
    }
  }
  return report;
}

VerifyReport verify_umbral_property(unsigned n) {
  VerifyReport report{IdentityId::UMBRAL_PROPERTY, n, true, {}};
  for (long lambda = 0; lambda <= long(n) + 1; ++lambda) {
    UmbralExpr expr{poly_mul(binomial_power(Int(lambda), 1),
                             binomial_power(Int(lambda + long(n) + 1), n))};
    Int lhs = umbral_eval(expr);
    Int rhs = ipow(long(n) + lambda, n + 1);
    if (lhs != rhs) {
      report.fail("lambda=" + std::to_string(lambda), std::move(lhs), std::move(rhs));
    }
  }
  return report;
}

VerifyReport verify_conjecture(unsigned n) {
  require_positive(n, "conjecture check");
  VerifyReport report{IdentityId::CONJECTURE, n, true, {}};
  Int lhs = xi2_scaled(n);
  Int rhs = xi_scaled(n) + ipow(long(n), n + 1);
  if (lhs != rhs) report.fail("n=" + std::to_string(n), std::move(lhs), std::move(rhs));
  return report;
}

VerifyReport verify_xi_rewrites(unsigned n) {
  require_positive(n, "xi rewrite check");
  VerifyReport report{IdentityId::XI_REWRITES, n, true, {}};
  Int xi_direct = xi_scaled(n);
  Int xi_dpoly = derangement_poly_eval(n, Int(n + 1));
  if (xi_direct != xi_dpoly) report.fail("xi", std::move(xi_direct), std::move(xi_dpoly));
  Int xi2_direct = xi2_scaled(n);
  Int xi2_dpoly = xi2_via_derangement_scaled(n);
  if (xi2_direct != xi2_dpoly) report.fail("xi2", std::move(xi2_direct), std::move(xi2_dpoly));
  return report;
}

std::optional<std::size_t> ProofTrace::first_mismatch() const {
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    if (lines[i].value != lines[i + 1].value) return i;
  }
  return std::nullopt;
}

ProofTrace replay_proof(unsigned n) {
  require_positive(n, "proof replay");
  const auto& seq = active_sequences();
  const auto& row = seq.binomial_row(n);
  const Int shift(n + 2);
  ProofTrace trace{n, {}};

  trace.lines.push_back(
      {"L1", ipow(long(n), n + 1) + derangement_poly_eval(n, Int(n + 1))});

  Int l2 = 0;
  for (unsigned k = 0; k <= n; ++k) {
    l2 += row[k] * seq.derangement(k) * derangement_poly_eval(n - k, shift);
  }
  trace.lines.push_back({"L2", std::move(l2)});

  // Dpoly_n read as a polynomial in mu, then mu := D + n + 2.
  trace.lines.push_back({"L3", umbral_eval(substitute_shift(derangement_poly(n), shift))});

  // (mu - k - 1)^(n-k) at mu = D + n + 2 is (D + n + 1 - k)^(n-k).
  IntPoly abel;
  for (unsigned k = 0; k <= n; ++k) {
    Int weight = row[k] * seq.self_power(k);
    abel = poly_add(abel, poly_scale(binomial_power(Int(n + 1 - k), n - k), weight));
  }
  trace.lines.push_back({"L4", umbral_eval(UmbralExpr{std::move(abel)})});

  Int l5 = 0;
  for (unsigned k = 0; k <= n; ++k) {
    l5 += row[k] * seq.self_power(k) * derangement_poly_eval(n - k, Int(n - k + 1));
  }
  trace.lines.push_back({"L5", std::move(l5)});

  trace.lines.push_back({"L6", xi2_scaled(n)});
  return trace;
}

VerifyReport verify_proof_chain(unsigned n) {
  VerifyReport report{IdentityId::PROOF_CHAIN, n, true, {}};
  ProofTrace trace = replay_proof(n);
  for (std::size_t i = 0; i + 1 < trace.lines.size(); ++i) {
    const auto& a = trace.lines[i];
    const auto& b = trace.lines[i + 1];
    if (a.value != b.value) report.fail(a.label + "=" + b.label, a.value, b.value);
  }
  return report;
}

unsigned min_n(IdentityId id) {
  switch (id) {
    case IdentityId::CONJECTURE:
    case IdentityId::XI_REWRITES:
    case IdentityId::PROOF_CHAIN:
      return 1;
    default:
      return 0;
  }
}

VerifyReport verify(IdentityId id, unsigned n) {
  switch (id) {
    case IdentityId::EQ22: return verify_basic_property(n);
    case IdentityId::EQ23: return verify_abel(n);
    case IdentityId::EQ24: return verify_recursion(n);
    case IdentityId::UMBRAL_PROPERTY: return verify_umbral_property(n);
    case IdentityId::CONJECTURE: return verify_conjecture(n);
    case IdentityId::XI_REWRITES: return verify_xi_rewrites(n);
    case IdentityId::PROOF_CHAIN: return verify_proof_chain(n);
  }
  throw std::invalid_argument("unknown identity");
}

}  // namespace umbral
