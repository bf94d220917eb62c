#include <umbral/identities.hpp>

#include <umbral/lacasse.hpp>
#include <umbral/sequences.hpp>
#include <umbral/umbra.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <functional>

namespace umbral {
namespace {

void expect_pass(const VerifyReport& r) {
  EXPECT_TRUE(r.passed) << identity_name(r.identity) << " n=" << r.n;
  EXPECT_TRUE(r.witnesses.empty());
}

// Both sides of the two-variable identities, summed naively from oracle data.
class GridOracle : public ::testing::Test {
protected:
  static constexpr unsigned kMax = 60;
  std::vector<std::vector<Int>> binom = oracle::pascal(kMax);
  std::vector<Int> d = oracle::two_term_derangements(kMax);

  Int dpoly(unsigned n, long x) const { return oracle::naive_dpoly(n, Int(x), d, binom); }
};

TEST_F(GridOracle, BasicPropertyHoldsAtTwentyFive) {
  const unsigned n = 25;
  for (long l = 0; l <= n; ++l) {
    for (long m = 0; m <= n; ++m) {
      Int rhs = 0;
      for (unsigned k = 0; k <= n; ++k) rhs += binom[n][k] * dpoly(k, l) * oracle::naive_pow(Int(m), n - k);
      ASSERT_EQ(dpoly(n, l + m), rhs);
    }
  }
  expect_pass(verify_basic_property(n));
}

TEST_F(GridOracle, AbelHoldsAtTwentyFive) {
  const unsigned n = 25;
  for (long l = 0; l <= n; ++l) {
    for (long m = 0; m <= n; ++m) {
      Int rhs = 0;
      for (unsigned k = 0; k <= n; ++k) {
        rhs += binom[n][k] * oracle::naive_pow(Int(l + k), k) *
               oracle::naive_pow(Int(m - long(k) - 1), n - k);
      }
      ASSERT_EQ(dpoly(n, l + m), rhs);
    }
  }
  expect_pass(verify_abel(n));
}

TEST_F(GridOracle, RecursionHoldsAtTwenty) {
  const unsigned n = 20;
  for (long l = 0; l <= n + 1; ++l) {
    for (long m = 0; m <= n + 1; ++m) {
      Int lhs = 0;
      for (unsigned k = 0; k <= n; ++k) lhs += binom[n][k] * dpoly(k, l) * dpoly(n - k, m + 1);
      Int rhs = oracle::naive_pow(Int(l + m - 1), n + 1) + Int(long(n) - l - m + 2) * dpoly(n, l + m);
      ASSERT_EQ(lhs, rhs);
    }
  }
  expect_pass(verify_recursion(n));
}

TEST_F(GridOracle, UmbralPropertyHoldsAtForty) {
  // (D+l)(D+l+n+1)^n = sum_k C(n,k)(l+n+1)^(n-k) (D^(k+1) + l D^k)
  const unsigned n = 40;
  for (long l = 0; l <= n + 1; ++l) {
    Int lhs = 0;
    for (unsigned k = 0; k <= n; ++k) {
      lhs += binom[n][k] * oracle::naive_pow(Int(l + n + 1), n - k) * (d[k + 1] + l * d[k]);
    }
    ASSERT_EQ(lhs, oracle::naive_pow(Int(n + l), n + 1));
  }
  expect_pass(verify_umbral_property(n));
}

TEST(IdentitiesTest, SmallCases) {
  for (unsigned n : {0u, 1u}) {
    expect_pass(verify_basic_property(n));
    expect_pass(verify_abel(n));
    expect_pass(verify_recursion(n));
    expect_pass(verify_umbral_property(n));
  }
}

TEST(IdentitiesTest, UmbralPropertyHandExample) {
  // n = 2, lambda = 0: D (D + 3)^2 = D^3 + 6 D^2 + 9 D
  UmbralExpr e{poly_mul(binomial_power(0, 1), binomial_power(3, 2))};
  EXPECT_EQ(e.poly, (IntPoly{0, 9, 6, 1}));
  EXPECT_EQ(umbral_eval(e), 8);
}

TEST(IdentitiesTest, GridIdentitiesUpToForty) {
  for (unsigned n = 0; n <= 40; ++n) {
    expect_pass(verify_basic_property(n));
    expect_pass(verify_abel(n));
    expect_pass(verify_recursion(n));
    expect_pass(verify_umbral_property(n));
  }
}

TEST(IdentitiesTest, ConjectureExamples) {
  for (unsigned n = 1; n <= 3; ++n) expect_pass(verify_conjecture(n));
  EXPECT_THROW(verify_conjecture(0), std::domain_error);
}

TEST(IdentitiesTest, RewritesExamples) {
  expect_pass(verify_xi_rewrites(1));
  expect_pass(verify_xi_rewrites(2));
  EXPECT_EQ(derangement_poly_eval(2, Int(3)), 10);
  expect_pass(verify_xi_rewrites(50));
  EXPECT_THROW(verify_xi_rewrites(0), std::domain_error);
}

TEST(IdentitiesTest, ConjectureAndRewritesUpToTwoHundred) {
  for (unsigned n = 1; n <= 200; ++n) {
    expect_pass(verify_conjecture(n));
    expect_pass(verify_xi_rewrites(n));
  }
}

TEST(ProofTraceTest, Examples) {
  ProofTrace one = replay_proof(1);
  ASSERT_EQ(one.lines.size(), 6u);
  for (const auto& l : one.lines) EXPECT_EQ(l.value, 3) << l.label;
  ProofTrace two = replay_proof(2);
  for (const auto& l : two.lines) EXPECT_EQ(l.value, 18) << l.label;
  ProofTrace ten = replay_proof(10);
  EXPECT_TRUE(ten.consistent());
  EXPECT_EQ(ten.lines.front().value, xi2_scaled(10));
  EXPECT_THROW(replay_proof(0), std::domain_error);
}

TEST(ProofTraceTest, LabelsAreInDerivationOrder) {
  ProofTrace t = replay_proof(4);
  std::vector<std::string> labels;
  for (const auto& l : t.lines) labels.push_back(l.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"L1", "L2", "L3", "L4", "L5", "L6"}));
}

TEST(ProofTraceTest, FirstMismatchPointsAtAdjacentPair) {
  ProofTrace t{3, {{"L1", 5}, {"L2", 5}, {"L3", 6}, {"L4", 6}}};
  ASSERT_TRUE(t.first_mismatch().has_value());
  EXPECT_EQ(*t.first_mismatch(), 1u);
  EXPECT_FALSE(t.consistent());
}

TEST(ProofTraceTest, ReplayUpToOneHundred) {
  for (unsigned n = 1; n <= 100; ++n) {
    ProofTrace t = replay_proof(n);
    ASSERT_TRUE(t.consistent()) << "n=" << n;
    ASSERT_EQ(t.lines.back().value, xi2_scaled(n));
  }
}

TEST(VerifyReportTest, WitnessesAreCapped) {
  VerifyReport r{IdentityId::EQ22, 3, true, {}};
  for (int i = 0; i < 25; ++i) r.fail("p" + std::to_string(i), i, i + 1);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.witnesses.size(), VerifyReport::kMaxWitnesses);
  EXPECT_EQ(r.witnesses.front().point, "p0");
}

TEST(VerifyReportTest, NamesRoundTrip) {
  for (auto id : {IdentityId::EQ22, IdentityId::EQ23, IdentityId::EQ24, IdentityId::UMBRAL_PROPERTY,
                  IdentityId::CONJECTURE, IdentityId::XI_REWRITES, IdentityId::PROOF_CHAIN}) {
    EXPECT_EQ(identity_from_name(identity_name(id)), id);
  }
  EXPECT_FALSE(identity_from_name("EQ99").has_value());
}

// A wrong D_k anywhere in 0..5 must be caught by some verifier at n <= 6.
TEST(SensitivityTest, PerturbedDerangementIsDetected) {
  const auto& base = global_sequences();
  for (unsigned k = 0; k <= 5; ++k) {
    Sequences forked = base.fork_with_derangement(k, base.derangement(k) + 1);
    ScopedSequences scope(forked);
    bool caught = false;
    for (unsigned n = 0; n <= 6 && !caught; ++n) {
      for (auto id : {IdentityId::EQ22, IdentityId::EQ23, IdentityId::EQ24,
                      IdentityId::UMBRAL_PROPERTY, IdentityId::CONJECTURE,
                      IdentityId::XI_REWRITES, IdentityId::PROOF_CHAIN}) {
        if (n < min_n(id)) continue;
        VerifyReport r = verify(id, n);
        EXPECT_EQ(r.passed, r.witnesses.empty());
        caught = caught || !r.passed;
      }
    }
    EXPECT_TRUE(caught) << "perturbing D_" << k << " went unnoticed";
  }
}

TEST(SensitivityTest, PerturbationBreaksProofChainAtTheUmbralStep) {
  const auto& base = global_sequences();
  Sequences forked = base.fork_with_derangement(2, base.derangement(2) + 1);
  ScopedSequences scope(forked);
  ProofTrace t = replay_proof(3);
  EXPECT_FALSE(t.consistent());
  VerifyReport r = verify_proof_chain(3);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.witnesses.empty());
}

}  // namespace
}  // namespace umbral
