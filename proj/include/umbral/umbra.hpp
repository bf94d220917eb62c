#pragma once

// The derangement umbra D, defined by the moment rule D^n -> D_n.
//
// An umbral expression is an ordinary polynomial in D; evaluating it is the
// linear functional sum_i c_i * D_i on its coefficients. Derangement
// polynomials satisfy Dpoly_n(lambda) = (D + lambda)^n under this rule.

#include <umbral/numbers.hpp>
#include <umbral/polynomial.hpp>

namespace umbral {

struct UmbralExpr {
  IntPoly poly;

  bool operator==(const UmbralExpr&) const = default;
};

/// sum_i c_i * D_i over the coefficients of e.
Int umbral_eval(const UmbralExpr& e);

/// Dpoly_n(lambda) = sum_k C(n,k) * D_k * lambda^(n-k), as a polynomial in lambda.
IntPoly derangement_poly(unsigned n);

Rat derangement_poly_eval(unsigned n, const Rat& x);
/// Integer-point evaluation of Dpoly_n without building the polynomial.
Int derangement_poly_eval(unsigned n, const Int& x);

/// Replaces the variable of p by (D + s): returns sum_i a_i * (D + s)^i fully
/// expanded in D. Evaluation is a separate step (umbral_eval).
UmbralExpr substitute_shift(const IntPoly& p, const Int& s);

}  // namespace umbral
