#pragma once

// Dense univariate polynomials with exact integer coefficients.
//
// coeffs()[i] is the coefficient of x^i. The zero polynomial has no
// coefficients, and otherwise the last coefficient is nonzero. What x stands
// for (lambda, mu, or the umbra D) is up to the caller.

#include <umbral/numbers.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace umbral {

class IntPoly {
public:
  IntPoly() = default;
  IntPoly(std::initializer_list<Int> coeffs);
  explicit IntPoly(std::vector<Int> coeffs);

  static IntPoly constant(const Int& c);
  static IntPoly monomial(const Int& c, std::size_t power);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^i; zero past the end.
  Int operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }

  bool operator==(const IntPoly&) const = default;

private:
  void normalize();

  std::vector<Int> coeffs_;
};

IntPoly poly_add(const IntPoly& p, const IntPoly& q);
IntPoly poly_sub(const IntPoly& p, const IntPoly& q);
IntPoly poly_mul(const IntPoly& p, const IntPoly& q);
IntPoly poly_scale(const IntPoly& p, const Int& c);

/// (x + c)^m expanded: coefficient of x^i is C(m,i) * c^(m-i).
IntPoly binomial_power(const Int& c, unsigned m);

/// Horner evaluation in exact rationals.
Rat poly_eval(const IntPoly& p, const Rat& x);
/// Horner evaluation at an integer point.
Int poly_eval(const IntPoly& p, const Int& x);

/// "c0 + c1*x + c2*x^2 + ...", zero terms omitted, "0" for the zero polynomial.
std::string to_string(const IntPoly& p, const std::string& var = "x");

inline IntPoly operator+(const IntPoly& p, const IntPoly& q) { return poly_add(p, q); }
inline IntPoly operator-(const IntPoly& p, const IntPoly& q) { return poly_sub(p, q); }
inline IntPoly operator*(const IntPoly& p, const IntPoly& q) { return poly_mul(p, q); }

}  // namespace umbral
