#include <umbral/umbra.hpp>

#include <umbral/sequences.hpp>

namespace umbral {

Int umbral_eval(const UmbralExpr& e) {
  const auto& seq = active_sequences();
  const auto& c = e.poly.coeffs();
  Int acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(),
               seq.derangement(static_cast<unsigned>(i)).get_mpz_t());
  }
  return acc;
}

IntPoly derangement_poly(unsigned n) {
  const auto& seq = active_sequences();
  const auto& row = seq.binomial_row(n);
  std::vector<Int> coeffs(n + 1);
  // the k-th term lands on lambda^(n-k)
  for (unsigned k = 0; k <= n; ++k) {
    coeffs[n - k] = row[k] * seq.derangement(k);
  }
  return IntPoly(std::move(coeffs));
}

Rat derangement_poly_eval(unsigned n, const Rat& x) { return poly_eval(derangement_poly(n), x); }

Int derangement_poly_eval(unsigned n, const Int& x) {
  const auto& seq = active_sequences();
  const auto& row = seq.binomial_row(n);
  // Horner in lambda, highest power first: k = 0 carries lambda^n.
  Int acc = 0;
  for (unsigned k = 0; k <= n; ++k) {
    acc *= x;
    mpz_addmul(acc.get_mpz_t(), row[k].get_mpz_t(), seq.derangement(k).get_mpz_t());
  }
  return acc;
}

UmbralExpr substitute_shift(const IntPoly& p, const Int& s) {
  // Horner over (D + s): acc <- acc * (D + s) + a_i.
  const IntPoly shift{s, Int(1)};
  IntPoly acc;
  const auto& a = p.coeffs();
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = poly_add(poly_mul(acc, shift), IntPoly::constant(*it));
  }
  return UmbralExpr{std::move(acc)};
}

}  // namespace umbral
