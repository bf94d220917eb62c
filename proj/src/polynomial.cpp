#include <umbral/polynomial.hpp>

#include <umbral/sequences.hpp>

#include <algorithm>

namespace umbral {

IntPoly::IntPoly(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { normalize(); }

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(const Int& c, std::size_t power) {
  std::vector<Int> coeffs(power + 1);
  coeffs[power] = c;
  return IntPoly(std::move(coeffs));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly poly_add(const IntPoly& p, const IntPoly& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Int> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  return IntPoly(std::move(out));
}

IntPoly poly_sub(const IntPoly& p, const IntPoly& q) { return poly_add(p, poly_scale(q, -1)); }

IntPoly poly_scale(const IntPoly& p, const Int& c) {
  std::vector<Int> out(p.coeffs());
  for (auto& v : out) v *= c;
  return IntPoly(std::move(out));
}

IntPoly poly_mul(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Int> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly binomial_power(const Int& c, unsigned m) {
  const auto& row = active_sequences().binomial_row(m);
  std::vector<Int> out(m + 1);
  Int c_pow = 1;
  // walk i downward so c_pow = c^(m-i)
  for (unsigned step = 0; step <= m; ++step) {
    unsigned i = m - step;
    out[i] = row[i] * c_pow;
    c_pow *= c;
  }
  return IntPoly(std::move(out));
}

Rat poly_eval(const IntPoly& p, const Rat& x) {
  Rat acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x + *it;
  }
  acc.canonicalize();
  return acc;
}

Int poly_eval(const IntPoly& p, const Int& x) {
  Int acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::string to_string(const IntPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    std::string term = to_string(c[i]);
    if (i >= 1) term += "*" + var;
    if (i >= 2) term += "^" + std::to_string(i);
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

}  // namespace umbral
