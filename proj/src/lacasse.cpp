#include <umbral/lacasse.hpp>

#include <umbral/sequences.hpp>
#include <umbral/umbra.hpp>

#include <stdexcept>
#include <string>

namespace umbral {
namespace {

void require_positive(unsigned n, const char* what) {
  if (n == 0) throw std::domain_error(std::string(what) + " is defined for n >= 1");
}

}  // namespace

Int xi_scaled(unsigned n) {
  require_positive(n, "xi");
  const auto& seq = active_sequences();
  const auto& row = seq.binomial_row(n);
  Int sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    sum += row[k] * seq.self_power(k) * seq.self_power(n - k);
  }
  return sum;
}

Rat xi(unsigned n) { return make_rat(xi_scaled(n), ipow(long(n), n)); }

Int xi2_scaled(unsigned n) {
  require_positive(n, "xi2");
  const auto& seq = active_sequences();
  const auto& row = seq.binomial_row(n);
  Int sum = 0;
  Int inner;
  for (unsigned k = 0; k <= n; ++k) {
    const auto& sub = seq.binomial_row(n - k);
    inner = 0;
    for (unsigned j = 0; j + k <= n; ++j) {
      inner += sub[j] * seq.self_power(j) * seq.self_power(n - k - j);
    }
    sum += row[k] * seq.self_power(k) * inner;
  }
  return sum;
}

Rat xi2(unsigned n) { return make_rat(xi2_scaled(n), ipow(long(n), n)); }

Int xi2_via_derangement_scaled(unsigned n) {
  require_positive(n, "xi2");
  const auto& seq = active_sequences();
  const auto& row = seq.binomial_row(n);
  Int sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    unsigned m = n - k;
    sum += row[k] * seq.self_power(k) * derangement_poly_eval(m, Int(m + 1));
  }
  return sum;
}

Int xi2_closed_scaled(unsigned n) {
  require_positive(n, "xi2");
  const auto& seq = active_sequences();
  const auto& row = seq.binomial_row(n);
  // Horner in n over k descending: n^(n-k) accumulates naturally.
  Int sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    sum *= n;
    sum += row[k] * seq.factorial(k + 1);
  }
  return sum;
}

XiValue xi_value(unsigned n) {
  Int scaled = xi_scaled(n);
  Rat value = make_rat(scaled, ipow(long(n), n));
  return {n, std::move(scaled), std::move(value)};
}

XiValue xi2_value(unsigned n) {
  Int scaled = xi2_scaled(n);
  Rat value = make_rat(scaled, ipow(long(n), n));
  return {n, std::move(scaled), std::move(value)};
}

}  // namespace umbral
