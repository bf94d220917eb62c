#include <umbral/numbers.hpp>

#include <stdexcept>

namespace umbral {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int ipow(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Int ipow(long base, unsigned long exp) { return ipow(Int(base), exp); }

std::string to_string(const Int& v) { return v.get_str(10); }

std::string to_string(const Rat& v) { return v.get_str(10); }

std::string to_decimal(const Rat& v, unsigned digits) {
  Int scale = ipow(10L, digits);
  Int num = abs(v.get_num()) * scale;
  const Int& den = v.get_den();
  // round half away from zero
  Int q = (2 * num + den) / (2 * den);
  std::string body = q.get_str(10);
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  if (v < 0 && q != 0) body.insert(0, "-");
  return body;
}

Int parse_int(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("not an integer: '" + text + "'");
    }
  }
  Int out(text[0] == '+' ? text.substr(1) : text, 10);
  return out;
}

}  // namespace umbral
