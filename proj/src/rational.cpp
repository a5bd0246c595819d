#include "abcodec/rational.hpp"

#include <stdexcept>
#include <string>

namespace abcodec {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string num(text);
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num.assign(text.substr(0, slash));
    den.assign(text.substr(slash + 1));
    if (num.empty() || den.empty())
      throw std::invalid_argument("malformed rational literal: " + std::string(text));
  }
  Rational r;
  try {
    r = Rational(BigInt(num), BigInt(den));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  }
  if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
  r.canonicalize();
  return r;
}

Rational rational_pow(const Rational& base, unsigned long exp) {
  Rational out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
  // num and den are coprime, so powers are too; no canonicalization needed.
  return out;
}

BigInt floor_sqrt(const BigInt& v) {
  if (v < 0) throw std::domain_error("floor_sqrt of negative value");
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
  return root;
}

BigInt ceil_rational(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), mpq_numref(r.get_mpq_t()), mpq_denref(r.get_mpq_t()));
  return q;
}

double to_double(const Rational& r) { return mpq_get_d(r.get_mpq_t()); }

}  // namespace abcodec
