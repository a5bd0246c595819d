#include "abcodec/interval.hpp"

#include <stdexcept>

namespace abcodec {

Interval::Interval(Rational low, Rational high)
    : lo(std::move(low)), hi(std::move(high)) {
  if (lo < 0 || hi > 1 || lo >= hi)
    throw std::invalid_argument("interval must satisfy 0 <= lo < hi <= 1");
}

std::pair<Interval, Interval> split_binary(const Interval& iv, const Rational& p) {
  if (p <= 0 || p >= 1) throw std::invalid_argument("split bias must lie in (0,1)");
  Rational mid = iv.lo + p * iv.length();
  return {Interval(iv.lo, mid), Interval(mid, iv.hi)};
}

std::vector<Interval> split_qary(const Interval& iv, const Rational& p, int q) {
  if (q < 2 || q % 2 != 0) throw std::invalid_argument("alphabet size must be even and >= 2");
  if (p <= 0 || p >= 1) throw std::invalid_argument("split bias must lie in (0,1)");
  const Rational low_share = 2 * p * iv.length() / q;
  const Rational high_share = 2 * (1 - p) * iv.length() / q;
  std::vector<Interval> parts;
  parts.reserve(q);
  Rational edge = iv.lo;
  for (int j = 0; j < q; ++j) {
    Rational next = edge + (j < q / 2 ? low_share : high_share);
    parts.emplace_back(edge, next);
    edge = std::move(next);
  }
  // The shares sum to |iv| exactly, so parts.back().hi == iv.hi.
  return parts;
}

DigitString shortest_fraction(const Interval& iv, int base) {
  if (base < 2) throw std::invalid_argument("base must be >= 2");
  Rational scaled_lo = iv.lo;
  Rational scaled_hi = iv.hi;
  BigInt m;
  unsigned long k = 0;
  for (;; ++k) {
    m = ceil_rational(scaled_lo);
    if (Rational(m) < scaled_hi) break;  // m / base^k lands inside [lo, hi)
    scaled_lo *= base;
    scaled_hi *= base;
  }
  DigitString out;
  out.base = base;
  out.digits.assign(k, 0);
  for (std::size_t j = k; j-- > 0;) {
    BigInt rem = m % base;
    out.digits[j] = static_cast<int>(rem.get_si());
    m /= base;
  }
  return out;
}

Rational digits_to_fraction(const DigitString& d) {
  if (d.base < 2) throw std::invalid_argument("base must be >= 2");
  Rational v = 0;
  for (std::size_t j = d.digits.size(); j-- > 0;) {
    if (d.digits[j] < 0 || d.digits[j] >= d.base)
      throw std::invalid_argument("digit out of range for base");
    v = (v + d.digits[j]) / d.base;
  }
  return v;
}

}  // namespace abcodec
