#include "abcodec/constraints.hpp"

#include <algorithm>
#include <stdexcept>

namespace abcodec {

namespace {

void require_alphabet(const SymbolSequence& x, const BalanceSpec& spec, int q) {
  if (spec.q != q) throw std::invalid_argument("constraint requires alphabet size " + std::to_string(q));
  if (x.q != spec.q) throw std::invalid_argument("sequence alphabet does not match spec");
  if (static_cast<long>(x.size()) != spec.n)
    throw std::invalid_argument("sequence length does not match spec");
}

// d <= c * s * alpha * sqrt(n), decided by squaring. Negative deviations are
// trivially within.
bool deviation_within(const BigInt& d, int c, const BalanceSpec& spec, const Rational& scale) {
  if (d <= 0) return true;
  BigInt lhs = d * d * scale.get_den() * scale.get_den() * spec.alpha_sq.get_den();
  BigInt rhs = BigInt(c) * c * scale.get_num() * scale.get_num() * spec.alpha_sq.get_num() * spec.n;
  return lhs <= rhs;
}

}  // namespace

long weight(const SymbolSequence& x) {
  return static_cast<long>(x.symbols.size()) -
         std::count(x.symbols.begin(), x.symbols.end(), std::uint8_t{0});
}

long count_symbol(const SymbolSequence& x, int symbol) {
  if (symbol < 0 || symbol >= x.q) throw std::invalid_argument("symbol out of alphabet range");
  return std::count(x.symbols.begin(), x.symbols.end(), static_cast<std::uint8_t>(symbol));
}

long polarity_low_count(const SymbolSequence& x) {
  if (x.q % 2 != 0) throw std::invalid_argument("polarity requires an even alphabet");
  const std::uint8_t half = static_cast<std::uint8_t>(x.q / 2);
  return std::count_if(x.symbols.begin(), x.symbols.end(),
                       [half](std::uint8_t s) { return s < half; });
}

bool above_band(long v, int c, const BalanceSpec& spec, const Rational& scale) {
  return !deviation_within(BigInt(c) * v - spec.n, c, spec, scale);
}

bool below_band(long v, int c, const BalanceSpec& spec, const Rational& scale) {
  return !deviation_within(spec.n - BigInt(c) * v, c, spec, scale);
}

bool in_band(long v, int c, const BalanceSpec& spec, const Rational& scale) {
  return !above_band(v, c, spec, scale) && !below_band(v, c, spec, scale);
}

std::pair<long, long> band_bounds(int c, const BalanceSpec& spec, const Rational& scale) {
  // d_max = floor(sqrt(c^2 s^2 alpha^2 n)) via floor(isqrt(N*D)/D) for the
  // rational radicand N/D, then nudged against the exact predicate.
  BigInt N = BigInt(c) * c * scale.get_num() * scale.get_num() * spec.alpha_sq.get_num() * spec.n;
  BigInt D = scale.get_den() * scale.get_den() * spec.alpha_sq.get_den();
  BigInt d_max = floor_sqrt(N * D) / D;

  BigInt lo_big, hi_big;
  mpz_cdiv_q(lo_big.get_mpz_t(), BigInt(spec.n - d_max).get_mpz_t(), BigInt(c).get_mpz_t());
  mpz_fdiv_q(hi_big.get_mpz_t(), BigInt(spec.n + d_max).get_mpz_t(), BigInt(c).get_mpz_t());
  long lo = std::max(0L, lo_big.get_si());
  long hi = std::min(static_cast<long>(spec.n), hi_big.get_si());
  while (lo > 0 && in_band(lo - 1, c, spec, scale)) --lo;
  while (lo <= spec.n && !in_band(lo, c, spec, scale)) ++lo;
  while (hi < spec.n && in_band(hi + 1, c, spec, scale)) ++hi;
  while (hi >= 0 && !in_band(hi, c, spec, scale)) --hi;
  return {lo, hi};  // lo > hi iff no integer lies in the band
}

bool in_C(const SymbolSequence& x, const BalanceSpec& spec) {
  require_alphabet(x, spec, 2);
  return in_band(weight(x), 2, spec);
}

bool in_CL(const SymbolSequence& x, const BalanceSpec& spec) {
  require_alphabet(x, spec, 2);
  return !above_band(weight(x), 2, spec);
}

bool in_CH(const SymbolSequence& x, const BalanceSpec& spec) {
  require_alphabet(x, spec, 2);
  return !below_band(weight(x), 2, spec);
}

bool in_C_pb(const SymbolSequence& x, const BalanceSpec& spec) {
  require_alphabet(x, spec, spec.q);
  return in_band(polarity_low_count(x), 2, spec);
}

bool in_C_pb_L(const SymbolSequence& x, const BalanceSpec& spec) {
  require_alphabet(x, spec, spec.q);
  return !above_band(polarity_low_count(x), 2, spec);
}

bool in_C_pb_H(const SymbolSequence& x, const BalanceSpec& spec) {
  require_alphabet(x, spec, spec.q);
  return !below_band(polarity_low_count(x), 2, spec);
}

bool in_C_sb4(const SymbolSequence& x, const BalanceSpec& spec) {
  require_alphabet(x, spec, 4);
  for (int sigma = 0; sigma < 4; ++sigma)
    if (!in_band(count_symbol(x, sigma), 4, spec)) return false;
  return true;
}

namespace {

long pair_count(const SymbolSequence& x, int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("pair constraint index must be 1, 2, or 3");
  return count_symbol(x, 0) + count_symbol(x, i);
}

const Rational& half_scale() {
  static const Rational half = make_rational(1, 2);
  return half;
}

}  // namespace

bool in_C0i(const SymbolSequence& x, const BalanceSpec& spec, int i) {
  require_alphabet(x, spec, 4);
  return in_band(pair_count(x, i), 2, spec, half_scale());
}

bool in_C0i_L(const SymbolSequence& x, const BalanceSpec& spec, int i) {
  require_alphabet(x, spec, 4);
  return !above_band(pair_count(x, i), 2, spec, half_scale());
}

bool in_C0i_H(const SymbolSequence& x, const BalanceSpec& spec, int i) {
  require_alphabet(x, spec, 4);
  return !below_band(pair_count(x, i), 2, spec, half_scale());
}

}  // namespace abcodec
