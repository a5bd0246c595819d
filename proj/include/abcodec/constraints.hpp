#pragma once

#include <utility>

#include "abcodec/rational.hpp"
#include "abcodec/sequence.hpp"

namespace abcodec {

// Parameters of an almost-balance constraint: sequence length n over an
// alphabet of size q, with deviation allowance alpha*sqrt(n) configured as
// the rational alpha_sq = alpha^2 (the only form the exact tests need).
struct BalanceSpec {
  int n = 0;
  int q = 2;
  Rational alpha_sq;
};

long weight(const SymbolSequence& x);
long count_symbol(const SymbolSequence& x, int symbol);

// Number of symbols in the lower half {0, ..., q/2 - 1}; q must be even.
long polarity_low_count(const SymbolSequence& x);

// Exact decision of v in [n/c - s*alpha*sqrt(n), n/c + s*alpha*sqrt(n)].
// Thresholds are irrational in general, so the test squares the deviation:
// v is above the band iff c*v - n > 0 and (c*v - n)^2 * s_den^2 * a_den
// exceeds c^2 * s_num^2 * a_num * n, and symmetrically below. All integer
// arithmetic; the closed band keeps boundary values inside.
bool in_band(long v, int c, const BalanceSpec& spec, const Rational& scale = Rational(1));
bool above_band(long v, int c, const BalanceSpec& spec, const Rational& scale = Rational(1));
bool below_band(long v, int c, const BalanceSpec& spec, const Rational& scale = Rational(1));

// Integer range [lo, hi] of band members clamped to [0, n]; lo > hi when
// the band contains no integer.
std::pair<long, long> band_bounds(int c, const BalanceSpec& spec,
                                  const Rational& scale = Rational(1));

// Binary almost-balance on the Hamming weight (q = 2); the one-sided L/H
// variants drop the upper or lower edge and intersect back to the band.
bool in_C(const SymbolSequence& x, const BalanceSpec& spec);
bool in_CL(const SymbolSequence& x, const BalanceSpec& spec);
bool in_CH(const SymbolSequence& x, const BalanceSpec& spec);

// Polarity almost-balance on the low-half symbol count (q even).
bool in_C_pb(const SymbolSequence& x, const BalanceSpec& spec);
bool in_C_pb_L(const SymbolSequence& x, const BalanceSpec& spec);
bool in_C_pb_H(const SymbolSequence& x, const BalanceSpec& spec);

// 4-ary symbol balance: every symbol count within n/4 +- alpha*sqrt(n).
bool in_C_sb4(const SymbolSequence& x, const BalanceSpec& spec);

// Pair constraints for q = 4: #0(x) + #i(x) within n/2 +- alpha*sqrt(n)/2
// for i in {1, 2, 3}, plus the one-sided variants.
bool in_C0i(const SymbolSequence& x, const BalanceSpec& spec, int i);
bool in_C0i_L(const SymbolSequence& x, const BalanceSpec& spec, int i);
bool in_C0i_H(const SymbolSequence& x, const BalanceSpec& spec, int i);

}  // namespace abcodec
