#pragma once

#include <utility>
#include <vector>

#include "abcodec/rational.hpp"

namespace abcodec {

// Half-open interval [lo, hi) with 0 <= lo < hi <= 1, endpoints exact.
struct Interval {
  Rational lo;
  Rational hi;

  Interval(Rational low, Rational high);
  Rational length() const { return hi - lo; }
  bool contains(const Rational& v) const { return v >= lo && v < hi; }
  bool operator==(const Interval&) const = default;
};

// Base-b fraction written most significant digit first:
// value = sum_j digits[j] * base^-(j+1). The empty string is zero.
struct DigitString {
  int base = 2;
  std::vector<int> digits;

  std::size_t length() const { return digits.size(); }
  bool operator==(const DigitString&) const = default;
};

// Splits iv at lo + p*|iv|: the left part has length p*|iv|, the right part
// (1-p)*|iv|, and they partition iv exactly.
std::pair<Interval, Interval> split_binary(const Interval& iv, const Rational& p);

// Splits iv into q contiguous sub-intervals: the first q/2 of length
// (2p/q)*|iv| each, the last q/2 of length (2(1-p)/q)*|iv| each. q even.
// At q = 2 this coincides with split_binary.
std::vector<Interval> split_qary(const Interval& iv, const Rational& p, int q);

// The base-b fraction of minimal digit count inside iv. At the minimal
// count k, ties are broken leftmost: m = ceil(lo * base^k). k = 0 (the
// empty string, value zero) occurs exactly when lo = 0.
DigitString shortest_fraction(const Interval& iv, int base);

Rational digits_to_fraction(const DigitString& d);

}  // namespace abcodec
