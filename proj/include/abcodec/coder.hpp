#pragma once

#include <array>

#include "abcodec/interval.hpp"
#include "abcodec/sequence.hpp"

namespace abcodec {

// One fixed-bias arithmetic coder instance: n input symbols over an
// alphabet of size q are mapped through n interval splits, and the output
// is the shortest in-interval base-q fraction padded to target_len digits.
//
// remap_symbol = 0 keeps the natural symbol order; i in {1, 2, 3} selects
// the 4-ary variant whose first two (large, low-biased) sub-intervals are
// assigned to the symbols 0 and i, the remaining two symbols following in
// ascending order.
struct CoderParams {
  int n = 0;
  int q = 2;
  Rational p;
  int target_len = 0;
  int remap_symbol = 0;
};

// Sub-interval order for the remapped 4-ary coder: (0, i, rest ascending).
std::array<int, 4> remap_order(int i);

// The nested-split walk: iv_0 = [0,1); at step t the current interval is
// split q ways and the sub-interval assigned to x_t becomes current.
Interval map_to_interval(const SymbolSequence& x, const CoderParams& params);

// Shortest fraction of the mapped interval, zero-padded to target_len.
// Throws CodecError{OutputTooLong} when the fraction needs more digits.
SymbolSequence encode(const SymbolSequence& x, const CoderParams& params);

// Replays the split walk against the digits' value; inverse of encode on
// its image, and insensitive to extra trailing zero digits.
SymbolSequence decode(const SymbolSequence& digits, const CoderParams& params);

}  // namespace abcodec
