#include "abcodec/coder.hpp"

#include <stdexcept>

#include "abcodec/errors.hpp"

namespace abcodec {

namespace {

void require_params(const CoderParams& params) {
  if (params.n < 1) throw std::invalid_argument("coder needs n >= 1");
  if (params.q < 2 || params.q % 2 != 0)
    throw std::invalid_argument("coder alphabet must be even and >= 2");
  if (params.p <= 0 || params.p >= 1)
    throw std::invalid_argument("coder bias must lie in (0,1)");
  if (params.target_len < 0 || params.target_len >= params.n)
    throw std::invalid_argument("target length must lie in [0, n)");
  if (params.remap_symbol != 0 && params.q != 4)
    throw std::invalid_argument("symbol remapping is a 4-ary feature");
}

// slice_of[s] = index of the sub-interval assigned to symbol s.
std::array<int, 4> inverse_order(int i) {
  std::array<int, 4> order = remap_order(i);
  std::array<int, 4> inverse{};
  for (int j = 0; j < 4; ++j) inverse[order[j]] = j;
  return inverse;
}

}  // namespace

std::array<int, 4> remap_order(int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("remap symbol must be 1, 2, or 3");
  std::array<int, 4> order{0, i, 0, 0};
  int pos = 2;
  for (int s = 1; s < 4; ++s)
    if (s != i) order[pos++] = s;
  return order;
}

Interval map_to_interval(const SymbolSequence& x, const CoderParams& params) {
  require_params(params);
  if (static_cast<int>(x.size()) != params.n)
    throw std::invalid_argument("input length does not match coder n");
  if (x.q != params.q) throw std::invalid_argument("input alphabet does not match coder");

  const int q = params.q;
  const Rational low_share = 2 * params.p / q;        // each of the first q/2 slices
  const Rational high_share = 2 * (1 - params.p) / q; // each of the last q/2 slices
  std::array<int, 4> slice_of{};
  if (params.remap_symbol != 0) slice_of = inverse_order(params.remap_symbol);

  Rational lo = 0;
  Rational len = 1;
  for (std::uint8_t s : x.symbols) {
    const int j = params.remap_symbol != 0 ? slice_of[s] : s;
    const int low_before = std::min(j, q / 2);
    const int high_before = j - low_before;
    lo += (low_before * low_share + high_before * high_share) * len;
    len *= j < q / 2 ? low_share : high_share;
  }
  return Interval(lo, lo + len);
}

SymbolSequence encode(const SymbolSequence& x, const CoderParams& params) {
  const Interval iv = map_to_interval(x, params);
  const DigitString ds = shortest_fraction(iv, params.q);
  if (static_cast<int>(ds.length()) > params.target_len)
    throw CodecError(Fault::OutputTooLong,
                     "shortest fraction needs " + std::to_string(ds.length()) +
                         " digits, target is " + std::to_string(params.target_len));
  SymbolSequence out;
  out.q = params.q;
  out.symbols.assign(params.target_len, 0);
  for (std::size_t j = 0; j < ds.length(); ++j)
    out.symbols[j] = static_cast<std::uint8_t>(ds.digits[j]);
  return out;
}

SymbolSequence decode(const SymbolSequence& digits, const CoderParams& params) {
  require_params(params);
  if (digits.q != params.q) throw std::invalid_argument("digit alphabet does not match coder");

  DigitString ds;
  ds.base = params.q;
  ds.digits.assign(digits.symbols.begin(), digits.symbols.end());
  const Rational v = digits_to_fraction(ds);

  const int q = params.q;
  const Rational low_share = 2 * params.p / q;
  const Rational high_share = 2 * (1 - params.p) / q;
  std::array<int, 4> order{0, 1, 2, 3};
  if (params.remap_symbol != 0) order = remap_order(params.remap_symbol);

  SymbolSequence out;
  out.q = q;
  out.symbols.reserve(params.n);
  Rational lo = 0;
  Rational len = 1;
  for (int step = 0; step < params.n; ++step) {
    int j = 0;
    Rational edge = lo;
    for (; j < q - 1; ++j) {
      Rational next = edge + (j < q / 2 ? low_share : high_share) * len;
      if (v < next) break;
      edge = std::move(next);
    }
    out.symbols.push_back(static_cast<std::uint8_t>(
        params.remap_symbol != 0 ? order[j] : j));
    lo = std::move(edge);
    len *= j < q / 2 ? low_share : high_share;
  }
  return out;
}

}  // namespace abcodec
