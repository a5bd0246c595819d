#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "abcodec/constraints.hpp"

using namespace abcodec;

namespace {

SymbolSequence seq(const char* text, int q = 2) { return parse_sequence(text, q); }

BalanceSpec spec_of(int n, int q, long a_num, long a_den = 1) {
  return BalanceSpec{n, q, make_rational(a_num, a_den)};
}

}  // namespace

TEST_CASE("weight and symbol counts") {
  CHECK(weight(seq("10000000")) == 1);
  CHECK(weight(seq("00010")) == 1);
  CHECK(weight(seq("0000")) == 0);
  CHECK(count_symbol(seq("0123", 4), 2) == 1);
  CHECK(count_symbol(seq("0000"), 0) == 4);
  CHECK(count_symbol(seq("010203", 4), 0) == 3);
  CHECK(weight(seq("010203", 4)) + count_symbol(seq("010203", 4), 0) == 6);
}

TEST_CASE("polarity low counts") {
  CHECK(polarity_low_count(seq("0123", 4)) == 2);
  CHECK(polarity_low_count(seq("10110")) == 2);  // q=2: zeros are the low half
  CHECK(polarity_low_count(seq("012345", 6)) == 3);
  CHECK_THROWS_AS(polarity_low_count(SymbolSequence(3, {0, 1, 2})), std::invalid_argument);
}

TEST_CASE("integer band test") {
  BalanceSpec s8 = spec_of(8, 2, 1);
  CHECK(in_band(2, 2, s8));        // (4-8)^2 = 16 <= 4*8 = 32
  CHECK_FALSE(in_band(1, 2, s8));  // (2-8)^2 = 36 > 32
  CHECK(in_band(4, 2, s8));        // the band center is always inside
  CHECK(band_bounds(2, s8) == std::pair<long, long>{2, 6});

  // Perfect-square alpha^2 * n: integer test agrees with the literal
  // real-valued thresholds n/2 +- alpha*sqrt(n).
  BalanceSpec s16 = spec_of(16, 2, 1);  // alpha*sqrt(n) = 4 exactly
  CHECK(band_bounds(2, s16) == std::pair<long, long>{4, 12});
  CHECK(in_band(4, 2, s16));
  CHECK(in_band(12, 2, s16));
  CHECK_FALSE(in_band(3, 2, s16));
  CHECK_FALSE(in_band(13, 2, s16));

  // Empty band: odd n with tiny alpha has no integer near n/2.
  BalanceSpec s9 = spec_of(9, 2, 1, 1000);
  auto [lo, hi] = band_bounds(2, s9);
  CHECK(lo > hi);
}

TEST_CASE("binary membership and one-sided variants") {
  BalanceSpec s = spec_of(8, 2, 1);
  SymbolSequence w1 = seq("10000000");
  SymbolSequence w8 = seq("11111111");
  SymbolSequence w4 = seq("11110000");
  CHECK(in_CL(w1, s));
  CHECK_FALSE(in_CH(w1, s));
  CHECK_FALSE(in_CL(w8, s));
  CHECK(in_CH(w8, s));
  CHECK(in_CL(w4, s));
  CHECK(in_CH(w4, s));
  CHECK(in_C(w4, s));

  // C = C_L intersect C_H, exhaustively at n = 8.
  for (unsigned long bits = 0; bits < 256; ++bits) {
    SymbolSequence x(2, std::vector<std::uint8_t>(8, 0));
    for (int j = 0; j < 8; ++j) x.symbols[j] = (bits >> j) & 1u;
    CHECK(in_C(x, s) == (in_CL(x, s) && in_CH(x, s)));
  }
}

TEST_CASE("band tests ignore symbol order") {
  std::mt19937_64 rng(5);
  BalanceSpec s = spec_of(12, 4, 1);
  for (int trial = 0; trial < 100; ++trial) {
    SymbolSequence x(4, {});
    for (int j = 0; j < 12; ++j)
      x.symbols.push_back(static_cast<std::uint8_t>(rng() % 4));
    SymbolSequence shuffled = x;
    std::shuffle(shuffled.symbols.begin(), shuffled.symbols.end(), rng);
    CHECK(in_C_pb(x, s) == in_C_pb(shuffled, s));
    CHECK(in_C_sb4(x, s) == in_C_sb4(shuffled, s));
    for (int i = 1; i <= 3; ++i) CHECK(in_C0i(x, s, i) == in_C0i(shuffled, s, i));
  }
}

TEST_CASE("polarity membership") {
  BalanceSpec s = spec_of(8, 4, 1);
  CHECK(in_C_pb(seq("00002222", 4), s));        // low count 4: perfectly balanced
  CHECK(in_C_pb(seq("01230123", 4), s));
  CHECK_FALSE(in_C_pb(seq("00000000", 4), s));  // low count 8 outside [1.17, 6.83]
  CHECK(polarity_low_count(seq("00001111", 4)) == 8);  // 0 and 1 are both low
  CHECK_FALSE(in_C_pb(seq("00001111", 4), s));
  CHECK(in_C_pb_L(seq("33333333", 4), s));
  CHECK_FALSE(in_C_pb_H(seq("33333333", 4), s));

  // q = 2 polarity equals binary membership through the complemented weight.
  BalanceSpec b = spec_of(8, 2, 1);
  for (unsigned long bits = 0; bits < 256; ++bits) {
    SymbolSequence x(2, std::vector<std::uint8_t>(8, 0));
    for (int j = 0; j < 8; ++j) x.symbols[j] = (bits >> j) & 1u;
    CHECK(in_C_pb(x, b) == in_C(x, b));
  }
}

TEST_CASE("4-ary symbol balance") {
  BalanceSpec s4 = spec_of(4, 4, 1);
  CHECK(in_C_sb4(seq("0123", 4), s4));
  BalanceSpec s32 = spec_of(32, 4, 1);
  SymbolSequence zeros(4, std::vector<std::uint8_t>(32, 0));
  CHECK_FALSE(in_C_sb4(zeros, s32));  // n >= 16 alpha^2 pushes #0 = n out of band
  SymbolSequence balanced(4, {});
  for (int j = 0; j < 32; ++j) balanced.symbols.push_back(static_cast<std::uint8_t>(j % 4));
  CHECK(in_C_sb4(balanced, s32));
}

TEST_CASE("pair constraints") {
  BalanceSpec s4 = spec_of(4, 4, 1);
  for (int i = 1; i <= 3; ++i) CHECK(in_C0i(seq("0123", 4), s4, i));

  BalanceSpec s32 = spec_of(32, 4, 1);
  SymbolSequence zeros(4, std::vector<std::uint8_t>(32, 0));
  for (int i = 1; i <= 3; ++i) CHECK_FALSE(in_C0i(zeros, s32, i));

  CHECK_THROWS_AS(in_C0i(seq("0123", 4), s4, 0), std::invalid_argument);
  CHECK_THROWS_AS(in_C0i(seq("0123", 4), s4, 4), std::invalid_argument);
}

TEST_CASE("pair-constraint intersection sits inside the symbol-balance set") {
  // Exhaustive at n = 6 here; n = 8 is covered by the acceptance suite.
  const int n = 6;
  BalanceSpec s = spec_of(n, 4, 1);
  SymbolSequence x(4, std::vector<std::uint8_t>(n, 0));
  long checked = 0;
  for (;;) {
    if (in_C0i(x, s, 1) && in_C0i(x, s, 2) && in_C0i(x, s, 3)) {
      ++checked;
      CHECK(in_C_sb4(x, s));
    }
    int pos = n - 1;
    while (pos >= 0 && ++x.symbols[pos] == 4) x.symbols[pos--] = 0;
    if (pos < 0) break;
  }
  CHECK(checked > 0);
}
