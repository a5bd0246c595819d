// Acceptance suite: one line per criterion, PASS or FAIL, nonzero exit if
// anything failed. Each criterion pins its tolerances in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "abcodec/balancer.hpp"
#include "abcodec/bounds.hpp"
#include "abcodec/coder.hpp"
#include "abcodec/constraints.hpp"

using namespace abcodec;

namespace {

int g_failures = 0;
std::chrono::steady_clock::time_point g_started;

void begin_criterion() { g_started = std::chrono::steady_clock::now(); }

void report(int index, const char* label, bool ok, const std::string& detail = "") {
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - g_started)
                           .count();
  std::printf("%s  criterion %2d  [%6lld ms]  %s%s%s\n", ok ? "PASS" : "FAIL", index,
              static_cast<long long>(elapsed), label, detail.empty() ? "" : " -- ",
              detail.c_str());
  if (!ok) ++g_failures;
}

SymbolSequence bits(const char* text) { return parse_sequence(text, 2); }

SymbolSequence nth_sequence(unsigned long index, int n, int q) {
  SymbolSequence x(q, std::vector<std::uint8_t>(n, 0));
  for (int j = 0; j < n; ++j) {
    x.symbols[j] = static_cast<std::uint8_t>(index % q);
    index /= q;
  }
  return x;
}

bool g_output_too_long_seen = false;

EncodeReport guarded_encode(const SymbolSequence& x, const CodecConfig& config) {
  try {
    return encode_message(x, config);
  } catch (const CodecError& e) {
    if (e.fault() == Fault::OutputTooLong) g_output_too_long_seen = true;
    throw;
  }
}

void criterion_1() {
  begin_criterion();
  CoderParams params{5, 2, make_rational(3, 4), 3, 0};
  const Interval iv = map_to_interval(bits("00010"), params);
  const bool interval_ok =
      iv.lo == make_rational(81, 256) && iv.hi == make_rational(405, 1024);
  const bool digits_ok = shortest_fraction(iv, 2) == DigitString{2, {0, 1, 1}};
  report(1, "worked 5-bit mapping and shortest fraction, exact", interval_ok && digits_ok);
}

void criterion_2() {
  begin_criterion();
  const CodecConfig config = CodecConfig::derive(Mode::Binary, 8, Rational(1));
  bool ok = validate_config(config).ok;
  std::string detail;
  try {
    const EncodeReport report8 = encode_balanced(bits("1000000"), config);
    ok = ok && report8.codeword == bits("10000001");
    ok = ok && report8.iterations == 2;
    ok = ok && report8.trace ==
                   std::vector<BranchStep>{BranchStep{'L', 0}, BranchStep{'H', 0}};
    ok = ok && step_map(bits("10000000"), config) == bits("11111111");
    ok = ok && decode_balanced(bits("10000001"), config) == bits("1000000");
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(2, "worked 8-bit encode: codeword, trace, inverse, exact", ok, detail);
}

void criterion_3() {
  begin_criterion();
  bool ok = true;
  std::string detail;
  for (int n : {8, 10, 12, 14, 16}) {
    const CodecConfig config = CodecConfig::derive(Mode::Binary, n, Rational(1));
    if (!validate_config(config).ok) {
      ok = false;
      detail = "config n=" + std::to_string(n) + " rejected";
      break;
    }
    const BalanceSpec spec = config.spec();
    const unsigned long total = 1ul << (n - 1);
    for (unsigned long index = 0; index < total && ok; ++index) {
      const SymbolSequence x = nth_sequence(index, n - 1, 2);
      try {
        const EncodeReport rep = guarded_encode(x, config);
        if (!in_C(rep.codeword, spec) || decode_balanced(rep.codeword, config) != x) {
          ok = false;
          detail = "n=" + std::to_string(n) + " index=" + std::to_string(index);
        }
      } catch (const std::exception& e) {
        ok = false;
        detail = std::string("n=") + std::to_string(n) + ": " + e.what();
      }
    }
  }
  report(3, "exhaustive binary roundtrip + membership, n in {8,10,12,14,16}", ok, detail);
}

void criterion_4() {
  begin_criterion();
  const CodecConfig config = CodecConfig::derive(Mode::Binary, 30, Rational(1));
  std::mt19937_64 rng(20240830);
  int max_iterations = 0;
  long long total_iterations = 0;
  const int samples = 100000;
  bool ok = validate_config(config).ok;
  std::string detail;
  try {
    for (int s = 0; s < samples; ++s) {
      SymbolSequence x(2, {});
      x.symbols.reserve(29);
      for (int j = 0; j < 29; ++j) x.symbols.push_back(static_cast<std::uint8_t>(rng() & 1));
      const int iters = guarded_encode(x, config).iterations;
      max_iterations = std::max(max_iterations, iters);
      total_iterations += iters;
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  const double mean = static_cast<double>(total_iterations) / samples;
  ok = ok && max_iterations <= 7 && mean <= 3.0;
  if (detail.empty())
    detail = "max=" + std::to_string(max_iterations) + " mean=" + std::to_string(mean);
  report(4, "iteration bound at n=30 over 1e5 random words (max<=7, mean<=3)", ok, detail);
}

void criterion_5() {
  begin_criterion();
  const DensityResult above = density_F(1000000, make_rational(289, 2500));    // 0.34^2
  const DensityResult below = density_F(1000000, make_rational(4489, 40000));  // 0.335^2
  const bool ok = above.fraction >= 0.5 && below.fraction < 0.5;
  char detail[96];
  std::snprintf(detail, sizeof detail, "F(1e6,0.34)=%.6f F(1e6,0.335)=%.6f",
                above.fraction, below.fraction);
  report(5, "half-space bracket at n=1e6: F(0.34)>=0.5 > F(0.335)", ok, detail);
}

void criterion_6() {
  begin_criterion();
  const BoundsTable table = table_bounds(2, 7, 5000);
  const std::pair<long, long> expected[] = {
      {335000, 340000}, {215000, 220000}, {155000, 160000},
      {125000, 130000}, {105000, 110000}, {90000, 95000},
  };
  bool ok = table.rows.size() == 6;
  for (int row = 0; ok && row < 6; ++row)
    ok = table.rows[row].q == row + 2 &&
         table.rows[row].lower_micro == expected[row].first &&
         table.rows[row].upper_micro == expected[row].second;
  report(6, "published threshold table at grid 0.005, exact row match", ok);
}

void criterion_7() {
  begin_criterion();
  const double value = limit_ratio(1e6, 1.0);
  const double target = std::exp(2.0) / 4.0;
  const bool ok = std::abs(value - target) <= 0.01 * target;
  char detail[64];
  std::snprintf(detail, sizeof detail, "ratio=%.6f target=%.6f", value, target);
  report(7, "finite-n enumeration ratio within 1% of e^2/4 at n=1e6", ok, detail);
}

void criterion_8() {
  begin_criterion();
  const CodecConfig config = CodecConfig::derive(Mode::Polarity, 12, Rational(1), 4);
  bool ok = validate_config(config).ok;
  std::string detail;
  const BalanceSpec spec = config.spec();
  std::mt19937_64 rng(7081205);
  try {
    for (int s = 0; s < 10000 && ok; ++s) {
      SymbolSequence x(4, {});
      for (int j = 0; j < 11; ++j) x.symbols.push_back(static_cast<std::uint8_t>(rng() % 4));
      const EncodeReport rep = guarded_encode(x, config);
      if (!in_C_pb(rep.codeword, spec) || decode_polarity(rep.codeword, config) != x) {
        ok = false;
        detail = "roundtrip failure at sample " + std::to_string(s);
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  for (int q : {2, 4, 6}) {
    for (int n = 1; n <= 8 && ok; ++n) {
      if (count_pb_bruteforce(n, q, Rational(1)) != density_F_pb(n, q, Rational(1)).count) {
        ok = false;
        detail = "density mismatch at q=" + std::to_string(q) + " n=" + std::to_string(n);
      }
    }
  }
  report(8, "polarity: 1e4 roundtrips at q=4,n=12 + brute-force density check", ok, detail);
}

void criterion_9() {
  begin_criterion();
  const CodecConfig config = CodecConfig::derive(Mode::Symbol4, 100, Rational(6));
  bool ok = validate_config(config).ok;
  std::string detail;
  const BalanceSpec spec = config.spec();
  std::mt19937_64 rng(900100);
  try {
    for (int s = 0; s < 1000 && ok; ++s) {
      SymbolSequence x(4, {});
      for (int j = 0; j < 99; ++j) x.symbols.push_back(static_cast<std::uint8_t>(rng() % 4));
      const EncodeReport rep = guarded_encode(x, config);
      if (!in_C_sb4(rep.codeword, spec) || decode_symbol4(rep.codeword, config) != x) {
        ok = false;
        detail = "roundtrip failure at sample " + std::to_string(s);
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  if (ok) {
    const Containment containment = verify_containment(8, Rational(1));
    if (!containment.holds) {
      ok = false;
      detail = "containment counterexample: " + to_string(*containment.counterexample);
    }
  }
  report(9, "symbol balance: 1e3 roundtrips at n=100 + pair containment over 4^8", ok, detail);
}

void criterion_10() {
  begin_criterion();
  bool ok = true;
  std::string detail;
  for (int n : {8, 10, 12}) {
    const CodecConfig config = CodecConfig::derive(Mode::Binary, n, Rational(1));
    std::map<std::vector<std::uint8_t>, unsigned long> source_of_image;
    const unsigned long total = 1ul << n;
    for (unsigned long index = 0; index < total && ok; ++index) {
      const SymbolSequence y = nth_sequence(index, n, 2);
      if (satisfies_constraint(y, config)) continue;
      const SymbolSequence z = step_map(y, config);
      if (z.symbols.back() == 0) {
        ok = false;
        detail = "image ends in 0 at n=" + std::to_string(n);
      }
      const auto [it, inserted] = source_of_image.emplace(z.symbols, index);
      if (!inserted) {
        ok = false;
        detail = "collision at n=" + std::to_string(n) + " between " +
                 std::to_string(it->second) + " and " + std::to_string(index);
      }
    }
  }
  report(10, "step-map injectivity over all non-members, n in {8,10,12}", ok, detail);
}

void criterion_11() {
  begin_criterion();
  const Validation rejected = validate_config(CodecConfig::derive(Mode::Binary, 5, Rational(1)));
  const Validation accepted = validate_config(CodecConfig::derive(Mode::Binary, 8, Rational(1)));
  const bool ok = !rejected.ok && rejected.fault == Fault::InvalidProbability &&
                  accepted.ok && !g_output_too_long_seen;
  report(11, "validation gate + no OutputTooLong under accepted configs", ok,
         g_output_too_long_seen ? "OutputTooLong was raised" : "");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  if (g_failures == 0) {
    std::printf("all 11 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}
