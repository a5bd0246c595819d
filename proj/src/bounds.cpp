#include "abcodec/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "abcodec/constraints.hpp"

namespace abcodec {

namespace {

constexpr long kExactDensityLimit = 10000;

double phi(double z) { return 0.5 * (1.0 + std::erf(z / std::sqrt(2.0))); }

double log_binomial(long n, long w) {
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(w) + 1.0) -
         std::lgamma(static_cast<double>(n - w) + 1.0);
}

// log(sum over the band of C(n, w)) via a max-anchored sum.
double log_band_sum(long n, long w_lo, long w_hi) {
  long w_peak = std::min(std::max(n / 2, w_lo), w_hi);
  double log_peak = log_binomial(n, w_peak);
  double sum = 0.0;
  for (long w = w_lo; w <= w_hi; ++w) sum += std::exp(log_binomial(n, w) - log_peak);
  return log_peak + std::log(sum);
}

}  // namespace

DensityResult density_F(long n, const Rational& alpha_sq) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > static_cast<long>(std::numeric_limits<int>::max()))
    throw std::invalid_argument("n out of supported range");
  const BalanceSpec spec{static_cast<int>(n), 2, alpha_sq};
  const auto [w_lo, w_hi] = band_bounds(2, spec);

  DensityResult result;
  result.n = n;
  result.alpha_sq = alpha_sq;
  if (w_lo > w_hi) {
    result.exact = true;
    return result;
  }
  if (n <= kExactDensityLimit) {
    BigInt term;
    mpz_bin_uiui(term.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(w_lo));
    BigInt count = 0;
    for (long w = w_lo; w <= w_hi; ++w) {
      count += term;
      term = term * (n - w) / (w + 1);
    }
    Rational frac(count, BigInt(1) << static_cast<unsigned long>(n));
    frac.canonicalize();
    result.count = count;
    result.fraction = to_double(frac);
    result.exact = true;
    return result;
  }
  result.fraction = std::exp(log_band_sum(n, w_lo, w_hi) - n * std::log(2.0));
  return result;
}

DensityResult density_F_pb(long n, int q, const Rational& alpha_sq) {
  if (q < 2 || q % 2 != 0) throw std::invalid_argument("polarity density needs an even q");
  DensityResult result = density_F(n, alpha_sq);
  if (result.exact && q > 2) {
    BigInt half_pow;
    mpz_ui_pow_ui(half_pow.get_mpz_t(), static_cast<unsigned long>(q / 2),
                  static_cast<unsigned long>(n));
    result.count *= half_pow;
  }
  return result;
}

BigInt count_pb_bruteforce(int n, int q, const Rational& alpha_sq) {
  if (q < 2 || q % 2 != 0) throw std::invalid_argument("polarity count needs an even q");
  if (n < 1 || std::pow(static_cast<double>(q), n) > 2e7)
    throw std::invalid_argument("brute-force enumeration capped at ~2e7 sequences");
  const BalanceSpec spec{n, q, alpha_sq};
  std::vector<std::uint8_t> word(n, 0);
  long low = n;  // all-zero word: every symbol is in the low half
  BigInt members = 0;
  for (;;) {
    if (in_band(low, 2, spec)) ++members;
    int pos = n - 1;
    while (pos >= 0) {
      if (word[pos] < q / 2) --low;
      if (++word[pos] == q) {
        word[pos] = 0;
        ++low;
        --pos;
      } else {
        if (word[pos] < q / 2) ++low;
        break;
      }
    }
    if (pos < 0) break;
  }
  return members;
}

double limiting_density(double alpha) { return 2.0 * phi(2.0 * alpha) - 1.0; }

BoundsTable table_bounds(int q_min, int q_max, long grid_micro, long check_n) {
  if (q_min < 2 || q_max < q_min) throw std::invalid_argument("bad q range");
  if (grid_micro < 1) throw std::invalid_argument("grid step must be positive");
  BoundsTable table;
  table.grid_micro = grid_micro;
  table.check_n = check_n;
  for (int q = q_min; q <= q_max; ++q) {
    const double target = 1.0 / q;
    long k = 1;
    while (limiting_density(1e-6 * static_cast<double>(k * grid_micro)) < target) {
      ++k;
      if (k * grid_micro > 2'000'000)
        throw std::logic_error("threshold search ran away");
    }
    BoundsRow row;
    row.q = q;
    row.lower_micro = (k - 1) * grid_micro;
    row.upper_micro = k * grid_micro;
    if (check_n > 0) {
      const auto micro_alpha_sq = [](long micro) {
        Rational a2(BigInt(micro) * micro, BigInt(1'000'000) * 1'000'000);
        a2.canonicalize();
        return a2;
      };
      row.density_lower = density_F(check_n, micro_alpha_sq(row.lower_micro)).fraction;
      row.density_upper = density_F(check_n, micro_alpha_sq(row.upper_micro)).fraction;
    }
    table.rows.push_back(row);
  }
  return table;
}

double limit_ratio(double n, double alpha) {
  const double drift = alpha / std::sqrt(n) + 1.0 / n;
  const double p_low = 0.5 + drift;
  const double p_high = 0.5 - drift;
  if (p_high <= 0.0) throw std::domain_error("n too small: 1/2 - alpha/sqrt(n) - 1/n <= 0");
  const double log_value = (n - 2.0) * std::log(2.0) +
                           (n / 2.0 - alpha * std::sqrt(n)) * std::log(p_high) +
                           (n / 2.0 + alpha * std::sqrt(n)) * std::log(p_low);
  return std::exp(log_value);
}

Containment verify_containment(int n, const Rational& alpha_sq) {
  if (n < 1 || n > 10) throw std::invalid_argument("containment check supports n in [1, 10]");
  const BalanceSpec spec{n, 4, alpha_sq};
  SymbolSequence x(4, std::vector<std::uint8_t>(n, 0));
  for (;;) {
    const bool in_all_pairs =
        in_C0i(x, spec, 1) && in_C0i(x, spec, 2) && in_C0i(x, spec, 3);
    if (in_all_pairs && !in_C_sb4(x, spec)) return {false, x};
    int pos = n - 1;
    while (pos >= 0 && ++x.symbols[pos] == 4) x.symbols[pos--] = 0;
    if (pos < 0) break;
  }
  return {true, std::nullopt};
}

ZScoreReport zscore_sanity() {
  ZScoreReport report;
  report.phi_068 = phi(0.68);
  report.phi_067 = phi(0.67);
  report.pass = (2.0 * report.phi_068 - 1.0 >= 0.5) && (2.0 * report.phi_067 - 1.0 < 0.5);
  return report;
}

}  // namespace abcodec
