#pragma once

#include <optional>
#include <vector>

#include "abcodec/rational.hpp"
#include "abcodec/sequence.hpp"

namespace abcodec {

// Fraction of length-n binary sequences whose weight lies in the
// almost-balance band. Exact big-integer binomial sums up to n = 10^4;
// beyond that, a log-space evaluation (relative error well under 1e-9)
// with count left unset.
struct DensityResult {
  long n = 0;
  Rational alpha_sq;
  BigInt count;
  double fraction = 0.0;
  bool exact = false;
};

DensityResult density_F(long n, const Rational& alpha_sq);

// Polarity-band density over alphabet q (q even). Equal to density_F by the
// counting identity |C_q^pb| = |C| * (q/2)^n; count is scaled accordingly
// on the exact path.
DensityResult density_F_pb(long n, int q, const Rational& alpha_sq);

// Independent check of the identity above: enumerates all q^n sequences
// and counts polarity-band members directly. n is capped at desk scale.
BigInt count_pb_bruteforce(int n, int q, const Rational& alpha_sq);

// Limiting density 2*Phi(2*alpha) - 1 of the almost-balance band (weight is
// asymptotically normal with sigma = sqrt(n)/2).
double limiting_density(double alpha);

// Grid bracket of the alpha threshold where the limiting polarity density
// crosses 1/q, for each q in [q_min, q_max]. Alphas are carried in integer
// millionths of the grid step to keep rows exactly comparable. When
// check_n > 0 the finite-n densities at both bracket points are attached.
struct BoundsRow {
  int q = 0;
  long lower_micro = 0;  // alpha in millionths
  long upper_micro = 0;
  std::optional<double> density_lower;
  std::optional<double> density_upper;
};

struct BoundsTable {
  long grid_micro = 5000;
  long check_n = 0;
  std::vector<BoundsRow> rows;
};

BoundsTable table_bounds(int q_min, int q_max, long grid_micro, long check_n = 0);

// The finite-n product 2^(n-2) * (1/2 - a/sqrt(n) - 1/n)^(n/2 - a*sqrt(n))
//                              * (1/2 + a/sqrt(n) + 1/n)^(n/2 + a*sqrt(n)),
// evaluated in log space; it tends to e^(2*alpha^2)/4 as n grows.
double limit_ratio(double n, double alpha);

// Exhaustive check that the intersection of the three pair constraints is
// contained in the 4-ary symbol-balance set; n <= 10.
struct Containment {
  bool holds = false;
  std::optional<SymbolSequence> counterexample;
};

Containment verify_containment(int n, const Rational& alpha_sq);

// The normal-quantile sanity behind the 0.335/0.34 bracket: half of the
// space sits within 0.68 sigma but not within 0.67 sigma.
struct ZScoreReport {
  double phi_068 = 0.0;
  double phi_067 = 0.0;
  bool pass = false;
};

ZScoreReport zscore_sanity();

}  // namespace abcodec
