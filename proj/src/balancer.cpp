#include "abcodec/balancer.hpp"

#include <stdexcept>
#include <utility>

#include "abcodec/coder.hpp"

namespace abcodec {

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::Binary:
      return "binary";
    case Mode::Polarity:
      return "polarity";
    case Mode::Symbol4:
      return "symbol4";
  }
  return "unknown";
}

Rational CodecConfig::bias_scale() const {
  return mode == Mode::Symbol4 ? make_rational(1, 2) : Rational(1);
}

namespace {

// Nearest B-bit dyadic to s * sqrt(alpha_sq / n), as an integer numerator
// over 2^B. Rounding is decided exactly: with x = sqrt(N/D) scaled so the
// answer is round(x), x >= k + 1/2 iff 4N >= D*(2k+1)^2.
BigInt rounded_root_term(const Rational& alpha_sq, int n, const Rational& scale, unsigned bits) {
  BigInt two_pow_b = BigInt(1) << bits;
  BigInt N = scale.get_num() * scale.get_num() * alpha_sq.get_num() * two_pow_b * two_pow_b;
  BigInt D = scale.get_den() * scale.get_den() * alpha_sq.get_den() * n;
  BigInt k = floor_sqrt(N * D) / D;
  if (4 * N >= D * (2 * k + 1) * (2 * k + 1)) ++k;
  return k;
}

Rational derive_p_low(int n, const Rational& alpha_sq, const Rational& scale, unsigned bits) {
  BigInt two_pow_b = BigInt(1) << bits;
  BigInt root = rounded_root_term(alpha_sq, n, scale, bits);
  BigInt inv_n = (2 * two_pow_b + n) / (2 * n);  // round(2^B / n)
  Rational p(two_pow_b / 2 + root + inv_n, two_pow_b);
  p.canonicalize();
  return p;
}

struct BranchShares {
  Rational low;   // share of each slice assigned to the low set
  Rational high;  // share of each of the remaining slices
};

BranchShares shares_for(const Rational& p, int q) {
  return {2 * p / q, 2 * (1 - p) / q};
}

void require_message(const SymbolSequence& x, const CodecConfig& config) {
  if (static_cast<int>(x.size()) != config.n - 1)
    throw std::invalid_argument("message length must be n-1 = " + std::to_string(config.n - 1));
  if (x.q != config.q) throw std::invalid_argument("message alphabet does not match config");
}

void require_codeword(const SymbolSequence& y, const CodecConfig& config) {
  if (static_cast<int>(y.size()) != config.n)
    throw std::invalid_argument("codeword length must be n = " + std::to_string(config.n));
  if (y.q != config.q) throw std::invalid_argument("codeword alphabet does not match config");
}

CoderParams coder_params(const CodecConfig& config, bool take_low, int remap) {
  return CoderParams{config.n, config.q, take_low ? config.p_low : config.p_high,
                     config.target_len, remap};
}

// One loop-body application. Exactly one branch applies because y violates
// exactly one side of its constraint band.
SymbolSequence apply_step(const SymbolSequence& y, const CodecConfig& config,
                          std::vector<BranchStep>* trace) {
  const BalanceSpec spec = config.spec();
  switch (config.mode) {
    case Mode::Binary: {
      // Weight below the band means zeros are over-represented: the p_low
      // coder gives symbol 0 the large share. Flags 11 / 01.
      const bool take_low = in_CL(y, spec);
      SymbolSequence next = encode(y, coder_params(config, take_low, 0));
      next.symbols.push_back(take_low ? 1 : 0);
      next.symbols.push_back(1);
      if (trace) trace->push_back({take_low ? 'L' : 'H', 0});
      return next;
    }
    case Mode::Polarity: {
      // Low-half symbols over-represented -> p_low coder (their share is
      // the large one), flag 1; under-represented -> p_high coder, flag 2.
      const bool take_low = above_band(polarity_low_count(y), 2, spec);
      SymbolSequence next = encode(y, coder_params(config, take_low, 0));
      next.symbols.push_back(take_low ? 1 : 2);
      if (trace) trace->push_back({take_low ? 'L' : 'H', 0});
      return next;
    }
    case Mode::Symbol4: {
      for (int i = 1; i <= 3; ++i) {
        if (in_C0i(y, spec, i)) continue;
        const bool take_low = !in_C0i_L(y, spec, i);
        SymbolSequence next = encode(y, coder_params(config, take_low, i));
        next.symbols.push_back(take_low ? 1 : 0);
        next.symbols.push_back(static_cast<std::uint8_t>(i));
        if (trace) trace->push_back({take_low ? 'L' : 'H', i});
        return next;
      }
      // The pair constraints' intersection is contained in the symbol
      // balance set, so an unbalanced y violates some pair constraint.
      throw std::logic_error("no pair constraint violated by an unbalanced sequence");
    }
  }
  throw std::logic_error("unreachable");
}

EncodeReport run_encode(const SymbolSequence& x, const CodecConfig& config) {
  require_message(x, config);
  SymbolSequence y = x;
  y.symbols.push_back(0);
  EncodeReport report;
  while (!satisfies_constraint(y, config)) {
    if (static_cast<int>(report.trace.size()) >= config.iteration_cap)
      throw CodecError(Fault::IterationGuardExceeded,
                       "balancing loop exceeded " + std::to_string(config.iteration_cap) +
                           " iterations; config was not validated");
    y = apply_step(y, config, &report.trace);
  }
  report.codeword = std::move(y);
  report.iterations = static_cast<int>(report.trace.size());
  return report;
}

SymbolSequence inner_digits(const SymbolSequence& y, int count) {
  SymbolSequence digits;
  digits.q = y.q;
  digits.symbols.assign(y.symbols.begin(), y.symbols.begin() + count);
  return digits;
}

}  // namespace

CodecConfig CodecConfig::derive(Mode mode, int n, const Rational& alpha_sq, int q,
                                unsigned precision_bits) {
  CodecConfig config;
  config.mode = mode;
  switch (mode) {
    case Mode::Binary:
      config.q = q == 0 ? 2 : q;
      if (config.q != 2) throw std::invalid_argument("binary mode requires q = 2");
      break;
    case Mode::Polarity:
      config.q = q == 0 ? 4 : q;
      if (config.q < 4 || config.q % 2 != 0)
        throw std::invalid_argument("polarity mode requires an even q >= 4");
      break;
    case Mode::Symbol4:
      config.q = q == 0 ? 4 : q;
      if (config.q != 4) throw std::invalid_argument("symbol4 mode requires q = 4");
      break;
  }
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  if (alpha_sq <= 0) throw std::invalid_argument("alpha^2 must be positive");
  if (precision_bits < 8 || precision_bits > 4096)
    throw std::invalid_argument("precision_bits must lie in [8, 4096]");
  config.n = n;
  config.alpha_sq = alpha_sq;
  config.precision_bits = precision_bits;
  config.p_low = derive_p_low(n, alpha_sq, config.bias_scale(), precision_bits);
  config.p_high = 1 - config.p_low;
  config.target_len = mode == Mode::Polarity ? n - 1 : n - 2;
  config.iteration_cap = 10 * n;
  return config;
}

Validation validate_config(const CodecConfig& config) {
  const Rational half = make_rational(1, 2);
  if (!(config.p_low > half && config.p_low < 1))
    return {false, Fault::InvalidProbability,
            "p_low = " + std::to_string(to_double(config.p_low)) +
                " outside (1/2, 1); n too small for this alpha"};

  const std::pair<long, long> band = band_bounds(2, config.spec(), config.bias_scale());
  if (band.first > band.second)
    return {false, Fault::InsufficientCompression, "constraint band contains no integer"};

  // Worst admissible input on each branch: the low statistic one step
  // outside the band. Its interval must still hold a target_len-digit
  // fraction, i.e. worst >= q^-target_len, checked in exact arithmetic.
  const BigInt q_pow = [&] {
    BigInt v;
    mpz_ui_pow_ui(v.get_mpz_t(), config.q, config.target_len);
    return v;
  }();
  const auto branch_clears = [&](const Rational& p, long stat) {
    const BranchShares s = shares_for(p, config.q);
    const Rational worst = rational_pow(s.low, stat) *
                           rational_pow(s.high, config.n - stat);
    return worst * q_pow >= 1;
  };
  if (band.second < config.n && !branch_clears(config.p_low, band.second + 1))
    return {false, Fault::InsufficientCompression,
            "p_low branch cannot enumerate with " + std::to_string(config.target_len) +
                " digits at statistic " + std::to_string(band.second + 1)};
  if (band.first > 0 && !branch_clears(config.p_high, band.first - 1))
    return {false, Fault::InsufficientCompression,
            "p_high branch cannot enumerate with " + std::to_string(config.target_len) +
                " digits at statistic " + std::to_string(band.first - 1)};
  return {true, Fault::InvalidProbability, "ok"};
}

EncodeReport encode_balanced(const SymbolSequence& x, const CodecConfig& config) {
  if (config.mode != Mode::Binary) throw std::invalid_argument("config mode is not binary");
  return run_encode(x, config);
}

EncodeReport encode_polarity(const SymbolSequence& x, const CodecConfig& config) {
  if (config.mode != Mode::Polarity) throw std::invalid_argument("config mode is not polarity");
  return run_encode(x, config);
}

EncodeReport encode_symbol4(const SymbolSequence& x, const CodecConfig& config) {
  if (config.mode != Mode::Symbol4) throw std::invalid_argument("config mode is not symbol4");
  return run_encode(x, config);
}

SymbolSequence decode_balanced(const SymbolSequence& y, const CodecConfig& config) {
  if (config.mode != Mode::Binary) throw std::invalid_argument("config mode is not binary");
  require_codeword(y, config);
  SymbolSequence cur = y;
  int rounds = 0;
  while (cur.symbols.back() != 0) {
    if (++rounds > config.iteration_cap)
      throw CodecError(Fault::IterationGuardExceeded, "decoding loop exceeded its cap");
    const std::uint8_t flag = cur.symbols[config.n - 2];
    cur = decode(inner_digits(cur, config.target_len), coder_params(config, flag == 1, 0));
  }
  cur.symbols.pop_back();
  return cur;
}

SymbolSequence decode_polarity(const SymbolSequence& y, const CodecConfig& config) {
  if (config.mode != Mode::Polarity) throw std::invalid_argument("config mode is not polarity");
  require_codeword(y, config);
  SymbolSequence cur = y;
  int rounds = 0;
  while (cur.symbols.back() != 0) {
    if (++rounds > config.iteration_cap)
      throw CodecError(Fault::IterationGuardExceeded, "decoding loop exceeded its cap");
    const std::uint8_t flag = cur.symbols.back();
    if (flag != 1 && flag != 2)
      throw std::invalid_argument("polarity flag symbol must be 0, 1, or 2");
    cur = decode(inner_digits(cur, config.target_len), coder_params(config, flag == 1, 0));
  }
  cur.symbols.pop_back();
  return cur;
}

SymbolSequence decode_symbol4(const SymbolSequence& y, const CodecConfig& config) {
  if (config.mode != Mode::Symbol4) throw std::invalid_argument("config mode is not symbol4");
  require_codeword(y, config);
  SymbolSequence cur = y;
  int rounds = 0;
  while (cur.symbols.back() != 0) {
    if (++rounds > config.iteration_cap)
      throw CodecError(Fault::IterationGuardExceeded, "decoding loop exceeded its cap");
    const int pair_i = cur.symbols.back();
    const std::uint8_t flag = cur.symbols[config.n - 2];
    if (flag > 1) throw std::invalid_argument("symbol4 coder flag must be 0 or 1");
    cur = decode(inner_digits(cur, config.target_len), coder_params(config, flag == 1, pair_i));
  }
  cur.symbols.pop_back();
  return cur;
}

EncodeReport encode_message(const SymbolSequence& x, const CodecConfig& config) {
  return run_encode(x, config);
}

SymbolSequence decode_codeword(const SymbolSequence& y, const CodecConfig& config) {
  switch (config.mode) {
    case Mode::Binary:
      return decode_balanced(y, config);
    case Mode::Polarity:
      return decode_polarity(y, config);
    case Mode::Symbol4:
      return decode_symbol4(y, config);
  }
  throw std::logic_error("unreachable");
}

bool satisfies_constraint(const SymbolSequence& y, const CodecConfig& config) {
  const BalanceSpec spec = config.spec();
  switch (config.mode) {
    case Mode::Binary:
      return in_C(y, spec);
    case Mode::Polarity:
      return in_C_pb(y, spec);
    case Mode::Symbol4:
      return in_C_sb4(y, spec);
  }
  throw std::logic_error("unreachable");
}

SymbolSequence step_map(const SymbolSequence& y, const CodecConfig& config) {
  require_codeword(y, config);
  if (satisfies_constraint(y, config))
    throw std::invalid_argument("step_map input already satisfies the constraint");
  return apply_step(y, config, nullptr);
}

}  // namespace abcodec
