#pragma once

#include <string>
#include <vector>

#include "abcodec/constraints.hpp"
#include "abcodec/errors.hpp"
#include "abcodec/sequence.hpp"

namespace abcodec {

enum class Mode { Binary, Polarity, Symbol4 };

const char* mode_name(Mode mode);

inline constexpr unsigned kDefaultPrecisionBits = 96;

// A validated parameter bundle for one codec: length-(n-1) messages in,
// length-n constrained codewords out. The biases p_low/p_high are dyadic
// approximations (precision_bits fractional bits) of 1/2 + s*alpha/sqrt(n)
// + 1/n and its mirror, where the bias scale s is 1 for the binary and
// polarity modes and 1/2 for the 4-ary symbol mode.
struct CodecConfig {
  Mode mode = Mode::Binary;
  int n = 0;
  int q = 2;
  Rational alpha_sq;
  unsigned precision_bits = kDefaultPrecisionBits;

  // Derived:
  Rational p_low;
  Rational p_high;
  int target_len = 0;    // inner coder output length (n-2, or n-1 for polarity)
  int iteration_cap = 0; // guard on the balancing loop, 10*n

  static CodecConfig derive(Mode mode, int n, const Rational& alpha_sq, int q = 0,
                            unsigned precision_bits = kDefaultPrecisionBits);

  BalanceSpec spec() const { return BalanceSpec{n, q, alpha_sq}; }
  Rational bias_scale() const;
};

struct Validation {
  bool ok = false;
  Fault fault = Fault::InvalidProbability;
  std::string detail;
};

// Gate that every config must pass before encoding: the biases must lie in
// (1/2, 1) x (0, 1/2), the constraint band must contain an integer, and the
// worst-case interval on each coder branch must clear q^-target_len so the
// inner coder can never run out of digits. All checks are exact.
Validation validate_config(const CodecConfig& config);

struct BranchStep {
  char coder = 'L';  // 'L' = p_low coder, 'H' = p_high coder
  int remap = 0;     // 0, or the pair index i for the 4-ary symbol mode
  bool operator==(const BranchStep&) const = default;
};

struct EncodeReport {
  SymbolSequence codeword;
  int iterations = 0;
  std::vector<BranchStep> trace;
};

// Binary almost-balanced encoder/decoder: append 0, then re-encode with the
// matching biased coder plus a 2-bit flag until the weight enters the band.
EncodeReport encode_balanced(const SymbolSequence& x, const CodecConfig& config);
SymbolSequence decode_balanced(const SymbolSequence& y, const CodecConfig& config);

// q-ary polarity balance with a single flag symbol (1 = p_low, 2 = p_high).
EncodeReport encode_polarity(const SymbolSequence& x, const CodecConfig& config);
SymbolSequence decode_polarity(const SymbolSequence& y, const CodecConfig& config);

// 4-ary symbol balance via the three pair constraints; suffix flag then i.
EncodeReport encode_symbol4(const SymbolSequence& x, const CodecConfig& config);
SymbolSequence decode_symbol4(const SymbolSequence& y, const CodecConfig& config);

// Mode dispatch, for the CLI and generic drivers.
EncodeReport encode_message(const SymbolSequence& x, const CodecConfig& config);
SymbolSequence decode_codeword(const SymbolSequence& y, const CodecConfig& config);

// The target constraint of config's mode.
bool satisfies_constraint(const SymbolSequence& y, const CodecConfig& config);

// One application of the encoding loop body to a non-member y; exposed for
// injectivity and convergence tests.
SymbolSequence step_map(const SymbolSequence& y, const CodecConfig& config);

}  // namespace abcodec
