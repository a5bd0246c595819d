#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace abcodec {

// Fixed-alphabet sequence over {0, ..., q-1}.
struct SymbolSequence {
  int q = 2;
  std::vector<std::uint8_t> symbols;

  SymbolSequence() = default;
  SymbolSequence(int alphabet, std::vector<std::uint8_t> syms);

  std::size_t size() const { return symbols.size(); }
  std::uint8_t operator[](std::size_t i) const { return symbols[i]; }
  bool operator==(const SymbolSequence&) const = default;
};

// One ASCII digit per symbol; q <= 10. Throws std::invalid_argument naming
// the offending position on bad characters or out-of-alphabet digits.
SymbolSequence parse_sequence(std::string_view text, int q);

std::string to_string(const SymbolSequence& x);

}  // namespace abcodec
