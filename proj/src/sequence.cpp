#include "abcodec/sequence.hpp"

#include <stdexcept>

namespace abcodec {

SymbolSequence::SymbolSequence(int alphabet, std::vector<std::uint8_t> syms)
    : q(alphabet), symbols(std::move(syms)) {
  if (q < 2) throw std::invalid_argument("alphabet size must be >= 2");
  for (std::uint8_t s : symbols)
    if (s >= q) throw std::invalid_argument("symbol out of alphabet range");
}

SymbolSequence parse_sequence(std::string_view text, int q) {
  if (q < 2 || q > 10)
    throw std::invalid_argument("text sequences support alphabets of size 2..10");
  std::vector<std::uint8_t> syms;
  syms.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c >= '0' + q)
      throw std::invalid_argument("invalid symbol '" + std::string(1, c) +
                                  "' at position " + std::to_string(i + 1));
    syms.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return SymbolSequence(q, std::move(syms));
}

std::string to_string(const SymbolSequence& x) {
  std::string out;
  out.reserve(x.size());
  for (std::uint8_t s : x.symbols) out.push_back(static_cast<char>('0' + s));
  return out;
}

}  // namespace abcodec
