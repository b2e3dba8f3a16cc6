#include "pxg/bitword.hpp"

#include <bit>

#include "pxg/errors.hpp"

namespace pxg {

BitWord::BitWord(int length, std::uint32_t numeral) : length_(length), numeral_(numeral) {
  if (length < 1 || length > kMaxWordLength) {
    throw UsageError("word length must be in [1, " + std::to_string(kMaxWordLength) + "], got " +
                     std::to_string(length));
  }
  if ((numeral >> length) != 0) {
    throw UsageError("numeral " + std::to_string(numeral) + " does not fit in " +
                     std::to_string(length) + " bits");
  }
}

BitWord BitWord::ones(int length) {
  const BitWord zero = zeros(length);
  return BitWord(zero.length(), (std::uint32_t{1} << length) - 1);
}

BitWord BitWord::parse(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxWordLength)) {
    throw UsageError("bad word length in '" + std::string(text) + "'");
  }
  std::uint32_t value = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw UsageError("bad bit character in '" + std::string(text) + "'");
    value = (value << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return BitWord(static_cast<int>(text.size()), value);
}

int BitWord::bit(int j) const {
  if (j < 0 || j >= length_) {
    throw UsageError("bit index " + std::to_string(j) + " out of range for length " +
                     std::to_string(length_));
  }
  return static_cast<int>((numeral_ >> (length_ - 1 - j)) & 1u);
}

std::string BitWord::to_string() const {
  std::string out(static_cast<std::size_t>(length_), '0');
  for (int j = 0; j < length_; ++j) {
    if ((numeral_ >> (length_ - 1 - j)) & 1u) out[static_cast<std::size_t>(j)] = '1';
  }
  return out;
}

std::uint32_t reverse_bits(std::uint32_t numeral, int length) noexcept {
  std::uint32_t out = 0;
  for (int j = 0; j < length; ++j) {
    out = (out << 1) | ((numeral >> j) & 1u);
  }
  return out;
}

BitWord reverse(BitWord x) { return BitWord(x.length(), reverse_bits(x.numeral(), x.length())); }

BitWord flip(BitWord x, int j) {
  if (j < 0 || j >= x.length()) {
    throw UsageError("flip index " + std::to_string(j) + " out of range for length " +
                     std::to_string(x.length()));
  }
  return BitWord(x.length(), x.numeral() ^ (std::uint32_t{1} << (x.length() - 1 - j)));
}

Parity parity(BitWord x) { return std::popcount(x.numeral()) % 2 == 0 ? Parity::even : Parity::odd; }

bool is_palindrome(BitWord x) { return reverse(x) == x; }

}  // namespace pxg
