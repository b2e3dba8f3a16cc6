#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pxg {

inline constexpr int kMaxWordLength = 24;

/// A binary word x_0 x_1 ... x_{k-1} of fixed length 1 <= k <= 24.
///
/// The word is stored as its numeral with x_0 as the most significant bit, so
/// numeral() is the word read as a binary number ("011" -> 3). Words of
/// different lengths never compare equal.
class BitWord {
 public:
  BitWord(int length, std::uint32_t numeral);

  static BitWord zeros(int length) { return BitWord(length, 0); }
  static BitWord ones(int length);
  /// Parses the k characters '0'/'1' in position order.
  static BitWord parse(std::string_view text);

  int length() const noexcept { return length_; }
  std::uint32_t numeral() const noexcept { return numeral_; }

  /// Bit x_j. Throws UsageError unless 0 <= j < length().
  int bit(int j) const;

  std::string to_string() const;

  friend bool operator==(const BitWord&, const BitWord&) = default;
  friend auto operator<=>(const BitWord&, const BitWord&) = default;

 private:
  int length_;
  std::uint32_t numeral_;
};

/// Reverses the low `length` bits of `numeral`.
std::uint32_t reverse_bits(std::uint32_t numeral, int length) noexcept;

/// x^- : position j of the result holds x_{k-1-j}.
BitWord reverse(BitWord x);

/// x^j : x with bit x_j flipped. Throws UsageError unless 0 <= j < k.
BitWord flip(BitWord x, int j);

enum class Parity { even, odd };

Parity parity(BitWord x);

bool is_palindrome(BitWord x);

}  // namespace pxg
