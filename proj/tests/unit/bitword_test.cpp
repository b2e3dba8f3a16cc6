#include "pxg/bitword.hpp"

#include <random>

#include <gtest/gtest.h>

#include "pxg/errors.hpp"

namespace pxg {
namespace {

TEST(BitWordTest, NumeralReadsFirstBitAsMostSignificant) {
  EXPECT_EQ(BitWord::parse("011").numeral(), 3u);
  EXPECT_EQ(BitWord::parse("100").numeral(), 4u);
  EXPECT_EQ(BitWord::parse("1").numeral(), 1u);
  BitWord w = BitWord::parse("0110");
  EXPECT_EQ(w.bit(0), 0);
  EXPECT_EQ(w.bit(1), 1);
  EXPECT_EQ(w.bit(2), 1);
  EXPECT_EQ(w.bit(3), 0);
}

TEST(BitWordTest, RoundTripsText) {
  for (std::uint32_t x = 0; x < 32; ++x) {
    BitWord w(5, x);
    EXPECT_EQ(BitWord::parse(w.to_string()), w);
  }
  EXPECT_EQ(BitWord::zeros(3).to_string(), "000");
  EXPECT_EQ(BitWord::ones(4).to_string(), "1111");
}

TEST(BitWordTest, DifferentLengthsAreDifferentWords) {
  EXPECT_NE(BitWord(2, 1), BitWord(3, 1));
}

TEST(BitWordTest, RejectsBadInput) {
  EXPECT_THROW(BitWord::parse(""), UsageError);
  EXPECT_THROW(BitWord::parse("012"), UsageError);
  EXPECT_THROW(BitWord::parse(std::string(25, '0')), UsageError);
  EXPECT_THROW(BitWord(3, 8), UsageError);
  EXPECT_THROW(BitWord(0, 0), UsageError);
  EXPECT_THROW(BitWord::parse("01").bit(2), UsageError);
  EXPECT_THROW(flip(BitWord::parse("01"), -1), UsageError);
}

TEST(BitWordTest, ReverseAndFlip) {
  EXPECT_EQ(reverse(BitWord::parse("0011")).to_string(), "1100");
  EXPECT_EQ(reverse(BitWord::parse("010")).to_string(), "010");
  EXPECT_EQ(flip(BitWord::parse("000"), 0).to_string(), "100");
  EXPECT_EQ(flip(BitWord::parse("000"), 2).to_string(), "001");
  EXPECT_EQ(reverse_bits(0b0001, 4), 0b1000u);
}

TEST(BitWordTest, ParityAndPalindromes) {
  EXPECT_EQ(parity(BitWord::parse("0110")), Parity::even);
  EXPECT_EQ(parity(BitWord::parse("0111")), Parity::odd);
  EXPECT_TRUE(is_palindrome(BitWord::parse("0110")));
  EXPECT_TRUE(is_palindrome(BitWord::parse("101")));
  EXPECT_FALSE(is_palindrome(BitWord::parse("100")));
}

// Properties checked against a character-level model.
TEST(BitWordTest, MatchesStringModel) {
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 2000; ++trial) {
    int k = 1 + static_cast<int>(rng() % 24);
    std::string s;
    for (int j = 0; j < k; ++j) s.push_back(rng() & 1 ? '1' : '0');
    BitWord w = BitWord::parse(s);
    std::string r(s.rbegin(), s.rend());
    EXPECT_EQ(reverse(w).to_string(), r);
    EXPECT_EQ(reverse(reverse(w)), w);
    int j = static_cast<int>(rng() % k);
    std::string f = s;
    f[j] = f[j] == '0' ? '1' : '0';
    EXPECT_EQ(flip(w, j).to_string(), f);
    EXPECT_EQ(w.bit(j), s[j] - '0');
    int ones = static_cast<int>(std::count(s.begin(), s.end(), '1'));
    EXPECT_EQ(parity(w), ones % 2 ? Parity::odd : Parity::even);
    EXPECT_EQ(is_palindrome(w), s == r);
  }
}

}  // namespace
}  // namespace pxg
