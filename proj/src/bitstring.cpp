// Copyright 2026 The belldisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "belldisc/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace belldisc {

namespace {
constexpr std::uint64_t kEvenBits = 0x5555555555555555ULL;

std::size_t word_count(std::size_t length) { return (length + 63) / 64; }

int hex_digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

BitString::BitString(std::size_t length)
    : length_(length), words_(word_count(length), 0) {}

BitString BitString::from_bits(std::initializer_list<int> bits) {
  BitString out(bits.size());
  std::size_t i = 0;
  for (int b : bits) out.set(i++, b != 0);
  return out;
}

BitString BitString::from_bits(const std::vector<int> &bits) {
  BitString out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) out.set(i, bits[i] != 0);
  return out;
}

BitString BitString::from_word(std::uint64_t value, std::size_t length) {
  if (length > 64) throw std::invalid_argument("from_word: length > 64");
  BitString out(length);
  if (length > 0) {
    std::uint64_t mask =
        length == 64 ? ~0ULL : ((std::uint64_t{1} << length) - 1);
    out.words_[0] = value & mask;
  }
  return out;
}

BitString BitString::from_hex(std::string_view hex, std::size_t length) {
  BitString out(length);
  std::size_t expected_digits = (length + 3) / 4;
  if (hex.size() != expected_digits)
    throw std::invalid_argument("from_hex: digit count does not match length");
  for (std::size_t d = 0; d < hex.size(); ++d) {
    int v = hex_digit_value(hex[hex.size() - 1 - d]);
    if (v < 0) throw std::invalid_argument("from_hex: invalid hex digit");
    for (int b = 0; b < 4; ++b) {
      std::size_t i = 4 * d + b;
      if (v & (1 << b)) {
        if (i >= length)
          throw std::invalid_argument("from_hex: set bit beyond length");
        out.set(i, true);
      }
    }
  }
  return out;
}

std::string BitString::to_hex() const {
  std::size_t digits = (length_ + 3) / 4;
  std::string out(digits, '0');
  static const char *kDigits = "0123456789abcdef";
  for (std::size_t d = 0; d < digits; ++d) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      std::size_t i = 4 * d + b;
      if (i < length_ && get(i)) v |= 1 << b;
    }
    out[digits - 1 - d] = kDigits[v];
  }
  return out;
}

bool BitString::get(std::size_t i) const {
  if (i >= length_) throw std::out_of_range("BitString::get");
  return (words_[i / 64] >> (i % 64)) & 1;
}

void BitString::set(std::size_t i, bool value) {
  if (i >= length_) throw std::out_of_range("BitString::set");
  std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value)
    words_[i / 64] |= mask;
  else
    words_[i / 64] &= ~mask;
}

bool BitString::is_zero() const {
  for (std::uint64_t w : words_)
    if (w != 0) return false;
  return true;
}

std::size_t BitString::popcount() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

std::size_t BitString::lowest_set_bit() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0)
      return 64 * w + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return length_;
}

unsigned BitString::symbol_at(std::size_t qubit) const {
  std::size_t i = 2 * qubit;
  if (i + 1 >= length_) throw std::out_of_range("BitString::symbol_at");
  unsigned z = get(i) ? 1u : 0u;
  unsigned x = get(i + 1) ? 1u : 0u;
  return 2 * z + x;
}

int BitString::dot(const BitString &other) const {
  check_same_length(other);
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w)
    acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

BitString &BitString::operator^=(const BitString &other) {
  check_same_length(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitString::lex_less(const BitString &a, const BitString &b) {
  a.check_same_length(b);
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff != 0) {
      std::uint64_t lowest = diff & (~diff + 1);
      return (a.words_[w] & lowest) == 0;
    }
  }
  return false;
}

void BitString::check_same_length(const BitString &other) const {
  if (length_ != other.length_)
    throw std::invalid_argument("BitString length mismatch");
}

int symplectic_product(const BitString &u, const BitString &v) {
  if (u.length() != v.length())
    throw std::invalid_argument("symplectic_product: length mismatch");
  if (u.length() % 2 != 0)
    throw std::invalid_argument("symplectic_product: odd length");
  int acc = 0;
  const auto &uw = u.words();
  const auto &vw = v.words();
  for (std::size_t w = 0; w < uw.size(); ++w) {
    std::uint64_t zx = (uw[w] & kEvenBits) & ((vw[w] >> 1) & kEvenBits);
    std::uint64_t xz = ((uw[w] >> 1) & kEvenBits) & (vw[w] & kEvenBits);
    acc ^= (std::popcount(zx) + std::popcount(xz)) & 1;
  }
  return acc;
}

BitString pair_swap(const BitString &u) {
  if (u.length() % 2 != 0)
    throw std::invalid_argument("pair_swap: odd length");
  BitString out = u;
  for (auto &word : out.words_)
    word = ((word & kEvenBits) << 1) | ((word >> 1) & kEvenBits);
  return out;
}

}  // namespace belldisc
