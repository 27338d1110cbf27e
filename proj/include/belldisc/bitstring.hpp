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

#ifndef BELLDISC_BITSTRING_HPP
#define BELLDISC_BITSTRING_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace belldisc {

/// Fixed-length bit vector over F2, packed little-endian into 64-bit words
/// (bit i lives at word i/64, position i%64).
///
/// A Pauli label on N qubits is a BitString of length 2N where qubit n owns
/// the adjacent bit pair (2n, 2n+1) = (Z component, X component), so the
/// per-qubit symbol reads off as a 2-bit mask. Syndromes are BitStrings of
/// length N. All binary operations check that lengths match and throw
/// std::invalid_argument otherwise.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t length);

  static BitString zeros(std::size_t length) { return BitString(length); }
  /// Builds from explicit bits, index 0 first: {1,0} has bit 0 set.
  static BitString from_bits(std::initializer_list<int> bits);
  static BitString from_bits(const std::vector<int> &bits);
  /// Low `length` bits of `value`, bit 0 = least significant bit.
  static BitString from_word(std::uint64_t value, std::size_t length);
  /// Parses the serialization produced by to_hex(). The length is not part
  /// of the string and must be supplied by the caller.
  static BitString from_hex(std::string_view hex, std::size_t length);

  /// Lowercase hex, most significant nibble first, bit 0 = least significant
  /// bit of the value; always ceil(length/4) digits.
  std::string to_hex() const;

  std::size_t length() const { return length_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool value);
  bool is_zero() const;
  std::size_t popcount() const;
  /// Index of the lowest set bit, or length() when the string is zero.
  std::size_t lowest_set_bit() const;

  /// 2-bit symbol of qubit q for a length-2N string, as the label
  /// 2*Z + X in {0=identity, 1=X, 2=Z, 3=Y}.
  unsigned symbol_at(std::size_t qubit) const;

  /// Parity of the bitwise AND with `other` (dot product over F2).
  int dot(const BitString &other) const;

  BitString &operator^=(const BitString &other);
  friend BitString operator^(BitString a, const BitString &b) {
    a ^= b;
    return a;
  }
  friend bool operator==(const BitString &a, const BitString &b) {
    return a.length_ == b.length_ && a.words_ == b.words_;
  }
  friend bool operator!=(const BitString &a, const BitString &b) {
    return !(a == b);
  }

  /// True iff a precedes b reading bits from index 0: the first differing
  /// position holds a 0 in a.
  static bool lex_less(const BitString &a, const BitString &b);

  /// First packed word (valid whenever length <= 64; the packed fast paths
  /// elsewhere rely on this).
  std::uint64_t word0() const { return words_.empty() ? 0 : words_[0]; }
  const std::vector<std::uint64_t> &words() const { return words_; }

  friend BitString pair_swap(const BitString &u);

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;

  void check_same_length(const BitString &other) const;
};

/// Symplectic product u.v = sum over qubits of (uZ*vX + uX*vZ) mod 2.
/// Both strings must have the same even length.
int symplectic_product(const BitString &u, const BitString &v);

/// Applies the pairwise swap P, exchanging the (Z, X) bits of every qubit.
BitString pair_swap(const BitString &u);

}  // namespace belldisc

#endif
