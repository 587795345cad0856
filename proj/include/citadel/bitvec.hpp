// Copyright (c) the citadel-sim contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef CITADEL_BITVEC_HPP_
#define CITADEL_BITVEC_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace citadel {

// Fixed-length bit vector with a big-endian byte packing: bit 0 is the MSB
// of byte 0. Unused bits in the last byte are kept at zero so byte-level
// comparison and hashing of two equal vectors always agree.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(size_t nbits) : nbits_(nbits), bytes_((nbits + 7) / 8, 0) {}

  static BitVec from_bytes(const std::vector<uint8_t> &bytes, size_t nbits);
  static BitVec from_hex(const std::string &hex, size_t nbits);

  size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  bool bit(size_t i) const;
  void set_bit(size_t i, bool v);
  void flip_bit(size_t i);

  // Big-endian packed bytes; trailing pad bits are zero.
  const std::vector<uint8_t> &bytes() const { return bytes_; }

  // Bits [start, start+len); reading past the end yields zero bits, which
  // is what frame padding wants.
  BitVec slice(size_t start, size_t len) const;

  BitVec &operator^=(const BitVec &rhs);
  friend BitVec operator^(BitVec lhs, const BitVec &rhs) {
    lhs ^= rhs;
    return lhs;
  }

  bool operator==(const BitVec &rhs) const = default;

  size_t hamming_distance(const BitVec &rhs) const;
  size_t popcount() const;

  std::string to_hex() const;

 private:
  size_t nbits_ = 0;
  std::vector<uint8_t> bytes_;
};

}  // namespace citadel

#endif  // CITADEL_BITVEC_HPP_
