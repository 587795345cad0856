// Copyright (c) the citadel-sim contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "citadel/bitvec.hpp"

#include <bit>
#include <stdexcept>

#include "citadel/crypto.hpp"

namespace citadel {

BitVec BitVec::from_bytes(const std::vector<uint8_t> &bytes, size_t nbits) {
  if (bytes.size() != (nbits + 7) / 8) {
    throw std::invalid_argument("BitVec::from_bytes: byte count does not match bit length");
  }
  BitVec v(nbits);
  v.bytes_ = bytes;
  // Force pad bits to zero.
  if (nbits % 8 != 0) {
    v.bytes_.back() &= static_cast<uint8_t>(0xffu << (8 - nbits % 8));
  }
  return v;
}

BitVec BitVec::from_hex(const std::string &hex, size_t nbits) {
  return from_bytes(hex_decode(hex), nbits);
}

bool BitVec::bit(size_t i) const {
  if (i >= nbits_) {
    throw std::out_of_range("BitVec::bit");
  }
  return (bytes_[i / 8] >> (7 - i % 8)) & 1u;
}

void BitVec::set_bit(size_t i, bool v) {
  if (i >= nbits_) {
    throw std::out_of_range("BitVec::set_bit");
  }
  uint8_t mask = static_cast<uint8_t>(1u << (7 - i % 8));
  if (v) {
    bytes_[i / 8] |= mask;
  } else {
    bytes_[i / 8] &= static_cast<uint8_t>(~mask);
  }
}

void BitVec::flip_bit(size_t i) { set_bit(i, !bit(i)); }

BitVec BitVec::slice(size_t start, size_t len) const {
  BitVec out(len);
  for (size_t i = 0; i < len; ++i) {
    size_t src = start + i;
    if (src < nbits_ && bit(src)) {
      out.set_bit(i, true);
    }
  }
  return out;
}

BitVec &BitVec::operator^=(const BitVec &rhs) {
  if (nbits_ != rhs.nbits_) {
    throw std::invalid_argument("BitVec xor: length mismatch");
  }
  for (size_t i = 0; i < bytes_.size(); ++i) {
    bytes_[i] ^= rhs.bytes_[i];
  }
  return *this;
}

size_t BitVec::hamming_distance(const BitVec &rhs) const {
  if (nbits_ != rhs.nbits_) {
    throw std::invalid_argument("BitVec hamming_distance: length mismatch");
  }
  size_t d = 0;
  for (size_t i = 0; i < bytes_.size(); ++i) {
    d += std::popcount(static_cast<unsigned>(bytes_[i] ^ rhs.bytes_[i]));
  }
  return d;
}

size_t BitVec::popcount() const {
  size_t n = 0;
  for (uint8_t b : bytes_) {
    n += std::popcount(static_cast<unsigned>(b));
  }
  return n;
}

std::string BitVec::to_hex() const { return hex_encode(bytes_); }

}  // namespace citadel
