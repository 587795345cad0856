// Copyright (c) the citadel-sim contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef CITADEL_PUF_HPP_
#define CITADEL_PUF_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "citadel/bitvec.hpp"
#include "citadel/crypto.hpp"

namespace citadel {

constexpr size_t kPufSegmentBits = 16;
constexpr size_t kParityBitsPerSegment = 6;

// One distributed memory-element PUF, anchored to an IP. The die-unique
// doping variation is modeled by chip_entropy; the noiseless response is a
// pure function of (chip_entropy, ip_id), and each sampled bit flips
// independently with probability `ber` under the caller's noise seed.
struct PufInstance {
  std::string ip_id;
  size_t width = 256;  // must be a positive multiple of 16
  std::array<uint8_t, 32> chip_entropy{};
  double ber = 0.0;  // in [0, 0.5)
};

struct PufResponse {
  std::string ip_id;
  BitVec bits;
};

enum class PcmAuthResult { Pass, Fail, UnknownIp };

struct ChipIdentity {
  Digest256 digest{};
  bool operator==(const ChipIdentity &) const = default;
  std::string to_hex() const { return hex_encode(digest); }
};

bool puf_well_formed(const PufInstance &puf);

// Sample the PUF. With ber = 0 the result depends only on
// (chip_entropy, ip_id, width); rng_seed drives the noise alone.
PufResponse sample_response(const PufInstance &puf, uint64_t rng_seed);

// Extended Hamming SEC-DED(22,16) parity, six bits per 16-bit segment,
// segments concatenated in order. Parity bit order within a segment:
// [p1, p2, p4, p8, p16, overall].
BitVec encode_parity(const BitVec &expected);
BitVec encode_parity(const PufResponse &expected);

// Correct a noisy response against enrollment parity. Any single flip in a
// 22-bit segment (data or parity) is repaired; a detected double flip in
// any segment makes the whole response uncorrectable (nullopt).
std::optional<BitVec> decode_correct(const BitVec &noisy, const BitVec &parity);
std::optional<PufResponse> decode_correct(const PufResponse &noisy, const BitVec &parity);

// PUF Control Module buffer: per-IP control signal, golden response, parity.
class PcmState {
 public:
  struct Entry {
    BitVec control_signal;
    PufResponse expected;
    BitVec parity;
  };

  void enroll(const std::string &ip_id, const PufResponse &expected, BitVec control_signal = {});
  bool enrolled(const std::string &ip_id) const { return entries_.count(ip_id) != 0; }
  const Entry *entry(const std::string &ip_id) const;
  const std::map<std::string, Entry> &entries() const { return entries_; }
  void clear() { entries_.clear(); }

  // Pass iff error correction succeeds and the corrected bits equal the
  // golden response exactly.
  PcmAuthResult authenticate(const std::string &ip_id, const PufResponse &received) const;

 private:
  std::map<std::string, Entry> entries_;
};

// ChipID = SHA-256 over the XOR-fold of all responses (big-endian bytes).
// Throws std::invalid_argument on an empty list or mismatched widths.
ChipIdentity compute_chip_id(const std::vector<PufResponse> &responses);

}  // namespace citadel

#endif  // CITADEL_PUF_HPP_
