// Copyright (c) the citadel-sim contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "citadel/puf.hpp"

#include <cmath>
#include <stdexcept>

#include "citadel/rng.hpp"

namespace citadel {

namespace {

// Hamming positions 1..21 with parity at the powers of two; the 16 data
// positions, in order, carry data bits 0..15 of a segment.
constexpr int kDataPositions[16] = {3, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21};
constexpr int kParityMasks[5] = {1, 2, 4, 8, 16};

uint64_t base_key(const PufInstance &puf) {
  std::vector<uint8_t> buf(puf.chip_entropy.begin(), puf.chip_entropy.end());
  buf.insert(buf.end(), puf.ip_id.begin(), puf.ip_id.end());
  Digest256 d = sha256(buf);
  uint64_t k = 0;
  for (int i = 0; i < 8; ++i) {
    k = (k << 8) | d[static_cast<size_t>(i)];
  }
  return k;
}

uint64_t noise_key(const PufInstance &puf, uint64_t rng_seed) {
  std::vector<uint8_t> buf;
  for (int b = 7; b >= 0; --b) {
    buf.push_back(static_cast<uint8_t>(rng_seed >> (8 * b)));
  }
  buf.insert(buf.end(), puf.ip_id.begin(), puf.ip_id.end());
  static const char tag[] = "noise";
  buf.insert(buf.end(), tag, tag + 5);
  Digest256 d = sha256(buf);
  uint64_t k = 0;
  for (int i = 0; i < 8; ++i) {
    k = (k << 8) | d[static_cast<size_t>(i)];
  }
  return k;
}

// Six parity bits [p1,p2,p4,p8,p16,overall] for one 16-bit data segment.
// `data_bit(j)` is data bit j of the segment.
template <typename BitFn>
std::array<bool, 6> segment_parity(BitFn data_bit) {
  std::array<bool, 6> p{};
  for (int j = 0; j < 16; ++j) {
    if (!data_bit(j)) continue;
    for (int b = 0; b < 5; ++b) {
      if (kDataPositions[j] & kParityMasks[b]) {
        p[static_cast<size_t>(b)] = !p[static_cast<size_t>(b)];
      }
    }
  }
  // Overall parity of the 22-bit codeword: data plus the five Hamming bits.
  bool all = false;
  for (int j = 0; j < 16; ++j) {
    if (data_bit(j)) all = !all;
  }
  for (int b = 0; b < 5; ++b) {
    if (p[static_cast<size_t>(b)]) all = !all;
  }
  p[5] = all;
  return p;
}

}  // namespace

bool puf_well_formed(const PufInstance &puf) {
  return puf.width > 0 && puf.width % kPufSegmentBits == 0 && puf.ber >= 0.0 && puf.ber < 0.5;
}

PufResponse sample_response(const PufInstance &puf, uint64_t rng_seed) {
  if (!puf_well_formed(puf)) {
    throw std::invalid_argument("sample_response: malformed PufInstance");
  }
  uint64_t key = base_key(puf);
  BitVec bits(puf.width);
  for (size_t i = 0; i < puf.width; ++i) {
    bits.set_bit(i, (splitmix64_at(key, i) >> 63) != 0);
  }
  if (puf.ber > 0.0) {
    uint64_t nkey = noise_key(puf, rng_seed);
    // Flip threshold on the raw 64-bit draw; exact for ber = 0.
    auto threshold = static_cast<uint64_t>(std::ldexp(puf.ber, 64));
    for (size_t i = 0; i < puf.width; ++i) {
      if (splitmix64_at(nkey, i) < threshold) {
        bits.flip_bit(i);
      }
    }
  }
  return PufResponse{puf.ip_id, std::move(bits)};
}

BitVec encode_parity(const BitVec &expected) {
  if (expected.size() == 0 || expected.size() % kPufSegmentBits != 0) {
    throw std::invalid_argument("encode_parity: width must be a positive multiple of 16");
  }
  size_t nseg = expected.size() / kPufSegmentBits;
  BitVec parity(nseg * kParityBitsPerSegment);
  for (size_t s = 0; s < nseg; ++s) {
    auto p = segment_parity([&](int j) { return expected.bit(s * kPufSegmentBits + static_cast<size_t>(j)); });
    for (size_t b = 0; b < kParityBitsPerSegment; ++b) {
      parity.set_bit(s * kParityBitsPerSegment + b, p[b]);
    }
  }
  return parity;
}

BitVec encode_parity(const PufResponse &expected) { return encode_parity(expected.bits); }

std::optional<BitVec> decode_correct(const BitVec &noisy, const BitVec &parity) {
  if (noisy.size() == 0 || noisy.size() % kPufSegmentBits != 0) {
    throw std::invalid_argument("decode_correct: width must be a positive multiple of 16");
  }
  size_t nseg = noisy.size() / kPufSegmentBits;
  if (parity.size() != nseg * kParityBitsPerSegment) {
    throw std::invalid_argument("decode_correct: parity length mismatch");
  }
  BitVec corrected = noisy;
  for (size_t s = 0; s < nseg; ++s) {
    auto data_bit = [&](int j) { return corrected.bit(s * kPufSegmentBits + static_cast<size_t>(j)); };
    auto recv_parity = [&](size_t b) { return parity.bit(s * kParityBitsPerSegment + b); };

    auto expect = segment_parity(data_bit);
    int syndrome = 0;
    for (int b = 0; b < 5; ++b) {
      if (expect[static_cast<size_t>(b)] != recv_parity(static_cast<size_t>(b))) {
        syndrome |= kParityMasks[b];
      }
    }
    bool overall_mismatch = expect[5] != recv_parity(5);

    if (syndrome == 0 && !overall_mismatch) {
      continue;  // clean segment
    }
    if (!overall_mismatch) {
      return std::nullopt;  // even error count with nonzero syndrome: double flip
    }
    // Odd error count: a single flip. Syndrome 0 means the overall parity
    // bit itself flipped; a parity-position syndrome means a stored parity
    // bit flipped. Only a data-position syndrome touches the response.
    if (syndrome == 0) {
      continue;
    }
    bool is_data = false;
    for (int j = 0; j < 16; ++j) {
      if (kDataPositions[j] == syndrome) {
        corrected.flip_bit(s * kPufSegmentBits + static_cast<size_t>(j));
        is_data = true;
        break;
      }
    }
    bool is_parity_pos = syndrome == 1 || syndrome == 2 || syndrome == 4 || syndrome == 8 || syndrome == 16;
    if (!is_data && !is_parity_pos) {
      return std::nullopt;  // syndrome points outside the codeword: multi-bit damage
    }
  }
  return corrected;
}

std::optional<PufResponse> decode_correct(const PufResponse &noisy, const BitVec &parity) {
  auto bits = decode_correct(noisy.bits, parity);
  if (!bits) {
    return std::nullopt;
  }
  return PufResponse{noisy.ip_id, std::move(*bits)};
}

void PcmState::enroll(const std::string &ip_id, const PufResponse &expected, BitVec control_signal) {
  Entry e;
  e.control_signal = std::move(control_signal);
  e.expected = expected;
  e.parity = encode_parity(expected.bits);
  entries_[ip_id] = std::move(e);
}

const PcmState::Entry *PcmState::entry(const std::string &ip_id) const {
  auto it = entries_.find(ip_id);
  return it == entries_.end() ? nullptr : &it->second;
}

PcmAuthResult PcmState::authenticate(const std::string &ip_id, const PufResponse &received) const {
  auto it = entries_.find(ip_id);
  if (it == entries_.end()) {
    return PcmAuthResult::UnknownIp;
  }
  const Entry &e = it->second;
  if (received.bits.size() != e.expected.bits.size()) {
    return PcmAuthResult::Fail;
  }
  auto corrected = decode_correct(received.bits, e.parity);
  if (!corrected) {
    return PcmAuthResult::Fail;
  }
  return *corrected == e.expected.bits ? PcmAuthResult::Pass : PcmAuthResult::Fail;
}

ChipIdentity compute_chip_id(const std::vector<PufResponse> &responses) {
  if (responses.empty()) {
    throw std::invalid_argument("compute_chip_id: empty response list");
  }
  BitVec folded = responses.front().bits;
  for (size_t i = 1; i < responses.size(); ++i) {
    if (responses[i].bits.size() != folded.size()) {
      throw std::invalid_argument("compute_chip_id: width mismatch");
    }
    folded ^= responses[i].bits;
  }
  return ChipIdentity{sha256(folded.bytes())};
}

}  // namespace citadel
