// Copyright (c) the citadel-sim contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "citadel/rng.hpp"

#include <vector>

#include "citadel/crypto.hpp"

namespace citadel {

namespace {
constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ull;
}

uint64_t splitmix64_mix(uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

uint64_t splitmix64_at(uint64_t key, uint64_t index) {
  return splitmix64_mix(key + (index + 1) * kGolden);
}

uint64_t SplitMix64::next() {
  state_ += kGolden;
  return splitmix64_mix(state_);
}

double SplitMix64::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

uint64_t SplitMix64::next_below(uint64_t n) {
  return n == 0 ? 0 : next() % n;
}

void SplitMix64::fill(uint8_t *out, size_t len) {
  size_t i = 0;
  while (i < len) {
    uint64_t v = next();
    for (int b = 7; b >= 0 && i < len; --b) {
      out[i++] = static_cast<uint8_t>(v >> (8 * b));
    }
  }
}

std::array<uint8_t, 32> SplitMix64::next_bytes32() {
  std::array<uint8_t, 32> out{};
  fill(out.data(), out.size());
  return out;
}

std::array<uint8_t, 16> SplitMix64::next_bytes16() {
  std::array<uint8_t, 16> out{};
  fill(out.data(), out.size());
  return out;
}

uint64_t derive_seed(uint64_t master, std::string_view label) {
  std::vector<uint8_t> buf;
  buf.reserve(8 + label.size());
  for (int b = 7; b >= 0; --b) {
    buf.push_back(static_cast<uint8_t>(master >> (8 * b)));
  }
  buf.insert(buf.end(), label.begin(), label.end());
  Digest256 d = sha256(buf);
  uint64_t out = 0;
  for (int i = 0; i < 8; ++i) {
    out = (out << 8) | d[static_cast<size_t>(i)];
  }
  return out;
}

}  // namespace citadel
