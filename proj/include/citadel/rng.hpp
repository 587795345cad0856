// Copyright (c) the citadel-sim contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef CITADEL_RNG_HPP_
#define CITADEL_RNG_HPP_

#include <array>
#include <cstdint>
#include <string_view>

namespace citadel {

// SplitMix64: the reference mixer, used both as a sequential generator and
// as a stateless indexed PRF. All randomness in the simulator flows through
// this so runs are reproducible bit for bit across platforms.
uint64_t splitmix64_mix(uint64_t z);

// Stateless value at position `index` of the stream keyed by `key`.
uint64_t splitmix64_at(uint64_t key, uint64_t index);

class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next();
  // Uniform in [0, 1).
  double next_unit();
  // Uniform in [0, n).
  uint64_t next_below(uint64_t n);
  void fill(uint8_t *out, size_t len);
  std::array<uint8_t, 32> next_bytes32();
  std::array<uint8_t, 16> next_bytes16();

 private:
  uint64_t state_;
};

// Per-actor sub-seed: first eight bytes (big-endian) of
// SHA-256(master || label). Keeps independently seeded actors decoupled.
uint64_t derive_seed(uint64_t master, std::string_view label);

}  // namespace citadel

#endif  // CITADEL_RNG_HPP_
