// Copyright (c) the citadel-sim contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef CITADEL_OBFUSCATION_HPP_
#define CITADEL_OBFUSCATION_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "citadel/bitvec.hpp"

namespace citadel {

constexpr size_t kDefaultUnlockVectorBits = 512;

struct UnlockVector {
  std::string ip_id;
  BitVec key_bits;
};

// Split an unlock vector into input-width frames, last frame zero-padded on
// the right. Concatenating the frames and truncating to the key length
// reproduces the key.
std::vector<BitVec> fragment_key(const BitVec &key, size_t input_width);

enum class LockMode { Locked, Transition, Unlocked };

struct LockState {
  LockMode mode = LockMode::Locked;
  size_t step = 0;  // frames consumed so far
  bool operator==(const LockState &) const = default;
};

// A state-space-obfuscated IP. The functional model only answers once the
// full frame sequence has been applied in order; any wrong frame drops the
// FSM back to its initial locked state. While locked, step() returns a
// keyed scramble of the input instead of the functional output.
class LockedIpModel {
 public:
  using StepFn = std::function<uint64_t(uint64_t)>;

  LockedIpModel() = default;
  LockedIpModel(std::string ip_id, size_t input_width, const BitVec &unlock_key,
                StepFn functional = nullptr, size_t decoy_states = 3);

  const std::string &ip_id() const { return ip_id_; }
  size_t input_width() const { return input_width_; }
  size_t frame_count() const { return unlock_path_.size(); }
  size_t decoy_states() const { return decoy_states_; }

  LockState apply_frame(const BitVec &frame);
  uint64_t step(uint64_t input) const;
  void relock();
  LockState state() const;
  bool unlocked() const { return unlocked_; }

 private:
  std::string ip_id_;
  size_t input_width_ = 0;
  std::vector<BitVec> unlock_path_;
  StepFn functional_;
  size_t decoy_states_ = 0;
  uint64_t scramble_key_ = 0;
  size_t step_ = 0;
  bool unlocked_ = false;
};

}  // namespace citadel

#endif  // CITADEL_OBFUSCATION_HPP_
