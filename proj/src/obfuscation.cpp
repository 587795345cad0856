// Copyright (c) the citadel-sim contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "citadel/obfuscation.hpp"

#include <stdexcept>
#include <utility>

#include "citadel/crypto.hpp"
#include "citadel/rng.hpp"

namespace citadel {

std::vector<BitVec> fragment_key(const BitVec &key, size_t input_width) {
  if (input_width == 0) {
    throw std::invalid_argument("fragment_key: input_width must be positive");
  }
  size_t nframes = (key.size() + input_width - 1) / input_width;
  std::vector<BitVec> frames;
  frames.reserve(nframes);
  for (size_t f = 0; f < nframes; ++f) {
    frames.push_back(key.slice(f * input_width, input_width));
  }
  return frames;
}

LockedIpModel::LockedIpModel(std::string ip_id, size_t input_width, const BitVec &unlock_key,
                             StepFn functional, size_t decoy_states)
    : ip_id_(std::move(ip_id)),
      input_width_(input_width),
      unlock_path_(fragment_key(unlock_key, input_width)),
      functional_(std::move(functional)),
      decoy_states_(decoy_states) {
  if (unlock_key.size() == 0) {
    throw std::invalid_argument("LockedIpModel: empty unlock key");
  }
  if (!functional_) {
    functional_ = [](uint64_t x) { return x; };
  }
  std::vector<uint8_t> seed(ip_id_.begin(), ip_id_.end());
  const auto &kb = unlock_key.bytes();
  seed.insert(seed.end(), kb.begin(), kb.end());
  Digest256 d = sha256(seed);
  for (int i = 0; i < 8; ++i) {
    scramble_key_ = (scramble_key_ << 8) | d[static_cast<size_t>(i)];
  }
}

LockState LockedIpModel::apply_frame(const BitVec &frame) {
  if (unlocked_) {
    return state();  // already in the functional space; frames are ignored
  }
  if (frame == unlock_path_[step_]) {
    ++step_;
    if (step_ == unlock_path_.size()) {
      unlocked_ = true;
    }
  } else {
    step_ = 0;  // wrong key: back to the initial obfuscated state
  }
  return state();
}

uint64_t LockedIpModel::step(uint64_t input) const {
  if (unlocked_) {
    return functional_(input);
  }
  // Keyed bijective scramble; deterministic garbage while locked.
  return splitmix64_mix(input ^ scramble_key_) ^ (scramble_key_ * 0x2545f4914f6cdd1dull);
}

void LockedIpModel::relock() {
  unlocked_ = false;
  step_ = 0;
}

LockState LockedIpModel::state() const {
  if (unlocked_) {
    return {LockMode::Unlocked, unlock_path_.size()};
  }
  if (step_ == 0) {
    return {LockMode::Locked, 0};
  }
  return {LockMode::Transition, step_};
}

}  // namespace citadel
