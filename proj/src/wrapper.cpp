// Copyright (c) the citadel-sim contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "citadel/wrapper.hpp"

#include <utility>

namespace citadel {

namespace {
const char *kEnclaveName = "citadel";

std::vector<uint8_t> be64_bytes(uint64_t v) {
  std::vector<uint8_t> out(8);
  for (int i = 0; i < 8; ++i) {
    out[static_cast<size_t>(i)] = static_cast<uint8_t>(v >> (8 * (7 - i)));
  }
  return out;
}
}  // namespace

SecurityWrapper::SecurityWrapper(std::string ip_id, Transcript *transcript, ObserverFn observers)
    : ip_id_(std::move(ip_id)), transcript_(transcript), observer_fn_(std::move(observers)) {}

void SecurityWrapper::map_register(uint32_t address, uint64_t initial) {
  port_map_[address] = initial;
}

std::vector<std::string> SecurityWrapper::observers() const {
  return observer_fn_ ? observer_fn_() : std::vector<std::string>{};
}

void SecurityWrapper::log_bus(const std::vector<uint8_t> &payload, bool from_ip, bool plaintext,
                              std::string note, bool rejected) {
  if (!transcript_) return;
  std::string src = from_ip ? ip_id_ : kEnclaveName;
  std::string dst = from_ip ? kEnclaveName : ip_id_;
  transcript_->append(Channel::SystemBus, std::move(src), std::move(dst),
                      rejected ? std::vector<uint8_t>{} : payload, plaintext, observers(),
                      std::move(note), rejected);
}

BusReadResult SecurityWrapper::bus_read(uint32_t address) {
  if (reset_gated_) {
    log_bus({}, true, false, "bus-read@" + std::to_string(address), /*rejected=*/true);
    return {BusStatus::Rejected, 0};
  }
  auto it = port_map_.find(address);
  if (it == port_map_.end()) {
    return {BusStatus::UnmappedAddress, 0};
  }
  log_bus(be64_bytes(it->second), true, true, "bus-read@" + std::to_string(address));
  return {BusStatus::Ok, it->second};
}

BusStatus SecurityWrapper::bus_write(uint32_t address, uint64_t value) {
  if (reset_gated_) {
    log_bus({}, false, false, "bus-write@" + std::to_string(address), /*rejected=*/true);
    return BusStatus::Rejected;
  }
  auto it = port_map_.find(address);
  if (it == port_map_.end()) {
    return BusStatus::UnmappedAddress;
  }
  it->second = value;
  log_bus(be64_bytes(value), false, true, "bus-write@" + std::to_string(address));
  return BusStatus::Ok;
}

void SecurityWrapper::gate_reset() { reset_gated_ = true; }

void SecurityWrapper::release_reset() { reset_gated_ = false; }

SecurityWrapper::PufExtractResult SecurityWrapper::extract_puf_signature(uint64_t rng_seed) {
  if (!puf_) {
    return {ScmError::NoPufUnit, {}};
  }
  if (reset_gated_) {
    log_bus({}, true, false, "puf-extract", /*rejected=*/true);
    return {ScmError::Rejected, {}};
  }
  PufResponse resp = sample_response(*puf_, rng_seed);
  log_bus(resp.bits.bytes(), true, true, "puf-extract");
  return {ScmError::None, std::move(resp)};
}

SecurityWrapper::UnlockOutcome SecurityWrapper::apply_unlock_vector(
    const std::vector<BitVec> &frames) {
  if (!key_applier_) {
    return {ScmError::NoKeyApplier, {}};
  }
  if (reset_gated_) {
    log_bus({}, false, false, "key-frame", /*rejected=*/true);
    return {ScmError::Rejected, key_applier_->state()};
  }
  LockState st = key_applier_->state();
  for (const auto &frame : frames) {
    log_bus(frame.bytes(), false, true, "key-frame");
    st = key_applier_->apply_frame(frame);
  }
  return {ScmError::None, st};
}

}  // namespace citadel
