// Copyright (c) the citadel-sim contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef CITADEL_WRAPPER_HPP_
#define CITADEL_WRAPPER_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "citadel/obfuscation.hpp"
#include "citadel/puf.hpp"
#include "citadel/transcript.hpp"

namespace citadel {

enum class BusStatus { Ok, Rejected, UnmappedAddress };

struct BusReadResult {
  BusStatus status = BusStatus::Ok;
  uint64_t value = 0;
};

enum class ScmError { None, NoPufUnit, NoKeyApplier, Rejected };

// Security wrapper around one HOST IP: port-mapped register access for the
// bus, reset gating, and the two SCM satellite hooks (PUF trigger and key
// application). Register access abstracts the IEEE-1500 test wrapper as
// plain peek/poke on a port map.
class SecurityWrapper {
 public:
  using ObserverFn = std::function<std::vector<std::string>()>;

  SecurityWrapper() = default;
  SecurityWrapper(std::string ip_id, Transcript *transcript, ObserverFn observers);

  const std::string &ip_id() const { return ip_id_; }
  bool reset_gated() const { return reset_gated_; }

  void map_register(uint32_t address, uint64_t initial = 0);
  void attach_puf(PufInstance puf) { puf_ = std::move(puf); }
  void attach_key_applier(LockedIpModel *ip) { key_applier_ = ip; }
  bool has_puf() const { return puf_.has_value(); }
  const PufInstance *puf() const { return puf_ ? &*puf_ : nullptr; }
  LockedIpModel *key_applier() const { return key_applier_; }

  BusReadResult bus_read(uint32_t address);
  BusStatus bus_write(uint32_t address, uint64_t value);

  void gate_reset();
  void release_reset();

  // Trigger the embedded MeLPUF cells and stream the signature back over
  // the bus. The transfer is logged with this IP as the source.
  struct PufExtractResult {
    ScmError error = ScmError::None;
    PufResponse response;
  };
  PufExtractResult extract_puf_signature(uint64_t rng_seed);

  struct UnlockOutcome {
    ScmError error = ScmError::None;
    LockState state;
  };
  UnlockOutcome apply_unlock_vector(const std::vector<BitVec> &frames);

  static constexpr size_t kBufferBytes = 64;
  std::array<uint8_t, kBufferBytes> &buffer() { return buffer_; }

 private:
  std::vector<std::string> observers() const;
  void log_bus(const std::vector<uint8_t> &payload, bool from_ip, bool plaintext,
               std::string note, bool rejected = false);

  std::string ip_id_;
  Transcript *transcript_ = nullptr;
  ObserverFn observer_fn_;
  bool reset_gated_ = false;
  std::map<uint32_t, uint64_t> port_map_;
  std::optional<PufInstance> puf_;
  LockedIpModel *key_applier_ = nullptr;
  std::array<uint8_t, kBufferBytes> buffer_{};
};

}  // namespace citadel

#endif  // CITADEL_WRAPPER_HPP_
