// Copyright (c) the citadel-sim contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef CITADEL_TRANSCRIPT_HPP_
#define CITADEL_TRANSCRIPT_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace citadel {

enum class Channel { SystemBus, BootIface, AmiNet };

const char *channel_name(Channel c);

// One observed bus or network event. `observers` lists the parties other
// than the endpoints that could see the payload at that instant (ungated
// wrappers on the bus; the network tap for AmiNet). `rejected` marks a
// transaction bounced by reset gating.
struct TranscriptEvent {
  uint64_t timestamp = 0;
  Channel channel = Channel::SystemBus;
  std::string src;
  std::string dst;
  std::vector<uint8_t> payload;
  bool plaintext = false;
  std::vector<std::string> observers;
  bool rejected = false;
  std::string note;
};

// Append-only event log with a strictly increasing logical clock. This is
// the substrate every scenario assertion runs against.
class Transcript {
 public:
  // Returns the index of the appended event.
  size_t append(Channel channel, std::string src, std::string dst, std::vector<uint8_t> payload,
                bool plaintext, std::vector<std::string> observers = {}, std::string note = {},
                bool rejected = false);

  const std::vector<TranscriptEvent> &events() const { return events_; }
  size_t size() const { return events_.size(); }
  const TranscriptEvent &at(size_t i) const { return events_.at(i); }

  std::string to_jsonl() const;

 private:
  std::vector<TranscriptEvent> events_;
  uint64_t clock_ = 0;
};

}  // namespace citadel

#endif  // CITADEL_TRANSCRIPT_HPP_
