// Copyright (c) the citadel-sim contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "citadel/transcript.hpp"

#include <json.hpp>

#include "citadel/crypto.hpp"

namespace citadel {

const char *channel_name(Channel c) {
  switch (c) {
    case Channel::SystemBus:
      return "system_bus";
    case Channel::BootIface:
      return "boot_iface";
    case Channel::AmiNet:
      return "ami_net";
  }
  return "?";
}

size_t Transcript::append(Channel channel, std::string src, std::string dst,
                          std::vector<uint8_t> payload, bool plaintext,
                          std::vector<std::string> observers, std::string note, bool rejected) {
  TranscriptEvent ev;
  ev.timestamp = ++clock_;
  ev.channel = channel;
  ev.src = std::move(src);
  ev.dst = std::move(dst);
  ev.payload = std::move(payload);
  ev.plaintext = plaintext;
  ev.observers = std::move(observers);
  ev.rejected = rejected;
  ev.note = std::move(note);
  events_.push_back(std::move(ev));
  return events_.size() - 1;
}

std::string Transcript::to_jsonl() const {
  std::string out;
  for (const auto &ev : events_) {
    nlohmann::json j;
    j["t"] = ev.timestamp;
    j["channel"] = channel_name(ev.channel);
    j["src"] = ev.src;
    j["dst"] = ev.dst;
    j["payload_hex"] = hex_encode(ev.payload);
    j["plaintext"] = ev.plaintext;
    j["observers"] = ev.observers;
    j["rejected"] = ev.rejected;
    j["note"] = ev.note;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace citadel
