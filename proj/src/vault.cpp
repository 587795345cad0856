// Copyright (c) the citadel-sim contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "citadel/vault.hpp"

#include <array>

namespace citadel {

namespace {
constexpr std::array<const char *, 9> kKindNames = {
    "chip_id",       "puf_expected_response", "obfuscation_vector",
    "comm_key",      "lifecycle_validation_key", "firmware_signature",
    "scan_key",      "lifecycle_state",       "ami_uuid",
};
}

const char *asset_kind_name(AssetKind k) { return kKindNames[static_cast<size_t>(k)]; }

std::optional<AssetKind> asset_kind_from_name(const std::string &name) {
  for (size_t i = 0; i < kKindNames.size(); ++i) {
    if (name == kKindNames[i]) {
      return static_cast<AssetKind>(i);
    }
  }
  return std::nullopt;
}

void AssetVault::store(AssetKind kind, const std::string &qualifier, std::vector<uint8_t> value) {
  entries_[AssetKey{kind, qualifier}] = std::move(value);
}

std::optional<std::vector<uint8_t>> AssetVault::fetch(AssetKind kind,
                                                      const std::string &qualifier) const {
  auto it = entries_.find(AssetKey{kind, qualifier});
  if (it == entries_.end()) {
    return std::nullopt;
  }
  return it->second;
}

bool AssetVault::contains(AssetKind kind, const std::string &qualifier) const {
  return entries_.count(AssetKey{kind, qualifier}) != 0;
}

void AssetVault::erase(AssetKind kind, const std::string &qualifier) {
  entries_.erase(AssetKey{kind, qualifier});
}

void AssetVault::purge_for_eol() {
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (it->first.kind == AssetKind::LifecycleState) {
      ++it;
    } else {
      it = entries_.erase(it);
    }
  }
}

std::vector<AssetKey> AssetVault::keys_of_kind(AssetKind kind) const {
  std::vector<AssetKey> out;
  for (const auto &[key, _] : entries_) {
    if (key.kind == kind) {
      out.push_back(key);
    }
  }
  return out;
}

}  // namespace citadel
