// Copyright (c) the citadel-sim contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef CITADEL_VAULT_HPP_
#define CITADEL_VAULT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace citadel {

enum class AssetKind : uint8_t {
  ChipId = 0,
  PufExpectedResponse = 1,
  ObfuscationVector = 2,
  CommKey = 3,
  LifecycleValidationKey = 4,
  FirmwareSignature = 5,
  ScanKey = 6,
  LifecycleState = 7,
  AmiUuid = 8,
};

const char *asset_kind_name(AssetKind k);
std::optional<AssetKind> asset_kind_from_name(const std::string &name);

// Vault entries are addressed by (kind, qualifier); the qualifier carries
// the owning IP id, the lifecycle-transition label, or stays empty for
// chip-global assets.
struct AssetKey {
  AssetKind kind;
  std::string qualifier;
  auto operator<=>(const AssetKey &) const = default;
};

// Access-controlled asset store inside the enclave boundary. The
// end-of-life purge erases everything except the lifecycle state.
class AssetVault {
 public:
  void store(AssetKind kind, const std::string &qualifier, std::vector<uint8_t> value);
  std::optional<std::vector<uint8_t>> fetch(AssetKind kind, const std::string &qualifier = {}) const;
  bool contains(AssetKind kind, const std::string &qualifier = {}) const;
  void erase(AssetKind kind, const std::string &qualifier = {});
  void purge_for_eol();

  std::vector<AssetKey> keys_of_kind(AssetKind kind) const;
  const std::map<AssetKey, std::vector<uint8_t>> &entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

 private:
  std::map<AssetKey, std::vector<uint8_t>> entries_;
};

}  // namespace citadel

#endif  // CITADEL_VAULT_HPP_
