// Copyright (c) the citadel-sim contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef CITADEL_ENVELOPE_HPP_
#define CITADEL_ENVELOPE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "citadel/crypto.hpp"

namespace citadel {

// Sealed asset for off-chip transfer: AES-256-CTR ciphertext under the
// communication key plus a SHA-256 of the plaintext checked on open.
struct SecureEnvelope {
  Nonce128 nonce{};
  std::vector<uint8_t> ciphertext;
  Digest256 digest{};
  bool operator==(const SecureEnvelope &) const = default;
};

SecureEnvelope seal_asset(std::span<const uint8_t> plaintext, const Key256 &comm_key,
                          const Nonce128 &nonce);

// nullopt on integrity failure (wrong key or tampered ciphertext).
std::optional<std::vector<uint8_t>> open_envelope(const SecureEnvelope &env,
                                                  const Key256 &comm_key);

}  // namespace citadel

#endif  // CITADEL_ENVELOPE_HPP_
