// Copyright (c) the citadel-sim contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "citadel/envelope.hpp"

namespace citadel {

SecureEnvelope seal_asset(std::span<const uint8_t> plaintext, const Key256 &comm_key,
                          const Nonce128 &nonce) {
  SecureEnvelope env;
  env.nonce = nonce;
  env.ciphertext = aes256_ctr(comm_key, nonce, plaintext);
  env.digest = sha256(plaintext);
  return env;
}

std::optional<std::vector<uint8_t>> open_envelope(const SecureEnvelope &env,
                                                  const Key256 &comm_key) {
  std::vector<uint8_t> plain = aes256_ctr(comm_key, env.nonce, env.ciphertext);
  Digest256 d = sha256(plain);
  if (!ct_equal(d, env.digest)) {
    return std::nullopt;
  }
  return plain;
}

}  // namespace citadel
