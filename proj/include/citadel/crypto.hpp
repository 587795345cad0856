// Copyright (c) the citadel-sim contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef CITADEL_CRYPTO_HPP_
#define CITADEL_CRYPTO_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace citadel {

using Digest256 = std::array<uint8_t, 32>;
using Key256 = std::array<uint8_t, 32>;
using Nonce128 = std::array<uint8_t, 16>;

Digest256 sha256(std::span<const uint8_t> data);
Digest256 sha256(std::string_view text);

// AES-256 in counter mode; encryption and decryption are the same operation.
std::vector<uint8_t> aes256_ctr(const Key256 &key, const Nonce128 &nonce,
                                std::span<const uint8_t> data);

// Comparison that always touches every byte of both inputs.
bool ct_equal(std::span<const uint8_t> a, std::span<const uint8_t> b);

std::string hex_encode(std::span<const uint8_t> data);
std::vector<uint8_t> hex_decode(std::string_view hex);

}  // namespace citadel

#endif  // CITADEL_CRYPTO_HPP_
