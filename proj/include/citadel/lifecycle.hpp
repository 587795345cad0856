// Copyright (c) the citadel-sim contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef CITADEL_LIFECYCLE_HPP_
#define CITADEL_LIFECYCLE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "citadel/crypto.hpp"

namespace citadel {

enum class LifecycleState : uint8_t {
  FabricationTest = 0,
  PackagingOem = 1,
  Deployment = 2,
  Recall = 3,
  EndOfLife = 4,  // absorbing
};

const char *lifecycle_name(LifecycleState s);
std::optional<LifecycleState> lifecycle_from_name(const std::string &name);
std::string transition_label(LifecycleState from, LifecycleState to);

// Who may drive a transition: the HSM only at chip birth, the OEM for
// everything after packaging. End users never hold transition authority.
enum class Actor : uint8_t { Hsm = 0, Oem = 1 };

const char *actor_name(Actor a);

enum class DenyReason { NoSuchEdge, WrongActor, BadKey };

struct TransitionDecision {
  bool accepted = false;
  std::optional<DenyReason> reason;
};

struct TransitionRule {
  Actor controller;
  Key256 validation_key{};
};

// The five-stage lifecycle graph with its per-transition 256-bit validation
// keys. Exactly five edges exist; everything else is denied.
class TransitionTable {
 public:
  using Edge = std::pair<LifecycleState, LifecycleState>;

  // Build the canonical edge set with caller-supplied keys (one per edge).
  static TransitionTable with_keys(const std::map<Edge, Key256> &keys);
  // Convenience: derive the five keys deterministically from a seed.
  static TransitionTable from_seed(uint64_t seed);

  static const std::array<std::pair<Edge, Actor>, 5> &canonical_edges();

  const std::map<Edge, TransitionRule> &edges() const { return edges_; }
  const TransitionRule *rule(LifecycleState from, LifecycleState to) const;

  // Pure decision; key comparison always touches all 32 bytes.
  TransitionDecision request_transition(LifecycleState current, LifecycleState target,
                                        const Key256 &presented_key, Actor actor) const;

 private:
  std::map<Edge, TransitionRule> edges_;
};

enum class BootMode { Full, Truncated, RevertPrevious };

enum class AmiStatus : uint8_t { Active = 0, Decommissioned = 1 };

const char *ami_status_name(AmiStatus s);

struct AmiView {
  LifecycleState lifecycle;
  AmiStatus status;
};

// First check of every boot. End-of-life or a decommissioned ledger record
// truncates; a lifecycle out of step with the ledger reverts to the
// ledger's state; otherwise the boot proceeds. No ledger view (unregistered
// chip or no AMI contact mandated) falls through to Full unless the local
// state is already end-of-life.
BootMode boot_mode(LifecycleState stored, const std::optional<AmiView> &ami);

}  // namespace citadel

#endif  // CITADEL_LIFECYCLE_HPP_
