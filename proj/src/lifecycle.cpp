// Copyright (c) the citadel-sim contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "citadel/lifecycle.hpp"

#include <array>
#include <stdexcept>

#include "citadel/rng.hpp"

namespace citadel {

namespace {
constexpr std::array<const char *, 5> kStateNames = {
    "fabrication_test", "packaging_oem", "deployment", "recall", "end_of_life",
};
}

const char *lifecycle_name(LifecycleState s) { return kStateNames[static_cast<size_t>(s)]; }

std::optional<LifecycleState> lifecycle_from_name(const std::string &name) {
  for (size_t i = 0; i < kStateNames.size(); ++i) {
    if (name == kStateNames[i]) {
      return static_cast<LifecycleState>(i);
    }
  }
  return std::nullopt;
}

std::string transition_label(LifecycleState from, LifecycleState to) {
  return std::string(lifecycle_name(from)) + "->" + lifecycle_name(to);
}

const char *actor_name(Actor a) { return a == Actor::Hsm ? "hsm" : "oem"; }

const char *ami_status_name(AmiStatus s) {
  return s == AmiStatus::Active ? "active" : "decommissioned";
}

const std::array<std::pair<TransitionTable::Edge, Actor>, 5> &TransitionTable::canonical_edges() {
  static const std::array<std::pair<Edge, Actor>, 5> kEdges = {{
      {{LifecycleState::FabricationTest, LifecycleState::PackagingOem}, Actor::Hsm},
      {{LifecycleState::PackagingOem, LifecycleState::Deployment}, Actor::Oem},
      {{LifecycleState::Deployment, LifecycleState::Recall}, Actor::Oem},
      {{LifecycleState::Recall, LifecycleState::PackagingOem}, Actor::Oem},  // re-enrollment
      {{LifecycleState::Recall, LifecycleState::EndOfLife}, Actor::Oem},
  }};
  return kEdges;
}

TransitionTable TransitionTable::with_keys(const std::map<Edge, Key256> &keys) {
  TransitionTable t;
  for (const auto &[edge, controller] : canonical_edges()) {
    auto it = keys.find(edge);
    if (it == keys.end()) {
      throw std::invalid_argument("TransitionTable: missing key for edge " +
                                  transition_label(edge.first, edge.second));
    }
    t.edges_[edge] = TransitionRule{controller, it->second};
  }
  return t;
}

TransitionTable TransitionTable::from_seed(uint64_t seed) {
  std::map<Edge, Key256> keys;
  for (const auto &[edge, _] : canonical_edges()) {
    SplitMix64 rng(derive_seed(seed, transition_label(edge.first, edge.second)));
    keys[edge] = rng.next_bytes32();
  }
  return with_keys(keys);
}

const TransitionRule *TransitionTable::rule(LifecycleState from, LifecycleState to) const {
  auto it = edges_.find({from, to});
  return it == edges_.end() ? nullptr : &it->second;
}

TransitionDecision TransitionTable::request_transition(LifecycleState current,
                                                       LifecycleState target,
                                                       const Key256 &presented_key,
                                                       Actor actor) const {
  const TransitionRule *r = rule(current, target);
  if (r == nullptr) {
    return {false, DenyReason::NoSuchEdge};
  }
  if (r->controller != actor) {
    return {false, DenyReason::WrongActor};
  }
  if (!ct_equal(presented_key, r->validation_key)) {
    return {false, DenyReason::BadKey};
  }
  return {true, std::nullopt};
}

BootMode boot_mode(LifecycleState stored, const std::optional<AmiView> &ami) {
  if (stored == LifecycleState::EndOfLife) {
    return BootMode::Truncated;
  }
  if (ami) {
    if (ami->status == AmiStatus::Decommissioned) {
      return BootMode::Truncated;
    }
    if (ami->lifecycle != stored) {
      return BootMode::RevertPrevious;
    }
  }
  return BootMode::Full;
}

}  // namespace citadel
