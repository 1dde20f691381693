#pragma once

#include <optional>
#include <string>

#include "ransim/protocol.hpp"

namespace ransim::test_support {

/// Minimal USIM-backed endpoint for driving core procedures directly.
class ScriptedUe : public UeEndpoint {
 public:
  ScriptedUe(std::string name, UeIdentity id, RootSecret k)
      : name_(std::move(name)), id_(std::move(id)), usim_{k, 0, 1, {}} {}

  const UeIdentity& identity() const override { return id_; }
  const std::string& endpoint() const override { return name_; }

  ChallengeResult on_auth_challenge(const Nonce128& rand, const AuthToken& autn,
                                    std::string_view serving) override {
    ++challenges;
    last_rand = rand;
    last_autn = autn;
    ChallengeResult r = ue_verify_and_respond(usim_, rand, autn);
    if (r.ok()) keys_ = ue_derive_hierarchy(usim_, rand, serving, id_);
    return r;
  }

  std::optional<Digest> on_local_challenge(std::uint64_t nonce) override {
    if (!keys_) return std::nullopt;
    return local_challenge_proof(keys_->k_nas, nonce, id_.cached_id);
  }

  std::optional<KeyHierarchy> current_keys() const override { return keys_; }

  UsimState& usim() { return usim_; }

  int challenges = 0;
  Nonce128 last_rand{};
  AuthToken last_autn;

 private:
  std::string name_;
  UeIdentity id_;
  UsimState usim_;
  std::optional<KeyHierarchy> keys_;
};

}  // namespace ransim::test_support
