#pragma once

#include <optional>

#include "ransim/ue/ue_profile.hpp"

namespace ransim {

class UeAgent : public UeEndpoint {
 public:
  explicit UeAgent(UeProfile profile) : profile_(std::move(profile)) {}

  const UeIdentity& identity() const override { return profile_.identity; }
  const std::string& endpoint() const override { return profile_.ue_id; }

  ChallengeResult on_auth_challenge(const Nonce128& rand, const AuthToken& autn,
                                    std::string_view serving_network) override;
  std::optional<Digest> on_local_challenge(std::uint64_t nonce) override;
  std::optional<KeyHierarchy> current_keys() const override { return keys_; }

  /// Keys agreed in an authentication that happened before the run.
  void install_keys(KeyHierarchy keys) { keys_ = std::move(keys); }

  RegistrationRequest registration_request(std::string_view serving_network) const;

  const UeProfile& profile() const noexcept { return profile_; }
  UeProfile& profile() noexcept { return profile_; }

 private:
  UeProfile profile_;
  std::optional<KeyHierarchy> keys_;
};

}  // namespace ransim
