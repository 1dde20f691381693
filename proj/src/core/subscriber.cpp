#include "ransim/core/subscriber.hpp"

#include "ransim/common.hpp"

namespace ransim {

const UeIdentity& SubscriberDatabase::provision(SubscriberRecord record) {
  if (records_.contains(record.supi)) {
    throw Error(ErrorCode::invalid_argument, "duplicate supi: " + record.supi);
  }
  if (record.subscription.allowed_slices.empty()) {
    throw Error(ErrorCode::invalid_argument, "subscriber " + record.supi + " has no allowed slices");
  }
  if (record.home_network.empty()) record.home_network = network_;
  UeIdentity id = conceal_identity(record.supi, network_);
  suci_to_supi_.emplace(id.suci, record.supi);
  const std::string supi = record.supi;
  records_.emplace(supi, std::move(record));
  return identities_.emplace(supi, std::move(id)).first->second;
}

const SubscriberRecord* SubscriberDatabase::find(std::string_view supi) const {
  const auto it = records_.find(supi);
  return it == records_.end() ? nullptr : &it->second;
}

SubscriberRecord* SubscriberDatabase::find_mutable(std::string_view supi) {
  const auto it = records_.find(supi);
  return it == records_.end() ? nullptr : &it->second;
}

const SubscriberRecord* SubscriberDatabase::find_by_suci(std::string_view suci) const {
  const auto it = suci_to_supi_.find(suci);
  return it == suci_to_supi_.end() ? nullptr : find(it->second);
}

std::optional<IssuedVector> SubscriberDatabase::generate_av(std::string_view suci,
                                                            std::string_view serving_network,
                                                            RandomSource& rng) {
  const auto it = suci_to_supi_.find(suci);
  if (it == suci_to_supi_.end()) return std::nullopt;
  SubscriberRecord& rec = records_.at(it->second);
  IssuedVector out;
  out.identity = identities_.at(rec.supi);
  out.av = ransim::generate_av(rec.root_secret, rec.sequence, serving_network, rng);
  out.subscription = rec.subscription;
  return out;
}

}  // namespace ransim
