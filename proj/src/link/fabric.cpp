#include "ransim/link/fabric.hpp"

#include <ostream>

namespace ransim {

std::string_view to_string(Medium medium) noexcept {
  switch (medium) {
    case Medium::radio: return "radio";
    case Medium::backhaul: return "backhaul";
    case Medium::core: return "core";
    case Medium::home_link: return "home-link";
    case Medium::local: return "local";
  }
  return "?";
}

Fabric::Fabric(Kernel& kernel, FabricConfig config, BackhaulLink& backhaul, BackhaulLink& home_link)
    : kernel_(kernel),
      config_(std::move(config)),
      backhaul_(backhaul),
      home_link_(home_link),
      backhaul_rng_(kernel.seeded_random("backhaul")),
      home_rng_(kernel.seeded_random("home-link")) {
  accounts_.push_back(AccountTotals{"unattributed"});
}

AccountId Fabric::open_account(std::string label) {
  accounts_.push_back(AccountTotals{std::move(label)});
  return static_cast<AccountId>(accounts_.size() - 1);
}

std::uint64_t Fabric::message_size(std::string_view type) const {
  const auto it = config_.message_bytes.find(type);
  return it == config_.message_bytes.end() ? config_.default_message_bytes : it->second;
}

bool Fabric::send(Hop hop, std::string_view src, std::string_view dst, std::string_view type,
                  AccountId account, Kernel::Handler on_delivery) {
  const SimTime now = kernel_.now();
  const std::uint64_t size = message_size(type);

  Medium medium = Medium::radio;
  SimTime deliver_at = now;
  bool delivered = true;

  auto over_link = [&](BackhaulLink& link, RandomSource& rng, Direction dir) {
    const Transmission t = link.transmit(dir, size, now, rng);
    delivered = t.delivered;
    deliver_at = t.deliver_at;
  };

  switch (hop) {
    case Hop::radio:
      medium = Medium::radio;
      deliver_at = now + config_.radio_latency;
      break;
    case Hop::core_internal:
      medium = Medium::core;
      deliver_at = now + config_.core_hop_latency;
      break;
    case Hop::backhaul_up:
    case Hop::backhaul_down:
      if (config_.colocated) {
        medium = Medium::local;
        deliver_at = now + config_.core_hop_latency;
      } else {
        medium = Medium::backhaul;
        over_link(backhaul_, backhaul_rng_,
                  hop == Hop::backhaul_up ? Direction::uplink : Direction::downlink);
      }
      break;
    case Hop::home_up:
    case Hop::home_down:
      // A core on the RAN host reaches home networks over the backhaul.
      if (config_.colocated) {
        medium = Medium::backhaul;
        over_link(backhaul_, backhaul_rng_,
                  hop == Hop::home_up ? Direction::uplink : Direction::downlink);
      } else {
        medium = Medium::home_link;
        over_link(home_link_, home_rng_,
                  hop == Hop::home_up ? Direction::uplink : Direction::downlink);
      }
      break;
  }

  if (medium == Medium::backhaul) {
    auto& acct = accounts_.at(account);
    acct.messages += 1;
    acct.bytes += size;
  }
  if (config_.record_messages) {
    messages_.push_back(MessageRecord{now, std::string(src), std::string(dst), std::string(type),
                                      size, medium, account, delivered});
  }
  if (!delivered) return false;
  kernel_.schedule_at(deliver_at, std::string(dst), std::string(type), std::move(on_delivery));
  return true;
}

void Fabric::write_trace(std::ostream& out) const {
  for (const auto& m : messages_) {
    out << m.time << ',' << m.src << ',' << m.dst << ',' << m.type << ',' << m.bytes << '\n';
  }
}

}  // namespace ransim
