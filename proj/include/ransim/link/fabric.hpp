#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ransim/link/backhaul_link.hpp"
#include "ransim/sim/kernel.hpp"

namespace ransim {

/// Which stretch of the topology a message crosses.
enum class Hop {
  radio,          // UE <-> RAN
  backhaul_up,    // RAN -> core
  backhaul_down,  // core -> RAN
  core_internal,  // NF <-> NF inside one core
  home_up,        // serving core -> home network (roaming referral)
  home_down,      // home network -> serving core
};

enum class Medium { radio, backhaul, core, home_link, local };

std::string_view to_string(Medium medium) noexcept;

using AccountId = std::uint32_t;

/// Backhaul usage attributed to one registration attempt or one class of
/// background traffic.
struct AccountTotals {
  std::string label;
  std::uint64_t messages = 0;
  std::uint64_t bytes = 0;
};

struct MessageRecord {
  SimTime time = 0;
  std::string src;
  std::string dst;
  std::string type;
  std::uint64_t bytes = 0;
  Medium medium = Medium::radio;
  AccountId account = 0;
  bool delivered = true;
};

struct FabricConfig {
  SimTime radio_latency = 5;
  SimTime core_hop_latency = 1;
  /// Core NFs share the RAN host; backhaul hops become local hops.
  bool colocated = false;
  std::uint64_t default_message_bytes = 512;
  std::map<std::string, std::uint64_t, std::less<>> message_bytes;
  bool record_messages = true;
};

/// Delivers control messages between entities. Backhaul hops go through
/// the BackhaulLink (queuing, loss, outages); every backhaul byte is
/// attributed to an account.
class Fabric {
 public:
  static constexpr AccountId kUnattributed = 0;

  Fabric(Kernel& kernel, FabricConfig config, BackhaulLink& backhaul, BackhaulLink& home_link);

  AccountId open_account(std::string label);

  /// Returns false if the message was dropped; the handler then never runs.
  bool send(Hop hop, std::string_view src, std::string_view dst, std::string_view type,
            AccountId account, Kernel::Handler on_delivery);

  std::uint64_t message_size(std::string_view type) const;

  const AccountTotals& account(AccountId id) const { return accounts_.at(id); }
  const std::vector<AccountTotals>& accounts() const noexcept { return accounts_; }
  const std::vector<MessageRecord>& messages() const noexcept { return messages_; }

  /// One line per message: timestamp,src,dst,message-type,bytes
  void write_trace(std::ostream& out) const;

  Kernel& kernel() noexcept { return kernel_; }
  BackhaulLink& backhaul() noexcept { return backhaul_; }
  const FabricConfig& config() const noexcept { return config_; }

 private:
  Kernel& kernel_;
  FabricConfig config_;
  BackhaulLink& backhaul_;
  BackhaulLink& home_link_;
  RandomSource backhaul_rng_;
  RandomSource home_rng_;
  std::vector<AccountTotals> accounts_;
  std::vector<MessageRecord> messages_;
};

}  // namespace ransim
