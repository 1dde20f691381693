#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ransim {

enum class NfKind { amf, ausf, udm, smf, pcf, upf, seaf };

std::string_view to_string(NfKind kind) noexcept;

struct NfInstance {
  NfKind kind = NfKind::amf;
  std::string id;
  std::int64_t load = 0;  // requests in flight
};

class NfRegistry {
 public:
  /// Throws Error(invalid_argument) on a duplicate id.
  void add(NfKind kind, std::string id);

  /// Least-loaded instance of `kind`, ties broken by the smallest id.
  /// Throws Error(nf_unavailable) if no instance exists.
  const std::string& select_nf(NfKind kind) const;

  void acquire(std::string_view id);
  void release(std::string_view id);

  std::int64_t load(std::string_view id) const;
  const std::vector<NfInstance>& instances() const noexcept { return instances_; }

 private:
  NfInstance& at(std::string_view id);
  const NfInstance& at(std::string_view id) const;

  std::vector<NfInstance> instances_;
};

}  // namespace ransim
