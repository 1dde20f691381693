#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ransim {

using Digest = std::array<std::uint8_t, 32>;
using ByteView = std::span<const std::uint8_t>;

inline ByteView as_bytes(std::string_view text) noexcept {
  return {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()};
}

Digest sha256(ByteView data);
inline Digest sha256(std::string_view text) { return sha256(as_bytes(text)); }

Digest hmac_sha256(ByteView key, ByteView message);

std::string to_hex(ByteView bytes);

/// Throws std::invalid_argument on odd length or non-hex characters.
std::vector<std::uint8_t> from_hex(std::string_view hex);

/// Big-endian encoding, used when counters enter a MAC input.
std::array<std::uint8_t, 8> be64(std::uint64_t value) noexcept;

}  // namespace ransim
