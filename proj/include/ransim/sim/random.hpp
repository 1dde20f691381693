#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>

namespace ransim {

/// Mixes a scenario seed with a stream label into an engine seed.
std::uint64_t stream_seed(std::uint64_t seed, std::string_view label) noexcept;

/// Deterministic random stream. Draws are computed from raw engine output
/// rather than std:: distributions so sequences are identical on every
/// standard library.
class RandomSource {
 public:
  RandomSource(std::uint64_t seed, std::string_view stream);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, bound). bound must be nonzero.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform in [0, 1) with 53 bits of precision.
  double uniform01();

  double exponential(double rate);

  void fill(std::span<std::uint8_t> out);

  template <std::size_t N>
  std::array<std::uint8_t, N> bytes() {
    std::array<std::uint8_t, N> out{};
    fill(out);
    return out;
  }

  const std::string& stream() const noexcept { return stream_; }

 private:
  std::mt19937_64 engine_;
  std::string stream_;
};

}  // namespace ransim
