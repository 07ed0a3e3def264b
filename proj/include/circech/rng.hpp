#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

namespace circech {

// Counter-based random stream. Output j of stream (seed, index) is a SplitMix64
// finaliser applied to key(seed, index) + (j + 1) * golden_gamma, so any trial's
// stream can be reconstructed without replaying the others.
class CounterStream {
 public:
  using result_type = std::uint64_t;

  static constexpr std::string_view kGeneratorId = "splitmix64-counter/v1";

  CounterStream(std::uint64_t master_seed, std::uint64_t stream_index) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  // Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace circech
