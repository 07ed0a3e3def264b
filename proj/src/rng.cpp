#include "circech/rng.hpp"

namespace circech {

namespace {
constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kStreamSalt = 0xd1b54a32d192ed03ULL;
}  // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

CounterStream::CounterStream(std::uint64_t master_seed, std::uint64_t stream_index) noexcept
    : key_(mix64(master_seed ^ mix64(stream_index * kStreamSalt + kGoldenGamma))) {}

CounterStream::result_type CounterStream::operator()() noexcept {
  ++counter_;
  return mix64(key_ + counter_ * kGoldenGamma);
}

}  // namespace circech
