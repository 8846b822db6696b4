#pragma once

#include <cmath>
#include <cstdint>

namespace lorawan::rng {

// Stafford mix13 finalizer, used both as the splitmix64 output function and
// to derive independent stream states from (seed, stream, purpose) tuples.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Counter-based splittable generator (splitmix64). Every device/purpose gets
// its own stream derived from the master seed, so draws are reproducible
// bit-for-bit regardless of scheduling order or platform.
class Stream {
 public:
  Stream() : state_(0) {}
  Stream(std::uint64_t master_seed, std::uint64_t stream_id, std::uint64_t purpose = 0)
      : state_(mix64(mix64(master_seed + kGolden * (stream_id + 1)) ^
                     mix64(purpose + kGolden))) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      std::uint64_t threshold = (0 - bound) % bound;
      while (lo < threshold) {
        x = next_u64();
        m = static_cast<__uint128_t>(x) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  double uniform(double a, double b) { return a + (b - a) * next_double(); }

  bool bernoulli(double p) { return next_double() < p; }

  // Exponential with the given mean; draws never return exactly 0.
  double exponential(double mean) {
    return -std::log1p(-next_double()) * mean;
  }

  // Exponential interarrival quantized to integer microseconds (>= 1).
  std::int64_t exponential_us(double mean_s) {
    double t = exponential(mean_s) * 1e6;
    auto us = static_cast<std::int64_t>(std::llround(t));
    return us > 0 ? us : 1;
  }

 private:
  std::uint64_t state_;
};

}  // namespace lorawan::rng
