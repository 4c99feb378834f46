#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace qkd {

// Deterministic random stream. All draws go through hand-rolled conversions
// (not std:: distributions) so that a given seed produces the same sequence
// on every platform and compiler.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  // Derives an independent stream; same (seed, name) always gives the same
  // substream. Used to decouple draw order between unrelated consumers.
  Rng substream(std::string_view name) const;

  uint64_t next_u64();
  double uniform();                  // [0, 1)
  uint64_t uniform_int(uint64_t n);  // [0, n), n > 0
  bool bernoulli(double p);
  double exponential(double mean);
  void fill_bytes(std::span<uint8_t> out);
  int coin() { return bernoulli(0.5) ? 1 : 0; }

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  uint64_t state_[4];  // xoshiro256**
};

// Non-deterministic bits from the operating system, for "secure" basis mode.
class SecureRandom {
 public:
  int coin();
  uint64_t next_u64();
};

uint64_t splitmix64(uint64_t& state);
uint64_t fnv1a64(std::string_view s);

}  // namespace qkd
