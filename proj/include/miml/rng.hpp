#pragma once

#include <cstdint>

namespace miml {

// Counter-based random streams (Philox4x32-10). Every stream is addressed by
// (seed, replication, purpose, substream), so any part of a simulation can be
// regenerated independently and in parallel with bit-identical results: no
// stream ever depends on how many draws another stream consumed.
enum class Purpose : std::uint32_t {
  Generic = 0,
  Dataset = 1,    // substream = regeneration attempt
  Posterior = 2,  // substream = imputation index d
  Imputation = 3, // substream = imputation index d
  Oracle = 9,     // Monte Carlo oracles in tests
};

struct Philox4x32Block {
  std::uint32_t w[4];
};

// One Philox4x32-10 block: 10 rounds over a 128-bit counter with a 64-bit key.
Philox4x32Block philox4x32(const std::uint32_t counter[4],
                           const std::uint32_t key[2]);

class Stream {
 public:
  Stream(std::uint64_t seed, std::uint32_t replication, Purpose purpose,
         std::uint32_t substream = 0);

  // Uniform on the open interval (0, 1).
  double uniform();
  // Standard normal via Box-Muller (pairs cached).
  double normal();
  // Gamma(shape, scale=1), shape > 0 (Marsaglia-Tsang squeeze).
  double gamma(double shape);
  // Chi-square with df > 0 degrees of freedom.
  double chi_square(double df);

  std::uint64_t next_u64();

 private:
  std::uint32_t next_u32();

  std::uint32_t key_[2];
  std::uint32_t prefix_[3];  // substream, purpose, replication
  std::uint64_t block_ = 0;
  Philox4x32Block buf_{};
  int buf_pos_ = 4;  // empty
  bool have_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace miml
