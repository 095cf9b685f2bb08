#include "miml/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace miml {

namespace {

constexpr std::uint32_t kPhiloxW32A = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW32B = 0xBB67AE85u;
constexpr std::uint32_t kPhiloxM4x32A = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM4x32B = 0xCD9E8D57u;

inline std::uint32_t mulhilo(std::uint32_t a, std::uint32_t b,
                             std::uint32_t *hi) {
  std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  *hi = static_cast<std::uint32_t>(p >> 32);
  return static_cast<std::uint32_t>(p);
}

}  // namespace

Philox4x32Block philox4x32(const std::uint32_t counter[4],
                           const std::uint32_t key[2]) {
  std::uint32_t c0 = counter[0], c1 = counter[1], c2 = counter[2],
                c3 = counter[3];
  std::uint32_t k0 = key[0], k1 = key[1];
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, hi1;
    std::uint32_t lo0 = mulhilo(kPhiloxM4x32A, c0, &hi0);
    std::uint32_t lo1 = mulhilo(kPhiloxM4x32B, c2, &hi1);
    std::uint32_t n0 = hi1 ^ c1 ^ k0;
    std::uint32_t n1 = lo1;
    std::uint32_t n2 = hi0 ^ c3 ^ k1;
    std::uint32_t n3 = lo0;
    c0 = n0;
    c1 = n1;
    c2 = n2;
    c3 = n3;
    k0 += kPhiloxW32A;
    k1 += kPhiloxW32B;
  }
  return Philox4x32Block{{c0, c1, c2, c3}};
}

Stream::Stream(std::uint64_t seed, std::uint32_t replication, Purpose purpose,
               std::uint32_t substream) {
  key_[0] = static_cast<std::uint32_t>(seed);
  key_[1] = static_cast<std::uint32_t>(seed >> 32);
  prefix_[0] = substream;
  prefix_[1] = static_cast<std::uint32_t>(purpose);
  prefix_[2] = replication;
}

std::uint32_t Stream::next_u32() {
  if (buf_pos_ >= 4) {
    // Counter words: (block, substream, purpose, replication). Only the block
    // index advances as the stream is consumed; the other three words address
    // the stream itself.
    const std::uint32_t counter[4] = {static_cast<std::uint32_t>(block_),
                                      prefix_[0], prefix_[1], prefix_[2]};
    buf_ = philox4x32(counter, key_);
    ++block_;
    buf_pos_ = 0;
  }
  return buf_.w[buf_pos_++];
}

std::uint64_t Stream::next_u64() {
  std::uint64_t hi = next_u32();
  std::uint64_t lo = next_u32();
  return (hi << 32) | lo;
}

double Stream::uniform() {
  // 53 random bits, offset by half a ULP so the result is strictly inside
  // (0, 1); safe as a Box-Muller or inverse-transform input.
  std::uint64_t bits = next_u64() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double Stream::normal() {
  if (have_cached_normal_) {
    have_cached_normal_ = false;
    return cached_normal_;
  }
  double u1 = uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 6.283185307179586476925286766559 * u2;
  cached_normal_ = r * std::sin(theta);
  have_cached_normal_ = true;
  return r * std::cos(theta);
}

double Stream::gamma(double shape) {
  if (!(shape > 0.0)) {
    throw std::domain_error("gamma shape must be positive");
  }
  if (shape < 1.0) {
    // Boost the shape by one and scale back with a uniform power.
    double g = gamma(shape + 1.0);
    double u = uniform();
    return g * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = normal();
    double t = 1.0 + c * x;
    if (t <= 0.0) continue;
    double v = t * t * t;
    double u = uniform();
    double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double Stream::chi_square(double df) { return 2.0 * gamma(0.5 * df); }

}  // namespace miml
