#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "miml/rng.hpp"

using namespace miml;

TEST_CASE("philox block function matches the published reference vectors") {
  {
    const std::uint32_t c[4] = {0, 0, 0, 0};
    const std::uint32_t k[2] = {0, 0};
    const Philox4x32Block b = philox4x32(c, k);
    CHECK(b.w[0] == 0x6627e8d5u);
    CHECK(b.w[1] == 0xe169c58du);
    CHECK(b.w[2] == 0xbc57ac4cu);
    CHECK(b.w[3] == 0x9b00dbd8u);
  }
  {
    const std::uint32_t c[4] = {0xffffffffu, 0xffffffffu, 0xffffffffu,
                                0xffffffffu};
    const std::uint32_t k[2] = {0xffffffffu, 0xffffffffu};
    const Philox4x32Block b = philox4x32(c, k);
    CHECK(b.w[0] == 0x408f276du);
    CHECK(b.w[1] == 0x41c83b0eu);
    CHECK(b.w[2] == 0xa20bc7c6u);
    CHECK(b.w[3] == 0x6d5451fdu);
  }
  {
    const std::uint32_t c[4] = {0x243f6a88u, 0x85a308d3u, 0x13198a2eu,
                                0x03707344u};
    const std::uint32_t k[2] = {0xa4093822u, 0x299f31d0u};
    const Philox4x32Block b = philox4x32(c, k);
    CHECK(b.w[0] == 0xd16cfe09u);
    CHECK(b.w[1] == 0x94fdccebu);
    CHECK(b.w[2] == 0x5001e420u);
    CHECK(b.w[3] == 0x24126ea1u);
  }
}

TEST_CASE("streams with equal coordinates reproduce the same sequence") {
  Stream a(42, 7, Purpose::Dataset, 3);
  Stream b(42, 7, Purpose::Dataset, 3);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
  Stream c(42, 7, Purpose::Dataset, 3);
  Stream d(42, 7, Purpose::Dataset, 3);
  for (int i = 0; i < 100; ++i) {
    CHECK(c.uniform() == d.uniform());
  }
}

TEST_CASE("changing any stream coordinate changes the output") {
  Stream base(42, 7, Purpose::Dataset, 3);
  const std::uint64_t first = base.next_u64();

  Stream seed(43, 7, Purpose::Dataset, 3);
  Stream rep(42, 8, Purpose::Dataset, 3);
  Stream purpose(42, 7, Purpose::Posterior, 3);
  Stream sub(42, 7, Purpose::Dataset, 4);
  CHECK(seed.next_u64() != first);
  CHECK(rep.next_u64() != first);
  CHECK(purpose.next_u64() != first);
  CHECK(sub.next_u64() != first);

  // High seed bits matter too (the key is the full 64-bit seed).
  Stream hi(42 + (std::uint64_t(1) << 32), 7, Purpose::Dataset, 3);
  CHECK(hi.next_u64() != first);
}

TEST_CASE("uniform draws stay inside the open unit interval") {
  Stream s(2024, 0, Purpose::Generic);
  const int n = 200000;
  double sum = 0.0, sumsq = 0.0;
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    sum += u;
    sumsq += u * u;
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(mean == doctest::Approx(0.5).scale(0.0).epsilon(0.01));
  CHECK(var == doctest::Approx(1.0 / 12.0).scale(0.0).epsilon(0.03));
  CHECK(lo < 0.001);
  CHECK(hi > 0.999);
}

TEST_CASE("normal draws have standard-normal moments and tail mass") {
  Stream s(2024, 1, Purpose::Generic);
  const int n = 200000;
  double sum = 0.0, sumsq = 0.0, sumcube = 0.0;
  int inside = 0;
  for (int i = 0; i < n; ++i) {
    const double z = s.normal();
    sum += z;
    sumsq += z * z;
    sumcube += z * z * z;
    if (std::abs(z) < 1.959963985) ++inside;
  }
  const double mean = sum / n;
  CHECK(std::abs(mean) < 0.015);
  CHECK(sumsq / n == doctest::Approx(1.0).epsilon(0.02));
  CHECK(std::abs(sumcube / n) < 0.05);
  CHECK(double(inside) / n == doctest::Approx(0.95).scale(0.0).epsilon(0.01));
}

TEST_CASE("gamma and chi-square draws have the right means and variances") {
  Stream s(2024, 2, Purpose::Generic);
  const int n = 200000;

  for (double shape : {0.7, 3.5}) {
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
      const double g = s.gamma(shape);
      REQUIRE(g > 0.0);
      sum += g;
      sumsq += g * g;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    CHECK(mean == doctest::Approx(shape).epsilon(0.02));
    CHECK(var == doctest::Approx(shape).epsilon(0.05));
  }

  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double c = s.chi_square(7.0);
    REQUIRE(c > 0.0);
    sum += c;
    sumsq += c * c;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(mean == doctest::Approx(7.0).epsilon(0.01));
  CHECK(var == doctest::Approx(14.0).epsilon(0.05));
}

TEST_CASE("distinct substreams look independent") {
  // Correlation between matched draws of neighbouring substreams.
  const int n = 20000;
  Stream a(9, 0, Purpose::Generic, 0);
  Stream b(9, 0, Purpose::Generic, 1);
  double sa = 0, sb = 0, sab = 0, saa = 0, sbb = 0;
  for (int i = 0; i < n; ++i) {
    const double u = a.uniform(), v = b.uniform();
    sa += u;
    sb += v;
    sab += u * v;
    saa += u * u;
    sbb += v * v;
  }
  const double cov = sab / n - (sa / n) * (sb / n);
  const double va = saa / n - (sa / n) * (sa / n);
  const double vb = sbb / n - (sb / n) * (sb / n);
  const double corr = cov / std::sqrt(va * vb);
  CHECK(std::abs(corr) < 0.03);
}
