#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "twl/volume.hpp"

using namespace twl;

namespace {

const double kPi = std::acos(-1.0);

// 4 * Catalan's constant, recomputed from the alternating series
// G = sum (-1)^n / (2n+1)^2 with endpoint averaging.
double four_catalan() {
  double s = 0.0, sign = 1.0, prev = 0.0;
  for (long n = 0; n < 2'000'000; ++n) {
    prev = s;
    s += sign / ((2.0 * n + 1.0) * (2.0 * n + 1.0));
    sign = -sign;
  }
  return 4.0 * 0.5 * (s + prev);
}

}  // namespace

TEST_CASE("r_poly: k = 1 coefficients at omega = pi") {
  // s = i, x = 0, v = z^2 - 2: R = -z S_1(v) + z S_{-1}(v) = -z^3 + 2z.
  auto c = r_poly(1, kPi);
  REQUIRE(c.size() == 4);
  CHECK(std::abs(c[0]) < 1e-12);
  CHECK(std::abs(c[1] - 2.0) < 1e-12);
  CHECK(std::abs(c[2]) < 1e-12);
  CHECK(std::abs(c[3] + 1.0) < 1e-12);
}

TEST_CASE("r_poly: real coefficients across the parameter range") {
  std::mt19937 rng(2718);
  std::uniform_real_distribution<double> od(1e-3, kPi);
  std::uniform_int_distribution<int> kd(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    CHECK_NOTHROW(r_poly(kd(rng), od(rng)));
  }
  CHECK_THROWS_AS(r_poly(0, 1.0), std::domain_error);
  CHECK_THROWS_AS(r_poly(1, 0.0), std::domain_error);
  CHECK_THROWS_AS(r_poly(1, kPi + 0.1), std::domain_error);
}

TEST_CASE("r_poly degree grows with k") {
  CHECK(r_poly(1, 1.0).size() == 4);   // cubic
  CHECK(r_poly(2, 1.0).size() == 4);   // cubic
  CHECK(r_poly(3, 1.0).size() == 6);   // quintic
  CHECK(r_poly(4, 1.0).size() == 6);
}

TEST_CASE("chosen root is a genuine root") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> od(1e-3, kPi - 1e-6);
  for (int k = 1; k <= 6; ++k) {
    for (int trial = 0; trial < 25; ++trial) {
      double omega = od(rng);
      RootChoice c = choose_root(k, omega);
      auto rc = r_poly(k, omega);
      std::vector<Complex> cc(rc.begin(), rc.end());
      double scale = 0.0;
      for (Complex x : cc) scale = std::max(scale, std::abs(x));
      CHECK(std::abs(horner(cc, c.z)) < 1e-10 * std::max(1.0, scale));
    }
  }
}

TEST_CASE("integrand is nonnegative and vanishes in the real regime") {
  for (int k = 1; k <= 4; ++k) {
    for (int i = 1; i <= 40; ++i) {
      double omega = kPi * i / 41.0;
      double val = integrand(k, omega);
      CHECK(val >= -1e-12);
      RootChoice c = choose_root(k, omega);
      if (c.real_regime) CHECK(val == 0.0);
    }
  }
}

TEST_CASE("the two integrand routes agree on chosen roots") {
  std::mt19937 rng(31415);
  std::uniform_real_distribution<double> od(0.05, 2.0);
  for (int k = 1; k <= 5; ++k) {
    for (int trial = 0; trial < 20; ++trial) {
      double omega = od(rng);
      RootChoice c = choose_root(k, omega);
      if (c.real_regime) continue;
      CHECK(std::abs(integrand_at(omega, c.z) -
                     integrand_symmetric(omega, c.z)) < 1e-9);
    }
  }
}

TEST_CASE("volume at alpha -> 0 approaches the Whitehead-link volume") {
  double expected = four_catalan();  // 3.663862...
  VolumeCurve curve = volume(1, 1e-4);
  CHECK(std::abs(curve.volume - expected) < 1e-3);
  CHECK(curve.warnings.empty());
}

TEST_CASE("volume endpoint and validation") {
  CHECK(volume(1, kPi).volume == 0.0);
  CHECK(volume(3, kPi).volume == 0.0);
  CHECK_THROWS_AS(volume(0, 1.0), std::domain_error);
  CHECK_THROWS_AS(volume(1, -0.5), std::domain_error);
  CHECK_THROWS_AS(volume(1, 4.0), std::domain_error);
}

TEST_CASE("volume is monotone decreasing in the cone angle") {
  for (int k = 1; k <= 3; ++k) {
    double prev = volume(k, 0.05).volume;
    for (int i = 1; i <= 24; ++i) {
      double alpha = 0.05 + (kPi - 0.05) * i / 24.0;
      double cur = volume(k, std::min(alpha, kPi)).volume;
      CHECK(cur <= prev + 1e-9);
      prev = cur;
    }
  }
}

TEST_CASE("volume increases with the twist parameter at fixed angle") {
  double v1 = volume(1, 0.5).volume;
  double v2 = volume(2, 0.5).volume;
  double v3 = volume(3, 0.5).volume;
  CHECK(v1 < v2);
  CHECK(v2 < v3);
}

TEST_CASE("samples are ordered and quadrature error is reported") {
  VolumeCurve curve = volume(2, 1.0);
  REQUIRE(curve.samples.size() >= 5);
  for (std::size_t i = 1; i < curve.samples.size(); ++i)
    CHECK(curve.samples[i - 1].omega <= curve.samples[i].omega);
  CHECK(curve.quadrature_error_estimate >= 0.0);
  CHECK(curve.quadrature_error_estimate < 1e-6);
}

TEST_CASE("cyclic cover volume matches r times the cone volume") {
  for (int r : {3, 4, 5}) {
    for (int k = 1; k <= 2; ++k) {
      double lhs = cyclic_cover_volume(k, r);
      double rhs = r * volume(k, 2.0 * kPi / r).volume;
      CHECK(std::abs(lhs - rhs) <= 1e-9);
    }
  }
  CHECK_THROWS_AS(cyclic_cover_volume(1, 2), std::domain_error);
}

TEST_CASE("hyperbolicity bound sits in [2pi/3, pi)") {
  for (int k = 1; k <= 6; ++k) {
    double bound = estimate_alpha_bound(k);
    CHECK(bound >= 2.0 * kPi / 3.0 - 1e-6);
    CHECK(bound < kPi);
    // volume is positive just below the bound, zero just above
    CHECK(volume(k, bound - 1e-3).volume > 0.0);
    CHECK(volume(k, std::min(bound + 1e-3, kPi)).volume < 1e-5);
  }
}

TEST_CASE("volume run is deterministic") {
  VolumeCurve a = volume(3, 0.7);
  VolumeCurve b = volume(3, 0.7);
  CHECK(a.volume == b.volume);
  CHECK(a.samples.size() == b.samples.size());
}
