#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uavcell/phy.hpp"
#include "uavcell/units.hpp"

#include <random>
#include <string>

using namespace uavcell;
using uavcell::units::kSpeedOfLight;

TEST_CASE("defaults validate and match the parameter table") {
  phy::SystemParams p;
  CHECK_NOTHROW(p.validate());
  CHECK(p.f_c == 2e9);
  CHECK(p.W == 10e6);
  CHECK(p.N0 == doctest::Approx(units::parse_quantity("-174 dBm/Hz",
                                                       units::Dimension::PowerDensity))
                    .epsilon(1e-12));
  CHECK(p.G_G == doctest::Approx(units::db_to_linear(16.0)).epsilon(1e-12));
  CHECK(p.P_U == doctest::Approx(units::dbm_to_watts(20.0)).epsilon(1e-12));
  CHECK(p.P_G == doctest::Approx(units::dbm_to_watts(40.0)).epsilon(1e-12));
  CHECK(p.psi == doctest::Approx(units::kPi / 6.0).epsilon(1e-15));
  CHECK(p.Phi_G == doctest::Approx(4.0 * units::kPi / 3.0).epsilon(1e-15));
  CHECK(p.lambda == doctest::Approx(1e-3));
}

TEST_CASE("validate names the offending field") {
  auto expect_throw = [](auto mut, const std::string& field) {
    phy::SystemParams p;
    mut(p);
    try {
      p.validate();
      FAIL("expected invalid_argument for " << field);
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find(field) != std::string::npos);
    }
  };
  expect_throw([](auto& p) { p.f_c = 0; }, "f_c");
  expect_throw([](auto& p) { p.W = -1; }, "W");
  expect_throw([](auto& p) { p.N0 = 0; }, "N0");
  expect_throw([](auto& p) { p.H_U = 0; }, "H_U");
  expect_throw([](auto& p) { p.r_G = 0; }, "r_G");
  expect_throw([](auto& p) { p.n = 1.5; }, "n");
  expect_throw([](auto& p) { p.psi = 4.0; }, "psi");
  expect_throw([](auto& p) { p.Phi_G = 7.0; }, "Phi_G");
  expect_throw([](auto& p) { p.P_out_max = 1.0; }, "P_out_max");
  expect_throw([](auto& p) { p.mu = 0.9; }, "mu");
}

TEST_CASE("reference gain") {
  phy::SystemParams p;
  CHECK(phy::ref_gain(p) ==
        doctest::Approx(0.00014228584142858628).epsilon(1e-14));
  // f_c = c/(4*pi) makes the 1 m gain exactly 1.
  p.f_c = kSpeedOfLight / (4.0 * units::kPi);
  CHECK(phy::ref_gain(p) == doctest::Approx(1.0).epsilon(1e-14));
  // ref_gain * f_c^2 is frequency independent.
  phy::SystemParams q;
  q.f_c = 7e8;
  CHECK(phy::ref_gain(p) * p.f_c * p.f_c ==
        doctest::Approx(phy::ref_gain(q) * q.f_c * q.f_c).epsilon(1e-12));
}

TEST_CASE("derived link quantities are consistent") {
  phy::SystemParams p;
  CHECK(phy::noise_power(p) == doctest::Approx(p.N0 * p.W).epsilon(1e-15));
  CHECK(phy::eta0(p) ==
        doctest::Approx(phy::ref_gain(p) / phy::noise_power(p)).epsilon(1e-15));
  CHECK(phy::kappa0(p) == doctest::Approx(phy::eta0(p) * p.G_G).epsilon(1e-15));
  CHECK(phy::uav_channel_gain(300.0, p) ==
        doctest::Approx(phy::ref_gain(p) / (300.0 * 300.0 + p.H_U * p.H_U)));
  CHECK(phy::gbs_avg_channel_gain(0.0, p) ==
        doctest::Approx(phy::ref_gain(p) * std::pow(p.H_G, -p.n)));
}

TEST_CASE("UAV beam gain") {
  CHECK(phy::AntennaPattern::kG0 ==
        doctest::Approx(2.2846306484003143).epsilon(1e-14));
  CHECK(phy::AntennaPattern::kSidelobeGain == 0.0);
  // Worked value at the equal-corner-distance optimum of the default cell.
  CHECK(phy::uav_beam_gain(320.75798192722505, 100.0) ==
        doctest::Approx(1.4196369283574415).epsilon(1e-12));
  CHECK_THROWS_AS(phy::uav_beam_gain(0.0, 100.0), std::domain_error);
  CHECK_THROWS_AS(phy::uav_beam_gain(100.0, 0.0), std::domain_error);

  // Strictly decreasing in d_max: widening the beam always costs gain.
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> d(1.0, 5000.0);
  for (int i = 0; i < 1000; ++i) {
    double a = d(rng), b = d(rng);
    if (a > b) std::swap(a, b);
    if (a == b) continue;
    CHECK(phy::uav_beam_gain(a, 100.0) > phy::uav_beam_gain(b, 100.0));
  }
}
