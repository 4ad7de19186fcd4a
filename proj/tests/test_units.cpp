#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uavcell/io.hpp"
#include "uavcell/units.hpp"

#include <cstdlib>

using namespace uavcell::units;

TEST_CASE("dB-style conversions round-trip") {
  for (double dbm : {-174.0, -30.0, 0.0, 20.0, 46.0}) {
    CHECK(watts_to_dbm(dbm_to_watts(dbm)) == doctest::Approx(dbm).epsilon(1e-12));
  }
  for (double w : {1e-21, 1e-3, 0.1, 10.0}) {
    CHECK(dbm_to_watts(watts_to_dbm(w)) == doctest::Approx(w).epsilon(1e-12));
  }
  CHECK(db_to_linear(linear_to_db(39.81)) == doctest::Approx(39.81).epsilon(1e-12));
  CHECK(rad_to_deg(deg_to_rad(123.4)) == doctest::Approx(123.4).epsilon(1e-12));
  CHECK(dbm_to_watts(20.0) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(dbm_to_watts(40.0) == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("parse_quantity handles the documented suffixes") {
  CHECK(parse_quantity("2 GHz", Dimension::Frequency) == doctest::Approx(2e9));
  CHECK(parse_quantity("10 MHz", Dimension::Frequency) == doctest::Approx(1e7));
  CHECK(parse_quantity("-174 dBm/Hz", Dimension::PowerDensity) ==
        doctest::Approx(3.9810717055349565e-21).epsilon(1e-12));
  CHECK(parse_quantity("20 dBm", Dimension::Power) == doctest::Approx(0.1));
  CHECK(parse_quantity("16 dBi", Dimension::Gain) ==
        doctest::Approx(39.810717055349734).epsilon(1e-12));
  CHECK(parse_quantity("30 deg", Dimension::Angle) ==
        doctest::Approx(kPi / 6.0).epsilon(1e-12));
  CHECK(parse_quantity("1000 /km^2", Dimension::AreaDensity) ==
        doctest::Approx(1e-3).epsilon(1e-12));
  CHECK(parse_quantity("1 km", Dimension::Length) == doctest::Approx(1000.0));
  CHECK(parse_quantity("30 m/s", Dimension::Speed) == doctest::Approx(30.0));
  CHECK(parse_quantity("100 kbps", Dimension::Rate) == doctest::Approx(1e5));
  // Bare numbers are linear SI for any dimension.
  CHECK(parse_quantity("0.5", Dimension::Dimensionless) == doctest::Approx(0.5));
  CHECK(parse_quantity("500", Dimension::Length) == doctest::Approx(500.0));
}

TEST_CASE("parse_quantity rejects malformed input") {
  CHECK_THROWS_AS(parse_quantity("20 dbm2", Dimension::Power), UnitError);
  CHECK_THROWS_AS(parse_quantity("abc", Dimension::Power), UnitError);
  CHECK_THROWS_AS(parse_quantity("10 MHz", Dimension::Power), UnitError);
  CHECK_THROWS_AS(parse_quantity("", Dimension::Length), UnitError);
  CHECK_THROWS_AS(watts_to_dbm(0.0), UnitError);
  CHECK_THROWS_AS(linear_to_db(-1.0), UnitError);
}

TEST_CASE("format_double is shortest round-trip") {
  using uavcell::io::format_double;
  for (double v : {0.1, 1.0 / 3.0, 6.623596222856171e-07, -174.0, 0.0,
                   2.9977031251899366e-06, 1e308}) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.0) == "2");
}

TEST_CASE("CsvTable enforces the frozen header width") {
  uavcell::io::CsvTable t({"a", "b"});
  t.row({"1", "2"});
  CHECK(t.str() == "a,b\n1,2\n");
  CHECK_THROWS_AS(t.row({"1"}), std::invalid_argument);
  CHECK_THROWS_AS(uavcell::io::CsvTable({}), std::invalid_argument);
}
