#include <catch2/catch_amalgamated.hpp>

#include "deltashell/io.hpp"
#include "deltashell/model.hpp"

using deltashell::ShellConfig;
using deltashell::validate;
using Catch::Approx;

TEST_CASE("validate computes thetas") {
  const ShellConfig cfg = validate({1.0, 2.0}, {1.0, -1.0});
  REQUIRE(cfg.size() == 2);
  REQUIRE(cfg.thetas[0] == 1.0);
  REQUIRE(cfg.thetas[1] == -4.0);
}

TEST_CASE("validate rejects bad inputs") {
  REQUIRE_THROWS_AS(validate({2.0, 1.0}, {0.0, 0.0}), deltashell::NonincreasingRadii);
  REQUIRE_THROWS_AS(validate({1.0, 1.0}, {0.0, 0.0}), deltashell::NonincreasingRadii);
  REQUIRE_THROWS_AS(validate({-1.0, 1.0}, {0.0, 0.0}), deltashell::NonpositiveRadius);
  REQUIRE_THROWS_AS(validate({0.0}, {0.0}), deltashell::NonpositiveRadius);
  REQUIRE_THROWS_AS(validate({1.0}, {0.0, 1.0}), deltashell::LengthMismatch);
}

TEST_CASE("empty config is the free Hamiltonian") {
  const ShellConfig cfg = validate({}, {});
  REQUIRE(cfg.size() == 0);
  REQUIRE(cfg.empty());
}

TEST_CASE("zero strength shells are allowed") {
  const ShellConfig cfg = validate({1.0, 2.0, 3.0}, {0.0, 0.0, 0.0});
  REQUIRE(cfg.thetas == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("double shell wrapper") {
  const auto ds = deltashell::make_double_shell(1.0, 2.0, 1.0, -8.0 / 3.0);
  REQUIRE(ds.r1() == 1.0);
  REQUIRE(ds.r2() == 2.0);
  REQUIRE(ds.theta1() == Approx(1.0));
  REQUIRE(ds.theta2() == Approx(-8.0 / 3.0));
  REQUIRE_THROWS_AS(deltashell::DoubleShellConfig::from(validate({1.0}, {1.0})),
                    deltashell::ConfigError);
}

TEST_CASE("json round-trip is bit-exact") {
  // awkward binary values on purpose
  const std::vector<double> radii{0.1, 0.30000000000000004, 2.0 / 3.0, 3.141592653589793};
  const std::vector<double> alphas{-5.0 / 7.0, 1e-13, 4.9e8, -0.0001};
  const ShellConfig cfg = validate(radii, alphas);
  const std::string text = deltashell::config_to_json(cfg).dump();
  const ShellConfig back = deltashell::parse_config(text);
  REQUIRE(back.radii == cfg.radii);
  REQUIRE(back.alphas == cfg.alphas);
  REQUIRE(back.thetas == cfg.thetas);
}

TEST_CASE("config parse errors are ConfigError") {
  REQUIRE_THROWS_AS(deltashell::parse_config("not json"), deltashell::ConfigError);
  REQUIRE_THROWS_AS(deltashell::parse_config("{\"radii\":[1.0]}"), deltashell::ConfigError);
  REQUIRE_THROWS_AS(deltashell::parse_config("{\"radii\":[1.0],\"alphas\":\"x\"}"),
                    deltashell::ConfigError);
}
