#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <stdexcept>

#include "doctest.h"
#include "pairsplit/materials.hpp"
#include "pairsplit/units.hpp"

using namespace pairsplit;

// frozen against the built-in coefficient set at 1550 nm
TEST_CASE("index anchors at 1550 nm") {
  const auto disp = AlloyDispersion::builtin();
  CHECK(disp.index(0.00, 1550 * nm) == doctest::Approx(3.3767).epsilon(2e-4));
  CHECK(disp.index(0.25, 1550 * nm) == doctest::Approx(3.2503).epsilon(2e-4));
  CHECK(disp.index(0.45, 1550 * nm) == doctest::Approx(3.1512).epsilon(2e-4));
  CHECK(disp.index(0.80, 1550 * nm) == doctest::Approx(2.9845).epsilon(2e-4));
  CHECK(disp.index(1.00, 1550 * nm) == doctest::Approx(2.8940).epsilon(2e-4));
}

TEST_CASE("index decreases with aluminum fraction") {
  const auto disp = AlloyDispersion::builtin();
  for (double lambda : {780 * nm, 1100 * nm, 1550 * nm, 2200 * nm}) {
    double prev = 1e9;
    for (double x = 0.0; x <= 1.0001; x += 0.05) {
      if (!disp.in_window(x, lambda)) continue;
      const double n = disp.index(x, lambda);
      CHECK(n < prev);
      CHECK(n > 1.0);
      prev = n;
    }
  }
}

TEST_CASE("normal dispersion in the window") {
  const auto disp = AlloyDispersion::builtin();
  for (double x : {0.0, 0.2, 0.45, 0.8}) {
    double prev = 1e9;
    for (double lambda = 1200 * nm; lambda <= 2200 * nm; lambda += 100 * nm) {
      const double n = disp.index(x, lambda);
      CHECK(n < prev);  // longer wavelength, smaller index
      prev = n;
    }
  }
}

TEST_CASE("window and gap-margin guards throw") {
  const auto disp = AlloyDispersion::builtin();
  CHECK_THROWS_AS(disp.index(0.0, 500 * nm), std::invalid_argument);
  CHECK_THROWS_AS(disp.index(0.0, 3000 * nm), std::invalid_argument);
  // 760 nm photon: fine in high-Al alloy, too close to the GaAs edge
  CHECK_NOTHROW(disp.index(0.45, 762.5 * nm));
  CHECK_THROWS_AS(disp.index(0.0, 762.5 * nm), std::invalid_argument);
  CHECK(!disp.in_window(0.0, 762.5 * nm));
  CHECK(disp.in_window(0.45, 762.5 * nm));
}

TEST_CASE("coefficient file round trip") {
  const auto disp = AlloyDispersion::builtin();
  const std::string path = "materials_roundtrip.cfg";
  disp.save(path);
  const auto back = AlloyDispersion::load(path);
  CHECK(back.index(0.3, 1525 * nm) == disp.index(0.3, 1525 * nm));
  CHECK(back.index(0.85, 780 * nm) == disp.index(0.85, 780 * nm));
  std::remove(path.c_str());
}

TEST_CASE("free function matches builtin") {
  CHECK(refractive_index(0.45, 1525 * nm) ==
        AlloyDispersion::builtin().index(0.45, 1525 * nm));
}
