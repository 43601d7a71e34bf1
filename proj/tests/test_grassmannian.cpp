#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "vgeom/error.hpp"
#include "vgeom/grassmannian.hpp"

using namespace vgeom;

TEST_CASE("build_g2 examples") {
  const auto line = build_g2(3);
  CHECK(line.point_count() == 3);
  CHECK(line.line_count() == 1);

  const auto p7 = configuration_parameters(build_g2(7));
  CHECK((p7.v == 21 && p7.b == 35 && p7.r() == 5 && p7.k() == 3 && p7.regular()));

  const auto pasch = configuration_parameters(build_g2(4));
  CHECK((pasch.v == 6 && pasch.b == 4 && pasch.r() == 2 && pasch.k() == 3));
}

TEST_CASE("build_g2 matches the label-level oracle for every N") {
  for (int n = kMinGroundSet; n <= kMaxGroundSet; ++n) {
    CAPTURE(n);
    const auto g = build_g2(n);
    CHECK(g == test_support::to_structure(oracle::g2(n)));
    const auto p = configuration_parameters(g);
    const std::size_t nn = static_cast<std::size_t>(n);
    CHECK(p.v == nn * (nn - 1) / 2);
    CHECK(p.b == nn * (nn - 1) * (nn - 2) / 6);
    CHECK(p.r() == nn - 2);
    CHECK(p.k() == 3);
    CHECK(p.regular());
    CHECK(p.linear);
    CHECK(p.v * p.r() == p.b * p.k());
    CHECK(grassmannian_order(g) == n);
  }
}

TEST_CASE("pairs are collinear iff they share an element") {
  const auto g = build_g2(6);
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = 1; c <= 6; ++c)
        for (int d = c + 1; d <= 6; ++d) {
          const auto x = pair_index(6, a, b), y = pair_index(6, c, d);
          CHECK(x == *g.index_of(pair_label(a, b)));
          if (x == y) continue;
          const bool share = a == c || a == d || b == c || b == d;
          CHECK(g.neighbours(x).contains(y) == share);
        }
}

TEST_CASE("ground-set range and k are validated") {
  CHECK_THROWS_AS(build_g2(2), GeometryError);
  CHECK_THROWS_AS(build_g2(10), GeometryError);
  CHECK_THROWS_AS(build_grassmannian(6, 3), GeometryError);
  try {
    build_grassmannian(6, 3);
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
  }
  try {
    build_g2(1);
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::out_of_range);
  }
}

TEST_CASE("named configurations") {
  CHECK(named_configuration(build_g2(3)) == "line");
  CHECK(named_configuration(build_g2(4)) == "Pasch");
  CHECK(named_configuration(build_g2(5)) == "Desargues");
  CHECK(named_configuration(build_g2(6)) == "Cayley-Salmon");
  CHECK(named_configuration(build_g2(7)) == "unnamed");
  CHECK(named_configuration(test_support::to_structure(oracle::grid3())) == "unnamed");
  CHECK(named_configuration(test_support::to_structure(oracle::fano())) == "unnamed");
  CHECK_FALSE(grassmannian_order(test_support::to_structure(oracle::fano())).has_value());
}
