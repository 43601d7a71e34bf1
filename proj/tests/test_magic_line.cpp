#include <doctest.h>

#include <algorithm>

#include "vgeom/error.hpp"
#include "vgeom/grassmannian.hpp"
#include "vgeom/magic_line.hpp"
#include "vgeom/polar.hpp"

using namespace vgeom;

namespace {

struct Fixture {
  VeldkampSpace v = build_veldkamp(build_g2(7));
  PolarSubspace w = extract_symplectic(v);
};

const Fixture& fx() {
  static const Fixture f;
  return f;
}

std::size_t vp(const std::string& label) { return *fx().v.find_point(Bipartition::parse(label).label()); }

bool has(const std::vector<std::size_t>& lines, std::size_t l) {
  return std::find(lines.begin(), lines.end(), l) != lines.end();
}

std::size_t line_of(const char* a, const char* b, const char* c) {
  return *fx().v.find_line(vp(a), vp(b), vp(c));
}

}  // namespace

TEST_CASE("pivot 7 sector membership") {
  const auto m = build_magic_line(fx().v, fx().w, 7);
  CHECK(m.pivot == 7);
  CHECK(m.core_points.contains(vp("1234:567")));
  CHECK(m.elliptic_points.contains(vp("12345:67")));
  CHECK(m.elliptic_points.contains(vp("123457:6")));
  CHECK_FALSE(m.elliptic_points.contains(vp("123456:7")));
  CHECK(m.vertex == vp("123456:7"));
  CHECK(m.cone_points.contains(m.vertex));
  CHECK(m.hyperbolic_points.contains(vp("1237:456")));
  CHECK(m.cone_points.contains(vp("12347:56")));
  CHECK(sector_of(fx().v, vp("1237:456"), 7) == Sector::hyperbolic);
  CHECK(sector_of(fx().v, vp("123456:7"), 7) == Sector::cone);
}

TEST_CASE("pivot 7 sector lines") {
  const auto m = build_magic_line(fx().v, fx().w, 7);
  CHECK(has(m.core_lines, line_of("1234:567", "1256:347", "3456:127")));
  CHECK(has(m.elliptic_lines, line_of("1234:567", "12345:67", "123467:5")));
  CHECK(has(m.hyperbolic_lines, line_of("1234:567", "1257:346", "3457:126")));
  CHECK(has(m.cone_lines, line_of("1234:567", "12347:56", "123456:7")));
  for (auto l : m.cone_lines) {
    const auto& t = fx().v.line(l);
    CHECK(std::find(t.begin(), t.end(), m.vertex) != t.end());
  }
}

TEST_CASE("all pivots verify with identical counts") {
  for (int g = 1; g <= 7; ++g) {
    CAPTURE(g);
    const auto m = build_magic_line(fx().v, fx().w, g);
    CHECK(m.core_points.size() == 15);
    CHECK(m.elliptic_points.size() == 12);
    CHECK(m.hyperbolic_points.size() == 20);
    CHECK(m.cone_points.size() == 16);
    CHECK(m.core_lines.size() == 15);
    CHECK(m.elliptic_lines.size() == 30);
    CHECK(m.hyperbolic_lines.size() == 90);
    CHECK(m.cone_lines.size() == 15);
    CHECK((m.core_points | m.elliptic_points | m.hyperbolic_points | m.cone_points).size() == 63);
    CHECK(m.cone_induced_lines.size() == 75);
    CHECK(fx().v.label(m.vertex) == Bipartition::from_elements(7, {g}).label());
    for (const auto& report : verify_magic_line(fx().v, fx().w, m)) {
      CAPTURE(report.title);
      const auto* failure = report.first_failure();
      CHECK_MESSAGE(failure == nullptr, (failure ? failure->name : ""));
    }
    for (auto s : {Sector::core, Sector::elliptic, Sector::hyperbolic, Sector::cone})
      for (auto l : m.sector_lines(s)) CHECK(has(fx().w.lines, l));
  }
}

TEST_CASE("cone is not a generalized quadrangle") {
  const auto m = build_magic_line(fx().v, fx().w, 7);
  PolarSubspace cone{SubspaceKind::symplectic, m.cone(), m.cone_induced_lines};
  const auto c = cone.as_incidence(fx().v);
  const auto gq = check_gq(c);
  CHECK_FALSE(gq.valid);
  CHECK(gq.failure == GqFailure::transversal);
  REQUIRE(gq.witness.has_value());
  const auto x = gq.witness->points.at(0);
  const auto l = gq.witness->lines.at(0);
  CHECK_FALSE(c.line(l).contains(x));
  CHECK(collinear_count(c, x, l) != 1);
}

TEST_CASE("relabelling maps magic lines onto each other sector by sector") {
  const auto& v = fx().v;
  const std::vector<std::vector<int>> perms{
      {2, 3, 4, 5, 6, 7, 1}, {7, 6, 5, 4, 3, 2, 1}, {1, 2, 3, 4, 5, 7, 6}, {3, 1, 2, 6, 7, 4, 5}};
  auto image = [&](const PointSet& s, const std::vector<int>& perm) {
    PointSet out;
    for (auto p : s) out.insert(relabel_point(v, p, perm));
    return out;
  };
  auto line_image = [&](const std::vector<std::size_t>& lines, const std::vector<int>& perm) {
    std::vector<std::size_t> out;
    for (auto l : lines) {
      const auto [a, b, c] = v.line(l);
      out.push_back(*v.find_line(relabel_point(v, a, perm), relabel_point(v, b, perm), relabel_point(v, c, perm)));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  for (const auto& perm : perms)
    for (int g = 1; g <= 7; ++g) {
      const auto m = build_magic_line(v, fx().w, g);
      const auto mg = build_magic_line(v, fx().w, perm[static_cast<std::size_t>(g - 1)]);
      for (auto s : {Sector::core, Sector::elliptic, Sector::hyperbolic, Sector::cone}) {
        CHECK(image(m.sector_points(s), perm) == mg.sector_points(s));
        auto expected = mg.sector_lines(s);
        std::sort(expected.begin(), expected.end());
        CHECK(line_image(m.sector_lines(s), perm) == expected);
      }
      CHECK(relabel_point(v, m.vertex, perm) == mg.vertex);
    }
}

TEST_CASE("pivot range is validated") {
  CHECK_THROWS_AS(build_magic_line(fx().v, fx().w, 0), GeometryError);
  CHECK_THROWS_AS(build_magic_line(fx().v, fx().w, 8), GeometryError);
  const auto v5 = build_veldkamp(build_g2(5));
  CHECK_THROWS_AS(build_magic_line(v5, PolarSubspace{}, 1), GeometryError);
}
