#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "support.hpp"
#include "vgeom/error.hpp"
#include "vgeom/grassmannian.hpp"
#include "vgeom/incidence.hpp"

using namespace vgeom;
using test_support::to_structure;

TEST_CASE("point set algebra agrees with std::set") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::size_t> index(0, kMaxPoints - 1);
  std::uniform_int_distribution<int> count(0, 40);
  for (int trial = 0; trial < 300; ++trial) {
    PointSet a, b;
    std::set<std::size_t> sa, sb;
    for (int i = count(rng); i > 0; --i) {
      auto x = index(rng);
      a.insert(x);
      sa.insert(x);
    }
    for (int i = count(rng); i > 0; --i) {
      auto x = index(rng);
      b.insert(x);
      sb.insert(x);
    }
    CHECK(a.members() == std::vector<std::size_t>(sa.begin(), sa.end()));
    CHECK(a.size() == sa.size());

    std::vector<std::size_t> expect;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(expect));
    CHECK((a & b).members() == expect);
    CHECK(a.intersection_size(b) == expect.size());
    CHECK(a.intersects(b) == !expect.empty());
    expect.clear();
    std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(expect));
    CHECK((a ^ b).members() == expect);
    expect.clear();
    std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(expect));
    CHECK((a - b).members() == expect);
    CHECK((a - b).is_subset_of(a));

    const std::vector<std::size_t> va(sa.begin(), sa.end()), vb(sb.begin(), sb.end());
    CHECK(lex_less(a, b) == (va < vb));
  }
}

TEST_CASE("point set range and first") {
  CHECK(PointSet::range(0).empty());
  CHECK(PointSet::range(70).size() == 70);
  CHECK(PointSet::range(kMaxPoints).size() == kMaxPoints);
  CHECK(PointSet{5, 130}.first() == 5);
  CHECK_FALSE(PointSet{}.first().has_value());
}

TEST_CASE("new_structure builds a single line") {
  const auto c = IncidenceStructure::create({"a", "b", "c"}, {{"a", "b", "c"}});
  CHECK(c.point_count() == 3);
  CHECK(c.line_count() == 1);
  CHECK(c.line(0) == PointSet{0, 1, 2});
}

TEST_CASE("new_structure validation errors") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const GeometryError& e) {
      return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::invalid_argument;
  };
  CHECK(code_of([] { IncidenceStructure::create({"a", "b", "c"}, {{"a", "d"}}); }) == ErrorCode::unknown_point);
  CHECK(code_of([] { IncidenceStructure::create({"a", "b", "a"}, {}); }) == ErrorCode::duplicate_label);
  CHECK(code_of([] { IncidenceStructure::create({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}}); }) ==
        ErrorCode::duplicate_line);
  CHECK(code_of([] { IncidenceStructure::create({"a", "b"}, {{"a", "a"}}); }) == ErrorCode::repeated_point);
  CHECK(code_of([] { IncidenceStructure::create({"a"}, {{}}); }) == ErrorCode::empty_line);
  std::vector<std::string> many;
  for (std::size_t i = 0; i <= kMaxPoints; ++i) many.push_back(std::to_string(i));
  CHECK(code_of([&] { IncidenceStructure::create(many, {}); }) == ErrorCode::capacity_exceeded);
}

TEST_CASE("degenerate structures are accepted by constructors and rejected by checkers") {
  const auto empty = IncidenceStructure::create({}, {});
  CHECK(empty.point_count() == 0);
  CHECK_FALSE(check_gq(empty).valid);
  CHECK(check_gq(empty).failure == GqFailure::degenerate);
  CHECK_FALSE(check_projective(empty).holds);
  const auto no_lines = IncidenceStructure::create({"x", "y"}, {});
  CHECK_FALSE(check_one_or_all(no_lines).holds);
  CHECK(check_one_or_all(no_lines).witness->reason == "degenerate structure");
}

TEST_CASE("canonical order does not depend on input order") {
  std::mt19937 rng(7);
  auto raw = oracle::g2(6);
  const auto reference = to_structure(raw);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(raw.points.begin(), raw.points.end(), rng);
    std::shuffle(raw.lines.begin(), raw.lines.end(), rng);
    std::vector<std::vector<std::string>> lines;
    for (const auto& l : raw.lines) {
      std::vector<std::string> v(l.begin(), l.end());
      std::shuffle(v.begin(), v.end(), rng);
      lines.push_back(v);
    }
    CHECK(IncidenceStructure::create(raw.points, lines) == reference);
  }
  CHECK(std::is_sorted(reference.labels().begin(), reference.labels().end()));
  for (std::size_t l = 1; l < reference.line_count(); ++l) CHECK(lex_less(reference.line(l - 1), reference.line(l)));
}

TEST_CASE("configuration parameters of small Grassmannians") {
  const auto pasch = configuration_parameters(build_g2(4));
  CHECK(pasch.v == 6);
  CHECK(pasch.b == 4);
  CHECK(pasch.r() == 2);
  CHECK(pasch.k() == 3);
  CHECK(pasch.regular());
  CHECK(pasch.linear);

  const auto desargues = configuration_parameters(build_g2(5));
  CHECK((desargues.v == 10 && desargues.b == 10 && desargues.r() == 3 && desargues.k() == 3));

  const auto cayley = configuration_parameters(build_g2(6));
  CHECK((cayley.v == 15 && cayley.b == 20 && cayley.r() == 4 && cayley.k() == 3));
}

TEST_CASE("non-linear structure is flagged") {
  const auto c = IncidenceStructure::create({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"a", "b", "d"}});
  CHECK_FALSE(configuration_parameters(c).linear);
  const auto w = linearity_violation(c);
  REQUIRE(w.has_value());
  CHECK(w->lines == std::vector<std::size_t>{0, 1});
  CHECK(check_gq(c).failure == GqFailure::not_linear);
}

TEST_CASE("check_gq: 3x3 grid is GQ(2,1)") {
  const auto gq = check_gq(to_structure(oracle::grid3()));
  CHECK(gq.valid);
  CHECK(gq.s == 2);
  CHECK(gq.t == 1);
}

TEST_CASE("check_gq: Pasch fails the transversal axiom") {
  const auto raw = oracle::g2(4);
  const auto c = to_structure(raw);
  // Oracle: some point off some line sees a number of its points other than one.
  bool oracle_fails = false;
  for (const auto& x : raw.points)
    for (const auto& line : raw.lines) {
      if (line.count(x)) continue;
      std::size_t seen = 0;
      for (const auto& y : line) seen += oracle::collinear(raw, x, y) ? 1 : 0;
      oracle_fails |= seen != 1;
    }
  REQUIRE(oracle_fails);

  const auto gq = check_gq(c);
  CHECK_FALSE(gq.valid);
  CHECK(gq.failure == GqFailure::transversal);
  REQUIRE(gq.witness.has_value());
  const auto x = gq.witness->points.at(0);
  const auto l = gq.witness->lines.at(0);
  CHECK_FALSE(c.line(l).contains(x));
  CHECK(collinear_count(c, x, l) != 1);
  // Canonically least: point 0 ("12") against line 2 ("{13,14,34}") sees two points.
  CHECK(c.label(x) == "12");
  CHECK(c.format(c.line(l)) == "{13,14,34}");
}

TEST_CASE("collinearity graph") {
  const auto line = IncidenceStructure::create({"a", "b", "c"}, {{"a", "b", "c"}});
  const auto k3 = collinearity_graph(line);
  CHECK(k3.edge_count() == 3);
  for (std::size_t v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);

  const auto raw = oracle::g2(4);
  const auto pasch = collinearity_graph(to_structure(raw));
  CHECK(pasch.vertex_count() == 6);
  for (std::size_t v = 0; v < 6; ++v) {
    CHECK(pasch.degree(v) == 4);
    CHECK(oracle::degree(raw, pasch.labels[v]) == 4);
    CHECK_FALSE(pasch.adjacent(v, v));
    for (std::size_t u = 0; u < 6; ++u) CHECK(pasch.adjacent(u, v) == pasch.adjacent(v, u));
  }
}

TEST_CASE("srg parameters") {
  const auto k3 = srg_parameters(collinearity_graph(IncidenceStructure::create({"a", "b", "c"}, {{"a", "b", "c"}})));
  REQUIRE(k3.has_value());
  CHECK(*k3 == SrgParameters{3, 2, 1, 0, true});

  const auto rook = srg_parameters(collinearity_graph(to_structure(oracle::grid3())));
  REQUIRE(rook.has_value());
  CHECK(*rook == SrgParameters{9, 4, 1, 2, false});

  // Pasch graph: octahedron K(2,2,2) is SRG(6,4,2,4).
  const auto pasch = srg_parameters(collinearity_graph(build_g2(4)));
  REQUIRE(pasch.has_value());
  CHECK(*pasch == SrgParameters{6, 4, 2, 4, false});

  // A path a-b-c is not regular.
  const auto path = IncidenceStructure::create({"a", "b", "c", "d", "e"}, {{"a", "b", "c"}, {"c", "d", "e"}});
  CHECK_FALSE(srg_parameters(collinearity_graph(path)).has_value());
  CHECK_FALSE(srg_parameters(CollinearityGraph{}).has_value());
}

TEST_CASE("one-or-all axiom") {
  CHECK(check_one_or_all(IncidenceStructure::create({"a", "b", "c"}, {{"a", "b", "c"}})).holds);
  CHECK(check_one_or_all(to_structure(oracle::fano())).holds);
  // In the Pasch configuration a point sees two points of the opposite line.
  const auto pasch = check_one_or_all(build_g2(4));
  CHECK_FALSE(pasch.holds);
  REQUIRE(pasch.witness.has_value());
}

TEST_CASE("projective check") {
  const auto fano = check_projective(to_structure(oracle::fano()));
  CHECK(fano.holds);
  const auto grid = check_projective(to_structure(oracle::grid3()));
  CHECK_FALSE(grid.holds);
  REQUIRE(grid.witness.has_value());
  CHECK(grid.witness->points.size() == 2);

  // Disjoint pairs such as 12 and 34 are never collinear in G2(5).
  CHECK_FALSE(check_projective(build_g2(5)).holds);
}

TEST_CASE("Veblen-Young failure is detected") {
  // Points 1..9 with lines that join every pair exactly once but are not a
  // projective plane: the affine plane AG(2,3) has 4-line parallel classes
  // where transversals miss each other.
  const std::vector<std::string> pts{"1", "2", "3", "4", "5", "6", "7", "8", "9"};
  const std::vector<std::vector<std::string>> lines{
      {"1", "2", "3"}, {"4", "5", "6"}, {"7", "8", "9"}, {"1", "4", "7"}, {"2", "5", "8"}, {"3", "6", "9"},
      {"1", "5", "9"}, {"2", "6", "7"}, {"3", "4", "8"}, {"1", "6", "8"}, {"2", "4", "9"}, {"3", "5", "7"}};
  const auto ag = IncidenceStructure::create(pts, lines);
  const auto result = check_projective(ag);
  CHECK_FALSE(result.holds);
  REQUIRE(result.witness.has_value());
  CHECK(result.witness->reason.find("Veblen-Young") != std::string::npos);
}

TEST_CASE("property: random linear structures") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const auto raw = test_support::random_linear(rng, 5 + trial % 8, 0.3);
    const auto c = to_structure(raw);
    const auto p = configuration_parameters(c);
    CHECK(p.linear);
    if (p.regular()) CHECK(p.v * p.r() == p.b * p.k());

    const auto g = collinearity_graph(c);
    for (std::size_t a = 0; a < g.vertex_count(); ++a) {
      CHECK_FALSE(g.adjacent(a, a));
      std::size_t sum = 0;
      for (auto l : c.lines_through(a)) sum += c.line(l).size() - 1;
      CHECK(g.degree(a) == sum);
      CHECK(g.degree(a) == oracle::degree(raw, g.labels[a]));
      for (std::size_t b = 0; b < g.vertex_count(); ++b) CHECK(g.adjacent(a, b) == g.adjacent(b, a));
    }

    if (check_projective(c).holds) CHECK(check_one_or_all(c).holds);
    const auto gq = check_gq(c);
    if (gq.valid) {
      CHECK(p.v == (gq.s + 1) * (gq.s * gq.t + 1));
      CHECK(p.b == (gq.t + 1) * (gq.s * gq.t + 1));
    }
  }
}

TEST_CASE("restrict_to keeps labels and rejects outside lines") {
  const auto g = build_g2(5);
  PointSet pts;
  for (const char* l : {"12", "13", "23", "14", "24", "34"}) pts.insert(*g.index_of(l));
  std::vector<std::size_t> lines;
  for (std::size_t l = 0; l < g.line_count(); ++l)
    if (g.line(l).is_subset_of(pts)) lines.push_back(l);
  const auto sub = g.restrict_to(pts, lines);
  CHECK(sub == build_g2(4));
  CHECK_THROWS_AS(g.restrict_to(PointSet{0, 1}, std::vector<std::size_t>{0}), GeometryError);
}
