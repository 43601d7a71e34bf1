#include "vgeom/magic_line.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "vgeom/error.hpp"

namespace vgeom {

std::string_view name(Sector s) {
  switch (s) {
    case Sector::core: return "core";
    case Sector::elliptic: return "elliptic";
    case Sector::hyperbolic: return "hyperbolic";
    case Sector::cone: return "cone";
  }
  return "?";
}

const PointSet& MagicLineDecomposition::sector_points(Sector s) const {
  switch (s) {
    case Sector::core: return core_points;
    case Sector::elliptic: return elliptic_points;
    case Sector::hyperbolic: return hyperbolic_points;
    case Sector::cone: break;
  }
  return cone_points;
}

const std::vector<std::size_t>& MagicLineDecomposition::sector_lines(Sector s) const {
  switch (s) {
    case Sector::core: return core_lines;
    case Sector::elliptic: return elliptic_lines;
    case Sector::hyperbolic: return hyperbolic_lines;
    case Sector::cone: break;
  }
  return cone_lines;
}

const std::array<SectorLineForms, 4> kSectorLineForms = {{
    {Sector::core, {{"abcd:efg", "abef:cdg", "cdef:abg"}}},
    {Sector::elliptic, {{"abcd:efg", "abcdf:eg", "abcdeg:f"}, {"abcd:efg", "abcde:fg", "abcdfg:e"}}},
    {Sector::hyperbolic, {{"abcd:efg", "abeg:cdf", "cdeg:abf"}, {"abcd:efg", "abfg:cde", "cdfg:abe"}}},
    {Sector::cone, {{"abcd:efg", "abcdg:ef", "abcdef:g"}}},
}};

Sector sector_of(const VeldkampSpace& v, std::size_t point, int pivot) {
  const auto& partition = *v.point(point).partition;
  const bool pivot_on_minor = (partition.minor() >> (pivot - 1)) & 1U;
  switch (v.point_type(point)) {
    case PointType::alpha: return pivot_on_minor ? Sector::core : Sector::hyperbolic;
    case PointType::beta: return pivot_on_minor ? Sector::elliptic : Sector::cone;
    case PointType::gamma: return pivot_on_minor ? Sector::cone : Sector::elliptic;
  }
  throw GeometryError(ErrorCode::invariant_violation, "unknown point type");
}

namespace {

std::vector<std::size_t> generate_lines(const VeldkampSpace& v, const std::set<std::size_t>& w_lines,
                                        const SectorLineForms& forms, int pivot) {
  std::vector<int> rest;
  for (int e = 1; e <= 7; ++e)
    if (e != pivot) rest.push_back(e);
  std::set<std::size_t> lines;
  for (const auto& form : forms.forms) {
    std::vector<int> assignment = rest;
    do {
      std::vector<int> full = assignment;
      full.push_back(pivot);
      std::array<std::size_t, 3> idx{};
      for (std::size_t f = 0; f < 3; ++f) {
        const auto label = instantiate_form(form[f], full).label();
        idx[f] = *v.find_point(label);
      }
      const auto l = v.find_line(idx[0], idx[1], idx[2]);
      if (!l || !w_lines.contains(*l))
        throw GeometryError(ErrorCode::invariant_violation,
                            std::string(name(forms.sector)) + " line form instance {" + v.label(idx[0]) + ", " +
                                v.label(idx[1]) + ", " + v.label(idx[2]) + "} is not a line of W");
      lines.insert(*l);
    } while (std::next_permutation(assignment.begin(), assignment.end()));
  }
  return {lines.begin(), lines.end()};
}

std::vector<std::size_t> sorted_union(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

bool all_of_type(const VeldkampSpace& v, const std::vector<std::size_t>& lines, const LineType& t) {
  return std::all_of(lines.begin(), lines.end(), [&](auto l) { return v.line_type(l) == t; });
}

std::string count_detail(std::size_t got, std::size_t want) {
  return std::to_string(got) + " (expected " + std::to_string(want) + ")";
}

std::string gq_detail(const GQParameters& gq) {
  if (gq.valid) return "GQ(" + std::to_string(gq.s) + "," + std::to_string(gq.t) + ")";
  return "not a GQ: " + (gq.witness ? gq.witness->reason : std::string("unknown"));
}

constexpr auto A = PointType::alpha;
constexpr auto B = PointType::beta;
constexpr auto G = PointType::gamma;

}  // namespace

MagicLineDecomposition build_magic_line(const VeldkampSpace& v, const PolarSubspace& w, int pivot) {
  if (pivot < 1 || pivot > 7)
    throw GeometryError(ErrorCode::out_of_range, "pivot " + std::to_string(pivot) + " outside 1..7");
  if (!v.has_types())
    throw GeometryError(ErrorCode::invalid_argument, "magic lines are defined in V(G_2(7)) only");

  MagicLineDecomposition m;
  m.pivot = pivot;
  for (std::size_t p = 0; p < v.point_count(); ++p) {
    switch (sector_of(v, p, pivot)) {
      case Sector::core: m.core_points.insert(p); break;
      case Sector::elliptic: m.elliptic_points.insert(p); break;
      case Sector::hyperbolic: m.hyperbolic_points.insert(p); break;
      case Sector::cone: m.cone_points.insert(p); break;
    }
    if (v.point_type(p) == PointType::gamma && v.point(p).partition->minor() == (1U << (pivot - 1)))
      m.vertex = p;
  }

  const std::set<std::size_t> w_lines(w.lines.begin(), w.lines.end());
  m.core_lines = generate_lines(v, w_lines, kSectorLineForms[0], pivot);
  m.elliptic_lines = generate_lines(v, w_lines, kSectorLineForms[1], pivot);
  m.hyperbolic_lines = generate_lines(v, w_lines, kSectorLineForms[2], pivot);
  m.cone_lines = generate_lines(v, w_lines, kSectorLineForms[3], pivot);
  m.cone_induced_lines = w.lines_inside(v, m.cone());
  return m;
}

Report verify_counts(const MagicLineDecomposition& m) {
  Report r{"counts (pivot " + std::to_string(m.pivot) + ")", {}, std::nullopt};
  struct Expected {
    Sector sector;
    std::size_t points, lines;
  };
  static constexpr Expected kExpected[] = {
      {Sector::core, 15, 15}, {Sector::elliptic, 12, 30}, {Sector::hyperbolic, 20, 90}, {Sector::cone, 16, 15}};
  for (const auto& e : kExpected) {
    const auto pts = m.sector_points(e.sector).size();
    const auto lns = m.sector_lines(e.sector).size();
    r.add(std::string(name(e.sector)) + " points", pts == e.points, count_detail(pts, e.points));
    r.add(std::string(name(e.sector)) + " lines", lns == e.lines, count_detail(lns, e.lines));
  }
  const bool disjoint = !m.core_points.intersects(m.elliptic_points) && !m.core_points.intersects(m.hyperbolic_points) &&
                        !m.core_points.intersects(m.cone_points) && !m.elliptic_points.intersects(m.hyperbolic_points) &&
                        !m.elliptic_points.intersects(m.cone_points) && !m.hyperbolic_points.intersects(m.cone_points);
  r.add("sectors disjoint", disjoint);
  const auto covered = (m.core_points | m.elliptic_points | m.hyperbolic_points | m.cone_points).size();
  r.add("sectors cover all points", covered == 63, count_detail(covered, 63));
  return r;
}

Report verify_core(const VeldkampSpace& v, const PolarSubspace& w, const MagicLineDecomposition& m) {
  Report r{"core GQ(2,2) (pivot " + std::to_string(m.pivot) + ")", {}, std::nullopt};
  bool forms_ok = true;
  for (auto p : m.core_points) {
    const auto& part = *v.point(p).partition;
    forms_ok &= v.point_type(p) == A && ((part.minor() >> (m.pivot - 1)) & 1U);
  }
  r.add("core points are α with the pivot on the 3-side", forms_ok);
  r.add("core lines are (α,α,α)", all_of_type(v, m.core_lines, LineType{{A, A, A}}));
  r.add("core lines are the W-lines inside the core", w.lines_inside(v, m.core_points) == m.core_lines);
  const auto gq = check_gq(v.geometry().restrict_to(m.core_points, m.core_lines));
  r.gq = gq;
  r.add("core is GQ(2,2)", gq.valid && gq.s == 2 && gq.t == 2, gq_detail(gq));
  const auto expected = quadric_point_count(QuadricKind::parabolic, 2, 2);
  r.add("core size matches Q(4,2)", m.core_points.size() == expected, count_detail(m.core_points.size(), expected));
  return r;
}

Report verify_elliptic(const VeldkampSpace& v, const PolarSubspace& w, const MagicLineDecomposition& m) {
  Report r{"elliptic quadric GQ(2,4) (pivot " + std::to_string(m.pivot) + ")", {}, std::nullopt};
  std::size_t betas = 0, gammas = 0;
  for (auto p : m.elliptic_points) {
    if (v.point_type(p) == B) ++betas;
    if (v.point_type(p) == G) ++gammas;
  }
  r.add("double-six is six β and six γ", betas == 6 && gammas == 6,
        std::to_string(betas) + " β, " + std::to_string(gammas) + " γ");
  r.add("added lines are (α,β,γ)", all_of_type(v, m.elliptic_lines, LineType{{A, B, G}}));
  const auto points = m.elliptic_quadric();
  const auto lines = sorted_union(m.core_lines, m.elliptic_lines);
  r.add("lines are the W-lines inside the quadric", w.lines_inside(v, points) == lines);
  const auto gq = check_gq(v.geometry().restrict_to(points, lines));
  r.gq = gq;
  r.add("core ∪ elliptic is GQ(2,4)", gq.valid && gq.s == 2 && gq.t == 4, gq_detail(gq));
  r.add("45 lines", lines.size() == 45, count_detail(lines.size(), 45));
  const auto expected = quadric_point_count(QuadricKind::elliptic, 3, 2);
  r.add("size matches Q-(5,2)", points.size() == expected, count_detail(points.size(), expected));
  return r;
}

Report verify_hyperbolic(const VeldkampSpace& v, const PolarSubspace& w, const MagicLineDecomposition& m) {
  Report r{"hyperbolic quadric (pivot " + std::to_string(m.pivot) + ")", {}, std::nullopt};
  const auto q0 = alpha_quadric(v);
  const auto points = m.hyperbolic_quadric();
  const auto lines = sorted_union(m.core_lines, m.hyperbolic_lines);
  r.add("points equal the α quadric", points == q0.points, count_detail(points.size(), q0.points.size()));
  r.add("lines equal the α quadric", lines == q0.lines, count_detail(lines.size(), q0.lines.size()));
  r.add("added lines are (α,α,α)", all_of_type(v, m.hyperbolic_lines, LineType{{A, A, A}}));
  r.add("lines are the W-lines inside the quadric", w.lines_inside(v, points) == lines);
  const auto expected = quadric_point_count(QuadricKind::hyperbolic, 3, 2);
  r.add("size matches Q+(5,2)", points.size() == expected, count_detail(points.size(), expected));
  return r;
}

Report verify_cone(const VeldkampSpace& v, const PolarSubspace& w, const MagicLineDecomposition& m) {
  Report r{"quadratic cone (pivot " + std::to_string(m.pivot) + ")", {}, std::nullopt};
  const auto cone = m.cone();
  r.add("31 points", cone.size() == 31, count_detail(cone.size(), 31));
  const auto& vertex_label = v.label(m.vertex);
  r.add("vertex is the γ point with singleton side {pivot}",
        v.point_type(m.vertex) == G && v.point(m.vertex).partition->minor() == (1U << (m.pivot - 1)), vertex_label);

  bool through_vertex = true, one_core_one_beta = true;
  PointSet covered;
  std::size_t overlaps = 0;
  for (auto l : m.cone_lines) {
    const auto& line = v.geometry().line(l);
    through_vertex &= line.contains(m.vertex);
    const auto rest = line - PointSet{m.vertex};
    one_core_one_beta &= rest.intersection_size(m.core_points) == 1 &&
                         rest.intersection_size(m.cone_points - PointSet{m.vertex}) == 1;
    overlaps += covered.intersection_size(rest);
    covered |= rest;
  }
  r.add("generators pass through the vertex", through_vertex);
  r.add("each generator has one core point and one β point", one_core_one_beta);
  r.add("generators partition the non-vertex points", overlaps == 0 && covered == cone - PointSet{m.vertex});
  r.add("31 = 1 + 2 * generators", cone.size() == 1 + 2 * m.cone_lines.size(),
        std::to_string(m.cone_lines.size()) + " generators");
  r.add("added lines are (α,β,γ)", all_of_type(v, m.cone_lines, LineType{{A, B, G}}));

  r.add("induced lines are the W-lines inside the cone", w.lines_inside(v, cone) == m.cone_induced_lines);
  std::vector<std::size_t> induced_through_vertex;
  for (auto l : m.cone_induced_lines)
    if (v.geometry().line(l).contains(m.vertex)) induced_through_vertex.push_back(l);
  r.add("generators are the W-lines of the cone through the vertex", induced_through_vertex == m.cone_lines);
  std::size_t core_inside = 0;
  for (auto l : m.cone_induced_lines)
    if (v.geometry().line(l).is_subset_of(m.core_points)) ++core_inside;
  r.add("core lines lie on the cone", core_inside == m.core_lines.size(),
        std::to_string(m.cone_induced_lines.size()) + " W-lines inside the cone in total");

  const auto induced = v.geometry().restrict_to(cone, m.cone_induced_lines);
  const auto gq = check_gq(induced);
  r.gq = gq;
  const auto local_vertex = induced.index_of(vertex_label);
  bool vertex_sees_all = local_vertex.has_value();
  if (local_vertex) {
    for (std::size_t l = 0; l < induced.line_count(); ++l) {
      if (induced.line(l).contains(*local_vertex)) continue;
      vertex_sees_all &= collinear_count(induced, *local_vertex, l) == induced.line(l).size();
    }
  }
  r.add("cone is not a GQ", !gq.valid && gq.failure == GqFailure::transversal, gq_detail(gq));
  r.add("vertex is collinear with every point of each line missing it", vertex_sees_all);
  return r;
}

Report verify_veldkamp_line_of_w(const VeldkampSpace& v, const PolarSubspace& w, const MagicLineDecomposition& m) {
  Report r{"Veldkamp line of W (pivot " + std::to_string(m.pivot) + ")", {}, std::nullopt};
  const auto ws = w.as_incidence(v);
  const auto e = m.elliptic_quadric();
  const auto h = m.hyperbolic_quadric();
  const auto c = m.cone();
  r.add("elliptic quadric is a hyperplane of W", is_hyperplane(ws, e), std::to_string(e.size()) + " points");
  r.add("hyperbolic quadric is a hyperplane of W", is_hyperplane(ws, h), std::to_string(h.size()) + " points");
  r.add("cone is a hyperplane of W", is_hyperplane(ws, c), std::to_string(c.size()) + " points");
  r.add("pairwise intersections equal the core",
        (e & h) == m.core_points && (e & c) == m.core_points && (h & c) == m.core_points,
        std::to_string(m.core_points.size()) + " core points");
  const auto all = ws.all_points();
  r.add("complement of E Δ H is C", all - (e ^ h) == c);
  r.add("complement of E Δ C is H", all - (e ^ c) == h);
  r.add("complement of H Δ C is E", all - (h ^ c) == e);
  return r;
}

std::vector<Report> verify_magic_line(const VeldkampSpace& v, const PolarSubspace& w,
                                      const MagicLineDecomposition& m) {
  return {verify_counts(m),         verify_core(v, w, m), verify_elliptic(v, w, m),
          verify_hyperbolic(v, w, m), verify_cone(v, w, m), verify_veldkamp_line_of_w(v, w, m)};
}

}  // namespace vgeom
