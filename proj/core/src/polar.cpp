#include "vgeom/polar.hpp"

#include <algorithm>
#include <set>

#include "vgeom/error.hpp"
#include "vgeom/grassmannian.hpp"

namespace vgeom {

std::string_view name(SubspaceKind kind) {
  switch (kind) {
    case SubspaceKind::symplectic: return "symplectic";
    case SubspaceKind::hyperbolic_quadric: return "hyperbolic_quadric";
    case SubspaceKind::embedded_grassmannian: return "embedded_grassmannian";
    case SubspaceKind::conwell_heptad: return "conwell_heptad";
  }
  return "?";
}

IncidenceStructure PolarSubspace::as_incidence(const VeldkampSpace& v) const {
  return v.geometry().restrict_to(points, lines);
}

std::vector<std::size_t> PolarSubspace::lines_inside(const VeldkampSpace& v, const PointSet& subset) const {
  std::vector<std::size_t> inside;
  for (auto l : lines)
    if (v.geometry().line(l).is_subset_of(subset)) inside.push_back(l);
  return inside;
}

namespace {

void require_g27(const VeldkampSpace& v) {
  if (!v.has_types())
    throw GeometryError(ErrorCode::invalid_argument, "polar sub-geometries are defined in V(G_2(7)) only");
}

PointSet points_of_type(const VeldkampSpace& v, PointType t) {
  PointSet s;
  for (std::size_t i = 0; i < v.point_count(); ++i)
    if (v.point_type(i) == t) s.insert(i);
  return s;
}

std::vector<std::size_t> lines_of_types(const VeldkampSpace& v, std::initializer_list<LineType> types) {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < v.line_count(); ++l)
    if (std::find(types.begin(), types.end(), v.line_type(l)) != types.end()) out.push_back(l);
  return out;
}

constexpr auto A = PointType::alpha;
constexpr auto B = PointType::beta;
constexpr auto G = PointType::gamma;

}  // namespace

PolarSubspace extract_symplectic(const VeldkampSpace& v) {
  require_g27(v);
  return {SubspaceKind::symplectic, v.geometry().all_points(),
          lines_of_types(v, {LineType{{A, A, A}}, LineType{{A, B, B}}, LineType{{A, B, G}}})};
}

bool SymplecticCertificate::passed() const {
  return odd_core_equivalent && linear && one_or_all.holds && srg.has_value() &&
         srg->n == points && !srg->complete && min_lines_per_point == max_lines_per_point;
}

SymplecticCertificate certify_symplectic(const VeldkampSpace& v, const PolarSubspace& w) {
  SymplecticCertificate cert;
  std::vector<std::size_t> odd;
  for (std::size_t l = 0; l < v.line_count(); ++l)
    if (v.core(l).size() % 2 == 1) odd.push_back(l);
  cert.odd_core_equivalent = odd == w.lines;

  const auto structure = w.as_incidence(v);
  const auto params = configuration_parameters(structure);
  cert.points = params.v;
  cert.lines = params.b;
  cert.min_lines_per_point = params.r_min;
  cert.max_lines_per_point = params.r_max;
  cert.linear = params.linear;
  cert.one_or_all = check_one_or_all(structure);
  cert.srg = srg_parameters(collinearity_graph(structure));
  return cert;
}

PolarSubspace alpha_quadric(const VeldkampSpace& v) {
  require_g27(v);
  return {SubspaceKind::hyperbolic_quadric, points_of_type(v, A), lines_of_types(v, {LineType{{A, A, A}}})};
}

GrassmannianEmbedding embedded_grassmannian(const VeldkampSpace& v) {
  require_g27(v);
  GrassmannianEmbedding e;
  e.subspace = {SubspaceKind::embedded_grassmannian, points_of_type(v, B),
                lines_of_types(v, {LineType{{B, B, B}}})};

  // abcde:fg -> {f, g}
  std::vector<std::size_t> parent_to_local(v.point_count(), kMaxPoints);
  std::vector<std::string> image_labels;
  for (auto p : e.subspace.points) {
    const auto minor = v.point(p).partition->minor();
    std::vector<int> pair;
    for (int x = 1; x <= 7; ++x)
      if ((minor >> (x - 1)) & 1U) pair.push_back(x);
    parent_to_local[p] = e.point_map.size();
    e.point_map.push_back(pair_index(7, pair[0], pair[1]));
    image_labels.push_back(pair_label(pair[0], pair[1]));
  }
  const std::set<std::size_t> distinct(e.point_map.begin(), e.point_map.end());
  e.bijective = distinct.size() == e.point_map.size() && distinct.size() == v.host().point_count();

  std::vector<std::vector<std::size_t>> image_lines;
  for (auto l : e.subspace.lines) {
    std::vector<std::size_t> members;
    for (auto p : v.line(l)) members.push_back(parent_to_local[p]);
    image_lines.push_back(std::move(members));
  }
  if (e.bijective) {
    // Relabelled by images, the selection must coincide with the host exactly.
    const auto image = IncidenceStructure::from_indices(image_labels, image_lines);
    e.image_parameters = configuration_parameters(image);
    e.incidence_preserving = image == v.host();
  }
  return e;
}

PolarSubspace conwell_heptad(const VeldkampSpace& v) {
  require_g27(v);
  return {SubspaceKind::conwell_heptad, points_of_type(v, G), {}};
}

ExteriorSetCertificate certify_exterior_set(const VeldkampSpace& v, const PolarSubspace& heptad,
                                            const PolarSubspace& quadric) {
  ExteriorSetCertificate cert;
  const auto members = heptad.points.members();
  cert.size = members.size();
  std::set<std::size_t> connecting;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) connecting.insert(v.line_through(members[i], members[j]));
  cert.connecting_lines = connecting.size();
  for (auto l : connecting)
    if (v.geometry().line(l).intersects(quadric.points)) ++cert.lines_meeting_quadric;
  cert.bound = max_exterior_set_size(3, 2);
  return cert;
}

std::string_view name(QuadricKind kind) {
  switch (kind) {
    case QuadricKind::parabolic: return "parabolic";
    case QuadricKind::elliptic: return "elliptic";
    case QuadricKind::hyperbolic: return "hyperbolic";
  }
  return "?";
}

std::optional<QuadricKind> parse_quadric_kind(std::string_view text) {
  for (auto k : {QuadricKind::parabolic, QuadricKind::elliptic, QuadricKind::hyperbolic})
    if (name(k) == text) return k;
  return std::nullopt;
}

namespace {

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw GeometryError(ErrorCode::out_of_range, "quadric point count overflows 64 bits");
  return r;
}

std::uint64_t checked_pow(std::uint64_t q, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, q);
  return r;
}

std::uint64_t exact_div(std::uint64_t num, std::uint64_t den) {
  if (num % den != 0)
    throw GeometryError(ErrorCode::invariant_violation,
                        std::to_string(num) + " is not divisible by " + std::to_string(den));
  return num / den;
}

}  // namespace

std::uint64_t quadric_point_count(QuadricKind kind, int n, std::uint64_t q) {
  if (!is_prime_power(q))
    throw GeometryError(ErrorCode::invalid_argument, "q = " + std::to_string(q) + " is not a prime power");
  const int min_n = kind == QuadricKind::parabolic ? 2 : 1;
  if (n < min_n)
    throw GeometryError(ErrorCode::out_of_range, std::string(name(kind)) + " quadric needs N >= " +
                                                     std::to_string(min_n));
  switch (kind) {
    case QuadricKind::parabolic:
      return exact_div(checked_pow(q, 2 * n) - 1, q - 1);
    case QuadricKind::elliptic:
      return exact_div(checked_mul(checked_pow(q, n - 1) - 1, checked_pow(q, n) + 1), q - 1);
    case QuadricKind::hyperbolic:
      return exact_div(checked_mul(checked_pow(q, n - 1) + 1, checked_pow(q, n) - 1), q - 1);
  }
  throw GeometryError(ErrorCode::invalid_argument, "unknown quadric kind");
}

std::uint64_t max_exterior_set_size(int n, std::uint64_t q) {
  if (!is_prime_power(q) || n < 2)
    throw GeometryError(ErrorCode::invalid_argument, "exterior set bound needs N >= 2 and a prime power q");
  return exact_div(checked_pow(q, n) - 1, q - 1);
}

}  // namespace vgeom
