#ifndef VGEOM_POLAR_HPP
#define VGEOM_POLAR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vgeom/incidence.hpp"
#include "vgeom/veldkamp.hpp"

namespace vgeom {

enum class SubspaceKind { symplectic, hyperbolic_quadric, embedded_grassmannian, conwell_heptad };

std::string_view name(SubspaceKind kind);

/// A selection of points and lines of a Veldkamp space. Line indices refer
/// to the parent; every selected line lies inside the selected points.
struct PolarSubspace {
  SubspaceKind kind = SubspaceKind::symplectic;
  PointSet points;
  std::vector<std::size_t> lines;

  /// The selection as a standalone incidence structure (labels kept).
  IncidenceStructure as_incidence(const VeldkampSpace& v) const;
  /// Parent line indices lying entirely inside `subset`.
  std::vector<std::size_t> lines_inside(const VeldkampSpace& v, const PointSet& subset) const;
};

/// Lines of V(G_2(7)) whose cores have an odd number of points: the
/// (α,α,α), (α,β,β) and (α,β,γ) orbits. All 63 points are kept.
PolarSubspace extract_symplectic(const VeldkampSpace& v);

struct SymplecticCertificate {
  std::size_t points = 0;
  std::size_t lines = 0;
  std::size_t min_lines_per_point = 0;
  std::size_t max_lines_per_point = 0;
  bool odd_core_equivalent = false;  ///< orbit selection == odd-core selection
  bool linear = false;
  AxiomCheck one_or_all;
  std::optional<SrgParameters> srg;

  bool passed() const;
};

SymplecticCertificate certify_symplectic(const VeldkampSpace& v, const PolarSubspace& w);

/// The 35 α points with the 105 (α,α,α) lines.
PolarSubspace alpha_quadric(const VeldkampSpace& v);

struct GrassmannianEmbedding {
  PolarSubspace subspace;
  /// Point i of the embedded copy maps to this point of G_2(7).
  std::vector<std::size_t> point_map;
  bool bijective = false;
  bool incidence_preserving = false;
  ConfigurationParameters image_parameters;
  bool is_isomorphism() const { return bijective && incidence_preserving; }
};

/// β points and (β,β,β) lines, with the map abcde:fg -> {f,g} onto G_2(7)
/// checked to be a bijection that carries lines to lines and back.
GrassmannianEmbedding embedded_grassmannian(const VeldkampSpace& v);

struct ExteriorSetCertificate {
  std::size_t size = 0;
  std::size_t connecting_lines = 0;
  std::size_t lines_meeting_quadric = 0;
  std::uint64_t bound = 0;

  bool maximal() const { return lines_meeting_quadric == 0 && size == bound; }
};

/// The seven γ points (points only, no lines).
PolarSubspace conwell_heptad(const VeldkampSpace& v);

/// Checks that every line joining two heptad points avoids the quadric.
ExteriorSetCertificate certify_exterior_set(const VeldkampSpace& v, const PolarSubspace& heptad,
                                            const PolarSubspace& quadric);

enum class QuadricKind { parabolic, elliptic, hyperbolic };

std::string_view name(QuadricKind kind);
std::optional<QuadricKind> parse_quadric_kind(std::string_view text);

/// Number of points on Q(2N,q), Q-(2N-1,q) or Q+(2N-1,q). Exact integer
/// arithmetic; throws on invalid parameters, overflow or inexact division.
std::uint64_t quadric_point_count(QuadricKind kind, int n, std::uint64_t q);

/// Largest possible exterior set of Q+(2N-1,q): (q^N - 1)/(q - 1).
std::uint64_t max_exterior_set_size(int n, std::uint64_t q);

}  // namespace vgeom

#endif  // VGEOM_POLAR_HPP
