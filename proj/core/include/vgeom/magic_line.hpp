#ifndef VGEOM_MAGIC_LINE_HPP
#define VGEOM_MAGIC_LINE_HPP

#include <array>
#include <string_view>
#include <vector>

#include "vgeom/polar.hpp"
#include "vgeom/report.hpp"
#include "vgeom/veldkamp.hpp"

namespace vgeom {

enum class Sector { core, elliptic, hyperbolic, cone };

std::string_view name(Sector s);

/// One magic Veldkamp line of W(5,2) inside V(G_2(7)), selected by a pivot
/// element g of {1..7}. Sector point sets are disjoint and cover all 63
/// points; the cone sector includes the vertex.
///
/// Sector lines are the ones generated symbolically from the line forms
/// below. Cone lines are the generators through the vertex; every W-line
/// inside core ∪ cone is listed separately in `cone_induced_lines`.
struct MagicLineDecomposition {
  int pivot = 0;
  PointSet core_points;
  PointSet elliptic_points;
  PointSet hyperbolic_points;
  PointSet cone_points;
  std::size_t vertex = 0;
  std::vector<std::size_t> core_lines;
  std::vector<std::size_t> elliptic_lines;
  std::vector<std::size_t> hyperbolic_lines;
  std::vector<std::size_t> cone_lines;
  std::vector<std::size_t> cone_induced_lines;

  PointSet elliptic_quadric() const { return core_points | elliptic_points; }
  PointSet hyperbolic_quadric() const { return core_points | hyperbolic_points; }
  PointSet cone() const { return core_points | cone_points; }

  const PointSet& sector_points(Sector s) const;
  const std::vector<std::size_t>& sector_lines(Sector s) const;
};

/// Line forms over letters a..g, where g is the pivot and a..f run over
/// the remaining six elements.
struct SectorLineForms {
  Sector sector;
  std::vector<std::array<std::string_view, 3>> forms;
};

extern const std::array<SectorLineForms, 4> kSectorLineForms;

/// Sector of a point of V(G_2(7)) for the given pivot, from the position of
/// the pivot in its bipartition.
Sector sector_of(const VeldkampSpace& v, std::size_t point, int pivot);

/// Builds the decomposition for pivot g. `w` must be extract_symplectic(v).
/// Throws GeometryError if g is outside 1..7 or a generated line is missing
/// from W.
MagicLineDecomposition build_magic_line(const VeldkampSpace& v, const PolarSubspace& w, int pivot);

Report verify_counts(const MagicLineDecomposition& m);
Report verify_core(const VeldkampSpace& v, const PolarSubspace& w, const MagicLineDecomposition& m);
Report verify_elliptic(const VeldkampSpace& v, const PolarSubspace& w, const MagicLineDecomposition& m);
Report verify_hyperbolic(const VeldkampSpace& v, const PolarSubspace& w, const MagicLineDecomposition& m);
Report verify_cone(const VeldkampSpace& v, const PolarSubspace& w, const MagicLineDecomposition& m);
/// The elliptic quadric, hyperbolic quadric and cone are hyperplanes of W
/// that form one line of the Veldkamp space of W.
Report verify_veldkamp_line_of_w(const VeldkampSpace& v, const PolarSubspace& w, const MagicLineDecomposition& m);

/// All of the above, in order.
std::vector<Report> verify_magic_line(const VeldkampSpace& v, const PolarSubspace& w,
                                      const MagicLineDecomposition& m);

}  // namespace vgeom

#endif  // VGEOM_MAGIC_LINE_HPP
