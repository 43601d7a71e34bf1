#ifndef VGEOM_EXPORT_HPP
#define VGEOM_EXPORT_HPP

#include <span>
#include <string>
#include <vector>

#include "vgeom/hyperplanes.hpp"
#include "vgeom/incidence.hpp"
#include "vgeom/magic_line.hpp"
#include "vgeom/polar.hpp"
#include "vgeom/report.hpp"
#include "vgeom/veldkamp.hpp"

namespace vgeom {

/// Version of every JSON document written by this library.
inline constexpr int kSchemaVersion = 1;

/// {"schema":1,"points":[{"id":0,"label":"12"},...],"lines":[[0,1,5],...]}
std::string structure_to_json(const IncidenceStructure& c);

/// Undirected graph with point labels as node names.
std::string collinearity_to_dot(const CollinearityGraph& g);

/// {"schema":1,"hyperplanes":[{"partition":"1234:567","points":["12",...]},...]}
/// "partition" is null for hosts that are not a G_2(n).
std::string hyperplanes_to_json(const IncidenceStructure& host, std::span<const Hyperplane> hyperplanes);

std::string census_to_json(const VeldkampSpace& v, const Census& census);

std::string subspace_to_json(const VeldkampSpace& v, const PolarSubspace& s);

/// Points and lines grouped by sector, with bipartition labels.
std::string magic_lines_to_json(const VeldkampSpace& v, std::span<const MagicLineDecomposition> lines);

/// Collinearity graph of W with nodes coloured by sector.
std::string magic_line_to_dot(const VeldkampSpace& v, const PolarSubspace& w, const MagicLineDecomposition& m);

std::string reports_to_json(std::span<const Report> reports);

}  // namespace vgeom

#endif  // VGEOM_EXPORT_HPP
