#ifndef VGEOM_VELDKAMP_HPP
#define VGEOM_VELDKAMP_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vgeom/hyperplanes.hpp"
#include "vgeom/incidence.hpp"

namespace vgeom {

/// Point types of V(G_2(7)) by the smaller side of the bipartition:
/// alpha = 4:3, beta = 5:2, gamma = 6:1.
enum class PointType { alpha, beta, gamma };

std::string_view name(PointType t);    ///< "alpha"
std::string_view symbol(PointType t);  ///< "α"

/// Sorted multiset of the point types on a Veldkamp line.
struct LineType {
  std::array<PointType, 3> members{};

  static LineType of(PointType a, PointType b, PointType c);

  std::string name() const;    ///< "alpha,alpha,beta"
  std::string symbol() const;  ///< "(α,α,β)"

  friend bool operator==(const LineType&, const LineType&) = default;
  friend auto operator<=>(const LineType&, const LineType&) = default;
};

/// The seven line orbits of V(G_2(7)) in table order.
extern const std::array<LineType, 7> kLineOrbits;
/// Type combinations that never occur on a line of V(G_2(7)).
extern const std::array<LineType, 3> kAbsentLineTypes;

/// Symbolic description of one line orbit: three bipartition forms over the
/// letters a..g, each letter standing for a distinct element of {1..7}.
struct LineForm {
  LineType type;
  std::array<std::string_view, 3> forms;
};

extern const std::array<LineForm, 7> kLineForms;

/// Replaces letters a..g of `form` by assignment[letter - 'a'] and parses
/// the result. Digits in `form` are kept as they are.
Bipartition instantiate_form(std::string_view form, std::span<const int> assignment);

/// Shape of a Veldkamp-line core in G_2(n): the core pairs always form
/// disjoint cliques on the ground set, each clique being a sub-Grassmannian.
struct CoreDescriptor {
  std::size_t size = 0;
  /// Element sets of the cliques, largest first, then by elements.
  std::vector<std::uint32_t> components;
  bool clique_union = true;

  std::vector<int> component_sizes() const;
  /// e.g. "line 123 + point 45" or "Pasch 1234".
  std::string describe() const;
  /// e.g. "line + point", "3 points", "Pasch".
  std::string shape() const;
};

CoreDescriptor describe_core(int n, const PointSet& core);

class VeldkampSpace {
 public:
  VeldkampSpace() = default;

  const IncidenceStructure& host() const { return host_; }
  /// Points and lines of the Veldkamp space as an incidence structure, with
  /// point i labelled by the label of hyperplane i.
  const IncidenceStructure& geometry() const { return geometry_; }
  std::optional<int> ground_size() const { return ground_size_; }

  std::size_t point_count() const { return points_.size(); }
  std::size_t line_count() const { return lines_.size(); }
  std::span<const Hyperplane> points() const { return points_; }
  const Hyperplane& point(std::size_t i) const { return points_.at(i); }
  std::span<const std::array<std::size_t, 3>> lines() const { return lines_; }
  const std::array<std::size_t, 3>& line(std::size_t l) const { return lines_.at(l); }
  const PointSet& core(std::size_t l) const { return cores_.at(l); }

  std::string label(std::size_t i) const { return geometry_.label(i); }
  std::optional<std::size_t> find_point(const PointSet& members) const;
  std::optional<std::size_t> find_point(const std::string& label) const { return geometry_.index_of(label); }
  /// Index of the line joining two distinct points.
  std::size_t line_through(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> find_line(std::size_t a, std::size_t b, std::size_t c) const;

  /// Point and line types are available when the host is G_2(7).
  bool has_types() const { return !point_types_.empty(); }
  PointType point_type(std::size_t i) const { return point_types_.at(i); }
  LineType line_type(std::size_t l) const { return line_types_.at(l); }

 private:
  friend VeldkampSpace build_veldkamp(const IncidenceStructure& c);

  IncidenceStructure host_;
  IncidenceStructure geometry_;
  std::optional<int> ground_size_;
  std::vector<Hyperplane> points_;
  std::vector<std::array<std::size_t, 3>> lines_;
  std::vector<PointSet> cores_;
  std::unordered_map<PointSet, std::size_t, PointSetHash> point_index_;
  std::vector<std::size_t> joining_;
  std::vector<PointType> point_types_;
  std::vector<LineType> line_types_;
};

/// The third hyperplane on the Veldkamp line through `a` and `b` of a host
/// whose lines all have three points: the complement of their symmetric
/// difference. Throws if a == b or the result is not a hyperplane.
Hyperplane third_point(const IncidenceStructure& c, const Hyperplane& a, const Hyperplane& b);

/// Veldkamp space by pairwise closure over all hyperplanes of `c`.
VeldkampSpace build_veldkamp(const IncidenceStructure& c);

/// Type of a hyperplane of G_2(7). Throws if it has no 7-element partition label.
PointType classify_point(const Hyperplane& h);

struct LineClass {
  LineType type;
  PointSet core;
  CoreDescriptor descriptor;
};

LineClass classify_line(const VeldkampSpace& v, std::size_t line);

struct Census {
  std::size_t points = 0;
  std::size_t lines = 0;
  std::map<PointType, std::size_t> point_types;
  /// Every type in kLineOrbits and kAbsentLineTypes appears, possibly with 0.
  std::map<LineType, std::size_t> line_types;
  std::map<LineType, std::set<std::size_t>> core_sizes;
  std::map<LineType, std::set<std::string>> core_shapes;
  std::size_t min_lines_per_point = 0;
  std::size_t max_lines_per_point = 0;
};

/// Requires a Veldkamp space over G_2(7).
Census tabulate_census(const VeldkampSpace& v);

/// Point-type and line-type tables (Type / Form / Core composition / Number).
std::string render_census(const Census& census);

/// Image of a point of a Veldkamp space over G_2(n) under the relabelling
/// e -> perm[e-1] of the ground set.
std::size_t relabel_point(const VeldkampSpace& v, std::size_t point, const std::vector<int>& perm);

/// Lines of `v` obtained by instantiating `form` over every assignment of
/// a..g to {1..7}. Throws if an instance is not a line of `v`.
std::set<std::size_t> form_lines(const VeldkampSpace& v, const LineForm& form);

}  // namespace vgeom

#endif  // VGEOM_VELDKAMP_HPP
