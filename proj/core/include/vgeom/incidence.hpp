#ifndef VGEOM_INCIDENCE_HPP
#define VGEOM_INCIDENCE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "vgeom/point_set.hpp"

namespace vgeom {

/// A finite point-line incidence structure.
///
/// Points are dense indices into a label table sorted by label; lines are
/// point sets sorted lexicographically by their ascending member lists.
/// Incidence is membership. Two structures built from the same data in any
/// order compare equal.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;

  /// Builds a structure from point labels and lines given as label lists.
  /// Throws GeometryError on a duplicate label, a line naming an unknown
  /// point, a point repeated within a line, an empty line or a duplicate line.
  static IncidenceStructure create(std::vector<std::string> labels,
                                   const std::vector<std::vector<std::string>>& lines);

  /// Same as create() with lines given as indices into `labels`.
  static IncidenceStructure from_indices(std::vector<std::string> labels,
                                         const std::vector<std::vector<std::size_t>>& lines);

  std::size_t point_count() const { return labels_.size(); }
  std::size_t line_count() const { return lines_.size(); }

  const std::string& label(std::size_t point) const { return labels_.at(point); }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  const PointSet& line(std::size_t index) const { return lines_.at(index); }
  std::span<const PointSet> lines() const { return lines_; }
  std::optional<std::size_t> find_line(const PointSet& points) const;

  /// Indices of the lines through `point`, ascending.
  std::span<const std::size_t> lines_through(std::size_t point) const {
    return lines_through_.at(point);
  }
  /// Points distinct from `point` sharing a line with it.
  const PointSet& neighbours(std::size_t point) const { return neighbours_.at(point); }

  PointSet all_points() const { return PointSet::range(point_count()); }

  /// Renders a point set as "{12,13,23}" using point labels.
  std::string format(const PointSet& points) const;

  /// Substructure on `points` whose lines are exactly the given lines
  /// (each must lie inside `points`). Labels are carried over.
  IncidenceStructure restrict_to(const PointSet& points, std::span<const std::size_t> line_indices) const;

  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.labels_ == b.labels_ && a.lines_ == b.lines_;
  }

 private:
  void index();

  std::vector<std::string> labels_;
  std::vector<PointSet> lines_;
  std::unordered_map<std::string, std::size_t> label_index_;
  std::unordered_map<PointSet, std::size_t, PointSetHash> line_index_;
  std::vector<std::vector<std::size_t>> lines_through_;
  std::vector<PointSet> neighbours_;
};

/// Offending points and lines reported by a failed axiom check.
struct Witness {
  std::string reason;
  std::vector<std::size_t> points;
  std::vector<std::size_t> lines;
};

struct ConfigurationParameters {
  std::size_t v = 0;
  std::size_t b = 0;
  std::size_t r_min = 0, r_max = 0;
  std::size_t k_min = 0, k_max = 0;
  bool r_regular = false;
  bool k_regular = false;
  bool linear = false;

  std::size_t r() const { return r_max; }
  std::size_t k() const { return k_max; }
  bool regular() const { return r_regular && k_regular; }
};

ConfigurationParameters configuration_parameters(const IncidenceStructure& c);

/// First pair of distinct lines sharing two or more points, if any.
std::optional<Witness> linearity_violation(const IncidenceStructure& c);

enum class GqFailure {
  none,
  degenerate,
  not_linear,
  transversal,     ///< axiom (iii): a point sees zero or several points of a line
  line_size,       ///< lines do not all have s+1 points with s >= 1
  point_degree,    ///< points are not all on t+1 lines with t >= 1
};

struct GQParameters {
  bool valid = false;
  std::size_t s = 0;
  std::size_t t = 0;
  GqFailure failure = GqFailure::degenerate;
  std::optional<Witness> witness;
};

/// Exhaustive generalized-quadrangle check. Axioms are tested in the order
/// linearity, unique transversal, then the order parameters; the first
/// failure is reported with the canonically least witness.
GQParameters check_gq(const IncidenceStructure& c);

/// Number of points of `line` collinear with `point` (the point itself excluded).
std::size_t collinear_count(const IncidenceStructure& c, std::size_t point, std::size_t line);

struct CollinearityGraph {
  std::vector<std::string> labels;
  std::vector<PointSet> adjacency;

  std::size_t vertex_count() const { return adjacency.size(); }
  std::size_t degree(std::size_t v) const { return adjacency.at(v).size(); }
  std::size_t edge_count() const;
  bool adjacent(std::size_t a, std::size_t b) const { return adjacency.at(a).contains(b); }
};

CollinearityGraph collinearity_graph(const IncidenceStructure& c);

struct SrgParameters {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;
  std::size_t mu = 0;
  /// No non-adjacent pairs exist, so mu is vacuous and reported as 0.
  bool complete = false;

  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

/// Parameters of `g` if it is strongly regular, checked over every vertex pair.
std::optional<SrgParameters> srg_parameters(const CollinearityGraph& g);

struct AxiomCheck {
  bool holds = false;
  std::optional<Witness> witness;
};

/// One-or-all polar axiom: every point off a line is collinear with exactly
/// one or with all points of that line.
AxiomCheck check_one_or_all(const IncidenceStructure& c);

/// Projective space check: every two distinct points on exactly one line, and
/// the Veblen-Young axiom.
AxiomCheck check_projective(const IncidenceStructure& c);

}  // namespace vgeom

#endif  // VGEOM_INCIDENCE_HPP
