#ifndef VGEOM_HYPERPLANES_HPP
#define VGEOM_HYPERPLANES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vgeom/incidence.hpp"

namespace vgeom {

/// A split of the ground set {1..n} into two nonempty complementary sides.
///
/// Stored canonically: `major()` is the larger side, or the side holding 1
/// when both sides have equal size. Labels list each side ascending, major
/// side first, e.g. "1234:567".
class Bipartition {
 public:
  /// Bit e-1 of `side` marks element e. Either side may be given.
  static Bipartition from_side(int n, std::uint32_t side);
  static Bipartition from_elements(int n, const std::vector<int>& side);
  /// Parses "abcd:efg"; the digits must cover 1..n exactly once.
  static Bipartition parse(std::string_view label);

  int ground_size() const { return n_; }
  std::uint32_t major() const { return major_; }
  std::uint32_t minor() const { return full() & ~major_; }
  std::uint32_t full() const { return (std::uint32_t{1} << n_) - 1; }
  int minor_size() const;
  bool same_side(int a, int b) const;
  /// Side containing element e.
  std::uint32_t side_of(int e) const;

  std::string label() const;

  /// Applies the permutation e -> perm[e-1] to every element.
  Bipartition relabel(const std::vector<int>& perm) const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;

 private:
  Bipartition(int n, std::uint32_t major) : n_(n), major_(major) {}

  int n_ = 0;
  std::uint32_t major_ = 0;
};

struct Hyperplane {
  PointSet members;
  std::optional<Bipartition> partition;

  /// Partition label when present, otherwise the member labels.
  std::string label(const IncidenceStructure& host) const;

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.members == b.members; }
};

/// True iff `subset` is a proper subset of the points of `c` meeting every
/// line in exactly one point or in all of its points.
bool is_hyperplane(const IncidenceStructure& c, const PointSet& subset);

/// All geometric hyperplanes of `c`, canonically ordered (lexicographic on
/// member lists), found by backtracking with line-constraint propagation.
/// Partition labels are attached when `c` is a G_2(n).
std::vector<Hyperplane> enumerate_hyperplanes(const IncidenceStructure& c);

/// Oracle: tests all 2^v subsets against the hyperplane law. Requires v <= 24.
std::vector<Hyperplane> enumerate_hyperplanes_by_scan(const IncidenceStructure& c);

inline constexpr std::size_t kMaxScanPoints = 24;

/// Pairs within each side of `partition`, as point indices of G_2(n).
PointSet bipartition_points(const Bipartition& partition);

/// The hyperplane of G_2(n) made of all pairs within `side` and all pairs
/// within its complement. Throws if `side` is empty or all of {1..n}.
Hyperplane bipartition_hyperplane(int n, const std::vector<int>& side);

/// Recovers the bipartition whose pairs-within-sides set equals `members`
/// when `host` is G_2(n).
std::optional<Bipartition> match_bipartition(const IncidenceStructure& host, const PointSet& members);

/// Same, for point indices of G_2(n) given directly.
std::optional<Bipartition> match_bipartition(int n, const PointSet& members);

}  // namespace vgeom

#endif  // VGEOM_HYPERPLANES_HPP
