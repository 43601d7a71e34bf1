#include "vgeom/hyperplanes.hpp"

#include <algorithm>
#include <bit>

#include "vgeom/error.hpp"
#include "vgeom/grassmannian.hpp"

namespace vgeom {

Bipartition Bipartition::from_side(int n, std::uint32_t side) {
  if (n < 2 || n > kMaxGroundSet)
    throw GeometryError(ErrorCode::out_of_range, "ground set size " + std::to_string(n) + " not supported");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  if ((side & ~full) != 0)
    throw GeometryError(ErrorCode::out_of_range, "bipartition side names elements outside 1.." + std::to_string(n));
  if (side == 0 || side == full)
    throw GeometryError(ErrorCode::invalid_argument, "bipartition side must be nonempty and proper");
  const std::uint32_t other = full & ~side;
  const int a = std::popcount(side);
  const int b = std::popcount(other);
  std::uint32_t major = side;
  if (b > a || (a == b && (other & 1U) != 0)) major = other;
  return Bipartition(n, major);
}

Bipartition Bipartition::from_elements(int n, const std::vector<int>& side) {
  std::uint32_t mask = 0;
  for (int e : side) {
    if (e < 1 || e > n)
      throw GeometryError(ErrorCode::out_of_range, "element " + std::to_string(e) + " outside 1.." + std::to_string(n));
    if ((mask >> (e - 1)) & 1U)
      throw GeometryError(ErrorCode::invalid_argument, "element " + std::to_string(e) + " repeated");
    mask |= std::uint32_t{1} << (e - 1);
  }
  return from_side(n, mask);
}

Bipartition Bipartition::parse(std::string_view label) {
  const auto colon = label.find(':');
  if (colon == std::string_view::npos || label.find(':', colon + 1) != std::string_view::npos)
    throw GeometryError(ErrorCode::invalid_argument, "bipartition label '" + std::string(label) + "' needs one ':'");
  std::uint32_t left = 0, seen = 0;
  int count = 0;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i == colon) continue;
    const char ch = label[i];
    if (ch < '1' || ch > '9')
      throw GeometryError(ErrorCode::invalid_argument, "bad element '" + std::string(1, ch) + "' in bipartition label");
    const std::uint32_t bit = std::uint32_t{1} << (ch - '1');
    if (seen & bit)
      throw GeometryError(ErrorCode::invalid_argument, "element repeated in bipartition label '" + std::string(label) + "'");
    seen |= bit;
    if (i < colon) left |= bit;
    ++count;
  }
  if (seen != (std::uint32_t{1} << count) - 1)
    throw GeometryError(ErrorCode::invalid_argument, "bipartition label '" + std::string(label) + "' must use 1..n");
  return from_side(count, left);
}

int Bipartition::minor_size() const { return std::popcount(minor()); }

std::uint32_t Bipartition::side_of(int e) const {
  const std::uint32_t bit = std::uint32_t{1} << (e - 1);
  return (major_ & bit) ? major_ : minor();
}

bool Bipartition::same_side(int a, int b) const {
  return ((major_ >> (a - 1)) & 1U) == ((major_ >> (b - 1)) & 1U);
}

std::string Bipartition::label() const {
  std::string out;
  auto append = [&](std::uint32_t side) {
    for (int e = 1; e <= n_; ++e)
      if ((side >> (e - 1)) & 1U) out += static_cast<char>('0' + e);
  };
  append(major_);
  out += ':';
  append(minor());
  return out;
}

Bipartition Bipartition::relabel(const std::vector<int>& perm) const {
  if (perm.size() != static_cast<std::size_t>(n_))
    throw GeometryError(ErrorCode::invalid_argument, "permutation size does not match ground set");
  std::uint32_t image = 0;
  for (int e = 1; e <= n_; ++e)
    if ((major_ >> (e - 1)) & 1U) image |= std::uint32_t{1} << (perm[e - 1] - 1);
  return from_side(n_, image);
}

std::string Hyperplane::label(const IncidenceStructure& host) const {
  if (partition) return partition->label();
  return host.format(members);
}

bool is_hyperplane(const IncidenceStructure& c, const PointSet& subset) {
  const auto all = c.all_points();
  if (!subset.is_subset_of(all) || subset == all) return false;
  for (const auto& line : c.lines()) {
    const auto meet = line.intersection_size(subset);
    if (meet != 1 && meet != line.size()) return false;
  }
  return true;
}

namespace {

std::optional<Bipartition> match_in_g2(int n, const PointSet& members) {
  // Element 1's side is forced by which pairs {1,x} are members.
  std::uint32_t side = 1;
  for (int x = 2; x <= n; ++x)
    if (members.contains(pair_index(n, 1, x))) side |= std::uint32_t{1} << (x - 1);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  if (side == full) return std::nullopt;
  auto partition = Bipartition::from_side(n, side);
  if (bipartition_points(partition) != members) return std::nullopt;
  return partition;
}

class HyperplaneSearch {
 public:
  explicit HyperplaneSearch(const IncidenceStructure& c) : lines_(c.lines()), all_(c.all_points()) {}

  std::vector<PointSet> run() {
    descend(PointSet{}, PointSet{});
    return std::move(found_);
  }

 private:
  // Forces membership decisions implied by the hyperplane law until nothing
  // changes. Returns false when some line can no longer be satisfied.
  bool propagate(PointSet& in, PointSet& out) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& line : lines_) {
        const auto inside = line.intersection_size(in);
        const auto outside = line.intersection_size(out);
        const auto open = line - in - out;
        if (outside > 0) {
          // The line must meet the hyperplane in exactly one point.
          if (inside > 1) return false;
          if (inside == 1) {
            if (!open.empty()) {
              out |= open;
              changed = true;
            }
          } else {
            const auto free_count = open.size();
            if (free_count == 0) return false;
            if (free_count == 1) {
              in |= open;
              changed = true;
            }
          }
        } else if (inside >= 2 && !open.empty()) {
          in |= open;
          changed = true;
        }
      }
    }
    return true;
  }

  void descend(PointSet in, PointSet out) {
    if (!propagate(in, out)) return;
    const auto open = all_ - in - out;
    const auto next = open.first();
    if (!next) {
      if (in != all_) found_.push_back(in);
      return;
    }
    PointSet with = in;
    with.insert(*next);
    descend(with, out);
    PointSet without = out;
    without.insert(*next);
    descend(in, without);
  }

  std::span<const PointSet> lines_;
  PointSet all_;
  std::vector<PointSet> found_;
};

std::vector<Hyperplane> finish(const IncidenceStructure& c, std::vector<PointSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  const auto order = grassmannian_order(c);
  std::vector<Hyperplane> result;
  result.reserve(sets.size());
  for (const auto& s : sets) {
    Hyperplane h{s, std::nullopt};
    if (order) h.partition = match_in_g2(*order, s);
    result.push_back(std::move(h));
  }
  return result;
}

}  // namespace

std::vector<Hyperplane> enumerate_hyperplanes(const IncidenceStructure& c) {
  return finish(c, HyperplaneSearch(c).run());
}

std::vector<Hyperplane> enumerate_hyperplanes_by_scan(const IncidenceStructure& c) {
  const auto v = c.point_count();
  if (v > kMaxScanPoints)
    throw GeometryError(ErrorCode::capacity_exceeded,
                        "exhaustive scan limited to " + std::to_string(kMaxScanPoints) + " points");
  std::vector<PointSet> sets;
  const std::uint64_t total = std::uint64_t{1} << v;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    PointSet s;
    for (std::size_t p = 0; p < v; ++p)
      if ((mask >> p) & 1U) s.insert(p);
    if (is_hyperplane(c, s)) sets.push_back(s);
  }
  return finish(c, std::move(sets));
}

PointSet bipartition_points(const Bipartition& partition) {
  const int n = partition.ground_size();
  PointSet points;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (partition.same_side(a, b)) points.insert(pair_index(n, a, b));
  return points;
}

Hyperplane bipartition_hyperplane(int n, const std::vector<int>& side) {
  if (n < kMinGroundSet || n > kMaxGroundSet)
    throw GeometryError(ErrorCode::out_of_range, "ground set size " + std::to_string(n) + " not supported");
  const auto partition = Bipartition::from_elements(n, side);
  return Hyperplane{bipartition_points(partition), partition};
}

std::optional<Bipartition> match_bipartition(const IncidenceStructure& host, const PointSet& members) {
  const auto order = grassmannian_order(host);
  if (!order) return std::nullopt;
  return match_in_g2(*order, members);
}

std::optional<Bipartition> match_bipartition(int n, const PointSet& members) {
  if (n < kMinGroundSet || n > kMaxGroundSet) return std::nullopt;
  return match_in_g2(n, members);
}

}  // namespace vgeom
