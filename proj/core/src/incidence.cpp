#include "vgeom/incidence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vgeom/error.hpp"

namespace vgeom {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::duplicate_label: return "duplicate label";
    case ErrorCode::unknown_point: return "unknown point";
    case ErrorCode::duplicate_line: return "duplicate line";
    case ErrorCode::repeated_point: return "repeated point";
    case ErrorCode::empty_line: return "empty line";
    case ErrorCode::capacity_exceeded: return "capacity exceeded";
    case ErrorCode::out_of_range: return "out of range";
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::not_a_hyperplane: return "not a hyperplane";
    case ErrorCode::not_closed: return "not closed";
    case ErrorCode::invariant_violation: return "invariant violation";
  }
  return "unknown";
}

IncidenceStructure IncidenceStructure::create(std::vector<std::string> labels,
                                              const std::vector<std::vector<std::string>>& lines) {
  std::unordered_map<std::string, std::size_t> lookup;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!lookup.emplace(labels[i], i).second)
      throw GeometryError(ErrorCode::duplicate_label, "duplicate point label '" + labels[i] + "'");
  }
  std::vector<std::vector<std::size_t>> indexed;
  indexed.reserve(lines.size());
  for (const auto& line : lines) {
    std::vector<std::size_t> members;
    members.reserve(line.size());
    for (const auto& l : line) {
      auto it = lookup.find(l);
      if (it == lookup.end())
        throw GeometryError(ErrorCode::unknown_point, "line references unknown point '" + l + "'");
      members.push_back(it->second);
    }
    indexed.push_back(std::move(members));
  }
  return from_indices(std::move(labels), indexed);
}

IncidenceStructure IncidenceStructure::from_indices(std::vector<std::string> labels,
                                                    const std::vector<std::vector<std::size_t>>& lines) {
  if (labels.size() > kMaxPoints)
    throw GeometryError(ErrorCode::capacity_exceeded,
                        "structure has " + std::to_string(labels.size()) + " points; at most " +
                            std::to_string(kMaxPoints) + " are supported");

  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return labels[a] < labels[b]; });
  std::vector<std::size_t> new_index(labels.size());
  IncidenceStructure c;
  c.labels_.reserve(labels.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_index[order[i]] = i;
    c.labels_.push_back(std::move(labels[order[i]]));
  }
  for (std::size_t i = 1; i < c.labels_.size(); ++i) {
    if (c.labels_[i] == c.labels_[i - 1])
      throw GeometryError(ErrorCode::duplicate_label, "duplicate point label '" + c.labels_[i] + "'");
  }

  c.lines_.reserve(lines.size());
  for (const auto& line : lines) {
    if (line.empty()) throw GeometryError(ErrorCode::empty_line, "line with no points");
    PointSet set;
    for (auto p : line) {
      if (p >= new_index.size())
        throw GeometryError(ErrorCode::unknown_point,
                            "line references unknown point index " + std::to_string(p));
      const auto q = new_index[p];
      if (set.contains(q))
        throw GeometryError(ErrorCode::repeated_point,
                            "point '" + c.labels_[q] + "' repeated within a line");
      set.insert(q);
    }
    c.lines_.push_back(set);
  }
  std::sort(c.lines_.begin(), c.lines_.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  for (std::size_t i = 1; i < c.lines_.size(); ++i) {
    if (c.lines_[i] == c.lines_[i - 1])
      throw GeometryError(ErrorCode::duplicate_line, "duplicate line " + c.format(c.lines_[i]));
  }
  c.index();
  return c;
}

void IncidenceStructure::index() {
  label_index_.clear();
  line_index_.clear();
  for (std::size_t i = 0; i < labels_.size(); ++i) label_index_.emplace(labels_[i], i);
  lines_through_.assign(labels_.size(), {});
  neighbours_.assign(labels_.size(), PointSet{});
  for (std::size_t l = 0; l < lines_.size(); ++l) {
    line_index_.emplace(lines_[l], l);
    for (auto p : lines_[l]) {
      lines_through_[p].push_back(l);
      neighbours_[p] |= lines_[l];
    }
  }
  for (std::size_t p = 0; p < labels_.size(); ++p) neighbours_[p].erase(p);
}

std::optional<std::size_t> IncidenceStructure::index_of(const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> IncidenceStructure::find_line(const PointSet& points) const {
  auto it = line_index_.find(points);
  if (it == line_index_.end()) return std::nullopt;
  return it->second;
}

std::string IncidenceStructure::format(const PointSet& points) const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto p : points) {
    if (!first) out << ',';
    first = false;
    out << (p < labels_.size() ? labels_[p] : std::to_string(p));
  }
  out << '}';
  return out.str();
}

IncidenceStructure IncidenceStructure::restrict_to(const PointSet& points,
                                                   std::span<const std::size_t> line_indices) const {
  std::vector<std::size_t> old_to_new(point_count(), kMaxPoints);
  std::vector<std::string> labels;
  for (auto p : points) {
    old_to_new.at(p) = labels.size();
    labels.push_back(labels_.at(p));
  }
  std::vector<std::vector<std::size_t>> lines;
  lines.reserve(line_indices.size());
  for (auto l : line_indices) {
    const auto& line = lines_.at(l);
    if (!line.is_subset_of(points))
      throw GeometryError(ErrorCode::invalid_argument,
                          "line " + format(line) + " is not inside the restricted point set");
    std::vector<std::size_t> members;
    for (auto p : line) members.push_back(old_to_new[p]);
    lines.push_back(std::move(members));
  }
  return from_indices(std::move(labels), lines);
}

ConfigurationParameters configuration_parameters(const IncidenceStructure& c) {
  ConfigurationParameters params;
  params.v = c.point_count();
  params.b = c.line_count();
  if (params.v > 0) {
    params.r_min = c.lines_through(0).size();
    params.r_max = params.r_min;
    for (std::size_t p = 1; p < params.v; ++p) {
      params.r_min = std::min(params.r_min, c.lines_through(p).size());
      params.r_max = std::max(params.r_max, c.lines_through(p).size());
    }
  }
  if (params.b > 0) {
    params.k_min = c.line(0).size();
    params.k_max = params.k_min;
    for (const auto& line : c.lines()) {
      params.k_min = std::min(params.k_min, line.size());
      params.k_max = std::max(params.k_max, line.size());
    }
  }
  params.r_regular = params.r_min == params.r_max;
  params.k_regular = params.k_min == params.k_max;
  params.linear = !linearity_violation(c).has_value();
  return params;
}

std::optional<Witness> linearity_violation(const IncidenceStructure& c) {
  const auto lines = c.lines();
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      const auto common = lines[a] & lines[b];
      if (common.size() >= 2)
        return Witness{"two lines share " + std::to_string(common.size()) + " points",
                       common.members(), {a, b}};
    }
  }
  return std::nullopt;
}

std::size_t collinear_count(const IncidenceStructure& c, std::size_t point, std::size_t line) {
  return (c.neighbours(point) & c.line(line)).size();
}

GQParameters check_gq(const IncidenceStructure& c) {
  GQParameters result;
  if (c.point_count() == 0 || c.line_count() == 0) {
    result.failure = GqFailure::degenerate;
    result.witness = Witness{"degenerate structure", {}, {}};
    return result;
  }
  if (auto w = linearity_violation(c)) {
    result.failure = GqFailure::not_linear;
    result.witness = std::move(w);
    return result;
  }
  for (std::size_t x = 0; x < c.point_count(); ++x) {
    for (std::size_t l = 0; l < c.line_count(); ++l) {
      if (c.line(l).contains(x)) continue;
      const auto seen = collinear_count(c, x, l);
      if (seen != 1) {
        result.failure = GqFailure::transversal;
        result.witness = Witness{"point is collinear with " + std::to_string(seen) +
                                     " points of a line not through it",
                                 {x}, {l}};
        return result;
      }
    }
  }
  const auto params = configuration_parameters(c);
  if (!params.k_regular || params.k_min < 2) {
    result.failure = GqFailure::line_size;
    result.witness = Witness{"line sizes range over [" + std::to_string(params.k_min) + ", " +
                                 std::to_string(params.k_max) + "]",
                             {}, {}};
    return result;
  }
  if (!params.r_regular || params.r_min < 2) {
    result.failure = GqFailure::point_degree;
    result.witness = Witness{"points lie on between " + std::to_string(params.r_min) + " and " +
                                 std::to_string(params.r_max) + " lines",
                             {}, {}};
    return result;
  }
  result.valid = true;
  result.failure = GqFailure::none;
  result.s = params.k_min - 1;
  result.t = params.r_min - 1;
  return result;
}

std::size_t CollinearityGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& adj : adjacency) twice += adj.size();
  return twice / 2;
}

CollinearityGraph collinearity_graph(const IncidenceStructure& c) {
  CollinearityGraph g;
  g.labels.assign(c.labels().begin(), c.labels().end());
  g.adjacency.reserve(c.point_count());
  for (std::size_t p = 0; p < c.point_count(); ++p) g.adjacency.push_back(c.neighbours(p));
  return g;
}

std::optional<SrgParameters> srg_parameters(const CollinearityGraph& g) {
  const auto n = g.vertex_count();
  if (n == 0) return std::nullopt;
  SrgParameters params;
  params.n = n;
  params.k = g.degree(0);
  std::optional<std::size_t> lambda, mu;
  for (std::size_t a = 0; a < n; ++a) {
    if (g.degree(a) != params.k || g.adjacent(a, a)) return std::nullopt;
    for (std::size_t b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b) != g.adjacent(b, a)) return std::nullopt;
      const auto common = g.adjacency[a].intersection_size(g.adjacency[b]);
      auto& slot = g.adjacent(a, b) ? lambda : mu;
      if (!slot) slot = common;
      else if (*slot != common) return std::nullopt;
    }
  }
  params.lambda = lambda.value_or(0);
  params.mu = mu.value_or(0);
  params.complete = !mu.has_value();
  return params;
}

namespace {

std::optional<Witness> degenerate(const IncidenceStructure& c) {
  if (c.point_count() == 0 || c.line_count() == 0) return Witness{"degenerate structure", {}, {}};
  return std::nullopt;
}

}  // namespace

AxiomCheck check_one_or_all(const IncidenceStructure& c) {
  if (auto w = degenerate(c)) return {false, std::move(w)};
  if (auto w = linearity_violation(c)) return {false, std::move(w)};
  for (std::size_t x = 0; x < c.point_count(); ++x) {
    for (std::size_t l = 0; l < c.line_count(); ++l) {
      const auto& line = c.line(l);
      if (line.contains(x)) continue;
      const auto seen = collinear_count(c, x, l);
      if (seen != 1 && seen != line.size())
        return {false, Witness{"point is collinear with " + std::to_string(seen) + " of " +
                                   std::to_string(line.size()) + " points of a line",
                               {x}, {l}}};
    }
  }
  return {true, std::nullopt};
}

AxiomCheck check_projective(const IncidenceStructure& c) {
  if (auto w = degenerate(c)) return {false, std::move(w)};
  if (auto w = linearity_violation(c)) return {false, std::move(w)};
  const auto v = c.point_count();
  const auto all = c.all_points();
  for (std::size_t p = 0; p < v; ++p) {
    PointSet others = all;
    others.erase(p);
    const auto missing = others - c.neighbours(p);
    if (!missing.empty())
      return {false, Witness{"two points are on no common line", {p, *missing.first()}, {}}};
  }

  // With linearity and full collinearity, every pair has exactly one line.
  std::vector<std::size_t> joining(v * v, 0);
  for (std::size_t l = 0; l < c.line_count(); ++l)
    for (auto a : c.line(l))
      for (auto b : c.line(l)) joining[a * v + b] = l;

  const auto lines = c.lines();
  for (std::size_t l1 = 0; l1 < lines.size(); ++l1) {
    for (std::size_t l2 = l1 + 1; l2 < lines.size(); ++l2) {
      const auto meet = lines[l1] & lines[l2];
      if (meet.empty()) continue;
      const auto p = *meet.first();
      const auto rest1 = (lines[l1] - meet).members();
      const auto rest2 = (lines[l2] - meet).members();
      for (std::size_t i = 0; i < rest1.size(); ++i) {
        for (std::size_t j = i + 1; j < rest1.size(); ++j) {
          for (auto b : rest2) {
            for (auto b2 : rest2) {
              if (b == b2) continue;
              const auto m1 = joining[rest1[i] * v + b];
              const auto m2 = joining[rest1[j] * v + b2];
              if (!lines[m1].intersects(lines[m2]))
                return {false, Witness{"Veblen-Young: transversals of two meeting lines are disjoint",
                                       {p, rest1[i], b, rest1[j], b2}, {l1, l2, m1, m2}}};
            }
          }
        }
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace vgeom
