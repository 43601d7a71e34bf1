#include "vgeom/veldkamp.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "vgeom/error.hpp"
#include "vgeom/grassmannian.hpp"

namespace vgeom {

std::string_view name(PointType t) {
  switch (t) {
    case PointType::alpha: return "alpha";
    case PointType::beta: return "beta";
    case PointType::gamma: return "gamma";
  }
  return "?";
}

std::string_view symbol(PointType t) {
  switch (t) {
    case PointType::alpha: return "α";
    case PointType::beta: return "β";
    case PointType::gamma: return "γ";
  }
  return "?";
}

LineType LineType::of(PointType a, PointType b, PointType c) {
  LineType t{{a, b, c}};
  std::sort(t.members.begin(), t.members.end());
  return t;
}

std::string LineType::name() const {
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) out += ',';
    out += vgeom::name(members[i]);
  }
  return out;
}

std::string LineType::symbol() const {
  std::string out = "(";
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) out += ',';
    out += vgeom::symbol(members[i]);
  }
  return out + ")";
}

namespace {
constexpr auto A = PointType::alpha;
constexpr auto B = PointType::beta;
constexpr auto G = PointType::gamma;
}  // namespace

const std::array<LineType, 7> kLineOrbits = {
    LineType{{A, A, A}}, LineType{{A, A, B}}, LineType{{A, A, G}}, LineType{{A, B, B}},
    LineType{{A, B, G}}, LineType{{B, B, B}}, LineType{{B, G, G}},
};

const std::array<LineType, 3> kAbsentLineTypes = {
    LineType{{A, G, G}}, LineType{{B, B, G}}, LineType{{G, G, G}},
};

const std::array<LineForm, 7> kLineForms = {{
    {LineType{{A, A, A}}, {"abcd:efg", "abef:cdg", "cdef:abg"}},
    {LineType{{A, A, B}}, {"abcd:efg", "abce:dfg", "abcfg:de"}},
    {LineType{{A, A, G}}, {"abc:defg", "def:abcg", "abcdef:g"}},
    {LineType{{A, B, B}}, {"abcd:efg", "ab:cdefg", "cd:abefg"}},
    {LineType{{A, B, G}}, {"abcd:efg", "abcde:fg", "abcdfg:e"}},
    {LineType{{B, B, B}}, {"abcde:fg", "abcdf:eg", "abcdg:ef"}},
    {LineType{{B, G, G}}, {"abcde:fg", "abcdef:g", "abcdeg:f"}},
}};

Bipartition instantiate_form(std::string_view form, std::span<const int> assignment) {
  std::string label;
  label.reserve(form.size());
  for (char ch : form) {
    if (ch >= 'a' && ch <= 'z') {
      const auto slot = static_cast<std::size_t>(ch - 'a');
      if (slot >= assignment.size())
        throw GeometryError(ErrorCode::invalid_argument,
                            "form letter '" + std::string(1, ch) + "' has no assigned element");
      label += static_cast<char>('0' + assignment[slot]);
    } else {
      label += ch;
    }
  }
  return Bipartition::parse(label);
}

std::vector<int> CoreDescriptor::component_sizes() const {
  std::vector<int> sizes;
  for (auto c : components) sizes.push_back(std::popcount(c));
  return sizes;
}

std::string CoreDescriptor::describe() const {
  if (!clique_union) return "irregular core of " + std::to_string(size) + " points";
  if (components.empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += " + ";
    out += grassmannian_name(std::popcount(components[i])) + ' ';
    for (int e = 1; e <= 9; ++e)
      if ((components[i] >> (e - 1)) & 1U) out += static_cast<char>('0' + e);
  }
  return out;
}

std::string CoreDescriptor::shape() const {
  if (!clique_union) return "irregular";
  if (components.empty()) return "empty";
  std::string out;
  std::size_t i = 0;
  while (i < components.size()) {
    const int m = std::popcount(components[i]);
    std::size_t j = i;
    while (j < components.size() && std::popcount(components[j]) == m) ++j;
    if (!out.empty()) out += " + ";
    const auto count = j - i;
    out += count == 1 ? grassmannian_name(m) : std::to_string(count) + " " + grassmannian_name(m) + "s";
    i = j;
  }
  return out;
}

CoreDescriptor describe_core(int n, const PointSet& core) {
  CoreDescriptor d;
  d.size = core.size();
  // Union-find over ground elements joined by core pairs.
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (core.contains(pair_index(n, a, b))) parent[find(a)] = find(b);

  std::map<int, std::uint32_t> groups;
  for (int e = 1; e <= n; ++e) groups[find(e)] |= std::uint32_t{1} << (e - 1);
  std::size_t clique_pairs = 0;
  for (const auto& [root, members] : groups) {
    const int m = std::popcount(members);
    if (m < 2) continue;
    d.components.push_back(members);
    clique_pairs += static_cast<std::size_t>(m * (m - 1) / 2);
  }
  d.clique_union = clique_pairs == d.size;
  std::sort(d.components.begin(), d.components.end(), [](auto x, auto y) {
    const int mx = std::popcount(x), my = std::popcount(y);
    if (mx != my) return mx > my;
    return std::countr_zero(x) < std::countr_zero(y);
  });
  return d;
}

std::optional<std::size_t> VeldkampSpace::find_point(const PointSet& members) const {
  auto it = point_index_.find(members);
  if (it == point_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t VeldkampSpace::line_through(std::size_t a, std::size_t b) const {
  if (a == b || a >= point_count() || b >= point_count())
    throw GeometryError(ErrorCode::invalid_argument, "line_through needs two distinct points");
  return joining_[a * point_count() + b];
}

std::optional<std::size_t> VeldkampSpace::find_line(std::size_t a, std::size_t b, std::size_t c) const {
  if (a == b || b == c || a == c) return std::nullopt;
  const auto l = line_through(a, b);
  const auto& members = lines_[l];
  if (std::find(members.begin(), members.end(), c) == members.end()) return std::nullopt;
  return l;
}

namespace {

void require_three_point_lines(const IncidenceStructure& c) {
  for (const auto& line : c.lines())
    if (line.size() != 3)
      throw GeometryError(ErrorCode::invalid_argument,
                          "Veldkamp lines are only formed for hosts whose lines have three points");
}

}  // namespace

Hyperplane third_point(const IncidenceStructure& c, const Hyperplane& a, const Hyperplane& b) {
  if (a.members == b.members)
    throw GeometryError(ErrorCode::invalid_argument, "third_point needs two distinct hyperplanes");
  require_three_point_lines(c);
  const auto members = c.all_points() - (a.members ^ b.members);
  if (!is_hyperplane(c, members))
    throw GeometryError(ErrorCode::not_a_hyperplane,
                        "complement of the symmetric difference is not a hyperplane: " + c.format(members));
  Hyperplane h{members, std::nullopt};
  if (a.partition && b.partition) h.partition = match_bipartition(a.partition->ground_size(), members);
  return h;
}

VeldkampSpace build_veldkamp(const IncidenceStructure& c) {
  require_three_point_lines(c);
  auto hyperplanes = enumerate_hyperplanes(c);
  if (hyperplanes.size() < 2)
    throw GeometryError(ErrorCode::invalid_argument, "Veldkamp space needs at least two hyperplanes");

  VeldkampSpace v;
  v.host_ = c;
  v.ground_size_ = grassmannian_order(c);

  std::vector<std::string> labels;
  labels.reserve(hyperplanes.size());
  for (const auto& h : hyperplanes) labels.push_back(h.label(c));
  std::vector<std::size_t> order(hyperplanes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return labels[x] < labels[y]; });
  for (auto i : order) v.points_.push_back(hyperplanes[i]);
  for (std::size_t i = 0; i < v.points_.size(); ++i) v.point_index_.emplace(v.points_[i].members, i);

  const auto n = v.points_.size();
  std::set<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto third = third_point(c, v.points_[i], v.points_[j]);
      const auto k = v.find_point(third.members);
      if (!k)
        throw GeometryError(ErrorCode::not_closed,
                            "third point of a Veldkamp line is missing from the hyperplane set");
      std::array<std::size_t, 3> t{i, j, *k};
      std::sort(t.begin(), t.end());
      triples.insert(t);
    }
  }

  std::vector<std::string> vlabels;
  for (const auto& h : v.points_) vlabels.push_back(h.label(c));
  std::vector<std::vector<std::size_t>> raw;
  raw.reserve(triples.size());
  for (const auto& t : triples) raw.push_back({t[0], t[1], t[2]});
  v.geometry_ = IncidenceStructure::from_indices(std::move(vlabels), raw);

  // Labels were pre-sorted, so geometry point i is hyperplane i.
  v.joining_.assign(n * n, 0);
  for (std::size_t l = 0; l < v.geometry_.line_count(); ++l) {
    const auto members = v.geometry_.line(l).members();
    v.lines_.push_back({members[0], members[1], members[2]});
    for (auto a : members)
      for (auto b : members) v.joining_[a * n + b] = l;

    const auto& h0 = v.points_[members[0]].members;
    const auto& h1 = v.points_[members[1]].members;
    const auto& h2 = v.points_[members[2]].members;
    const auto core = h0 & h1;
    if (core != (h0 & h2) || core != (h1 & h2))
      throw GeometryError(ErrorCode::invariant_violation,
                          "pairwise intersections differ on a Veldkamp line");
    v.cores_.push_back(core);
  }

  if (v.ground_size_ == 7) {
    for (const auto& h : v.points_) v.point_types_.push_back(classify_point(h));
    for (const auto& l : v.lines_)
      v.line_types_.push_back(
          LineType::of(v.point_types_[l[0]], v.point_types_[l[1]], v.point_types_[l[2]]));
  }
  return v;
}

PointType classify_point(const Hyperplane& h) {
  if (!h.partition || h.partition->ground_size() != 7)
    throw GeometryError(ErrorCode::invalid_argument, "point type needs a bipartition of {1..7}");
  switch (h.partition->minor_size()) {
    case 3: return PointType::alpha;
    case 2: return PointType::beta;
    case 1: return PointType::gamma;
    default: break;
  }
  throw GeometryError(ErrorCode::invariant_violation, "unexpected bipartition " + h.partition->label());
}

LineClass classify_line(const VeldkampSpace& v, std::size_t line) {
  if (!v.has_types())
    throw GeometryError(ErrorCode::invalid_argument, "line types are defined over G_2(7) only");
  return {v.line_type(line), v.core(line), describe_core(7, v.core(line))};
}

Census tabulate_census(const VeldkampSpace& v) {
  if (!v.has_types())
    throw GeometryError(ErrorCode::invalid_argument, "census is defined over G_2(7) only");
  Census census;
  census.points = v.point_count();
  census.lines = v.line_count();
  for (auto t : {PointType::alpha, PointType::beta, PointType::gamma}) census.point_types[t] = 0;
  for (std::size_t i = 0; i < v.point_count(); ++i) ++census.point_types[v.point_type(i)];
  for (const auto& t : kLineOrbits) census.line_types[t] = 0;
  for (const auto& t : kAbsentLineTypes) census.line_types[t] = 0;
  for (std::size_t l = 0; l < v.line_count(); ++l) {
    const auto cls = classify_line(v, l);
    ++census.line_types[cls.type];
    census.core_sizes[cls.type].insert(cls.core.size());
    census.core_shapes[cls.type].insert(cls.descriptor.shape());
  }
  const auto& g = v.geometry();
  census.min_lines_per_point = census.max_lines_per_point = g.lines_through(0).size();
  for (std::size_t p = 0; p < g.point_count(); ++p) {
    census.min_lines_per_point = std::min(census.min_lines_per_point, g.lines_through(p).size());
    census.max_lines_per_point = std::max(census.max_lines_per_point, g.lines_through(p).size());
  }
  return census;
}

namespace {

std::string pad(std::string s, std::size_t width) {
  // Greek letters are two bytes in UTF-8 but one column wide.
  std::size_t columns = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++columns;
  if (columns < width) s.append(width - columns, ' ');
  return s;
}

}  // namespace

std::string render_census(const Census& census) {
  static constexpr std::string_view kPointForms[] = {"abcd:efg", "abcde:fg", "abcdef:g"};
  static constexpr std::string_view kPointParts[] = {"Pasch + complementary line",
                                                     "Desargues + complementary point",
                                                     "Cayley-Salmon"};
  std::ostringstream out;
  out << "Points: " << census.points << "\n";
  out << pad("Type", 12) << pad("Form", 12) << pad("Constituents", 34) << "Number\n";
  std::size_t i = 0;
  for (const auto& [type, count] : census.point_types) {
    out << pad(std::string(symbol(type)), 12) << pad(std::string(kPointForms[i]), 12)
        << pad(std::string(kPointParts[i]), 34) << count << "\n";
    ++i;
  }
  out << "\nLines: " << census.lines << "\n";
  out << pad("Type", 12) << pad("Form", 32) << pad("Core composition", 28) << pad("Core size", 11)
      << "Number\n";
  for (const auto& form : kLineForms) {
    const auto& t = form.type;
    std::string forms;
    for (std::size_t f = 0; f < 3; ++f) forms += std::string(f ? " / " : "") + std::string(form.forms[f]);
    std::string shapes, sizes;
    if (auto it = census.core_shapes.find(t); it != census.core_shapes.end())
      for (const auto& s : it->second) shapes += (shapes.empty() ? "" : "; ") + s;
    if (auto it = census.core_sizes.find(t); it != census.core_sizes.end())
      for (auto s : it->second) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
    out << pad(t.symbol(), 12) << pad(forms, 32) << pad(shapes, 28) << pad(sizes, 11)
        << census.line_types.at(t) << "\n";
  }
  out << "\nAbsent types:";
  for (const auto& t : kAbsentLineTypes) out << " " << t.symbol() << "=" << census.line_types.at(t);
  out << "\nLines per point: " << census.min_lines_per_point;
  if (census.max_lines_per_point != census.min_lines_per_point) out << ".." << census.max_lines_per_point;
  out << "\n";
  return out.str();
}

std::size_t relabel_point(const VeldkampSpace& v, std::size_t point, const std::vector<int>& perm) {
  const auto& partition = v.point(point).partition;
  if (!partition)
    throw GeometryError(ErrorCode::invalid_argument, "relabelling needs bipartition-labelled points");
  const auto image = v.find_point(partition->relabel(perm).label());
  if (!image) throw GeometryError(ErrorCode::invariant_violation, "relabelled point is missing");
  return *image;
}

std::set<std::size_t> form_lines(const VeldkampSpace& v, const LineForm& form) {
  if (v.ground_size() != 7)
    throw GeometryError(ErrorCode::invalid_argument, "line forms are defined over G_2(7) only");
  std::set<std::size_t> result;
  std::array<int, 7> assignment{1, 2, 3, 4, 5, 6, 7};
  do {
    std::array<std::size_t, 3> idx{};
    for (std::size_t f = 0; f < 3; ++f) {
      const auto label = instantiate_form(form.forms[f], assignment).label();
      const auto p = v.find_point(label);
      if (!p) throw GeometryError(ErrorCode::invariant_violation, "form instance " + label + " is not a point");
      idx[f] = *p;
    }
    const auto l = v.find_line(idx[0], idx[1], idx[2]);
    if (!l)
      throw GeometryError(ErrorCode::invariant_violation,
                          "form instance " + v.label(idx[0]) + ", " + v.label(idx[1]) + ", " +
                              v.label(idx[2]) + " is not a line");
    result.insert(*l);
  } while (std::next_permutation(assignment.begin(), assignment.end()));
  return result;
}

}  // namespace vgeom
