#include "vgeom/export.hpp"

#include <sstream>

#include <json.hpp>

namespace vgeom {

using Json = nlohmann::ordered_json;

namespace {

Json label_list(const IncidenceStructure& c, const PointSet& points) {
  Json out = Json::array();
  for (auto p : points) out.push_back(c.label(p));
  return out;
}

Json line_labels(const VeldkampSpace& v, std::span<const std::size_t> lines) {
  Json out = Json::array();
  for (auto l : lines) {
    Json triple = Json::array();
    for (auto p : v.line(l)) triple.push_back(v.label(p));
    out.push_back(std::move(triple));
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string structure_to_json(const IncidenceStructure& c) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["points"] = Json::array();
  for (std::size_t p = 0; p < c.point_count(); ++p) j["points"].push_back({{"id", p}, {"label", c.label(p)}});
  j["lines"] = Json::array();
  for (const auto& line : c.lines()) j["lines"].push_back(line.members());
  return dump(j);
}

std::string collinearity_to_dot(const CollinearityGraph& g) {
  std::ostringstream out;
  out << "graph collinearity {\n";
  for (const auto& label : g.labels) out << "  " << quoted(label) << ";\n";
  for (std::size_t a = 0; a < g.vertex_count(); ++a)
    for (auto b : g.adjacency[a])
      if (b > a) out << "  " << quoted(g.labels[a]) << " -- " << quoted(g.labels[b]) << ";\n";
  out << "}\n";
  return out.str();
}

std::string hyperplanes_to_json(const IncidenceStructure& host, std::span<const Hyperplane> hyperplanes) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["hyperplanes"] = Json::array();
  for (const auto& h : hyperplanes) {
    Json entry;
    entry["partition"] = h.partition ? Json(h.partition->label()) : Json(nullptr);
    entry["points"] = label_list(host, h.members);
    j["hyperplanes"].push_back(std::move(entry));
  }
  return dump(j);
}

std::string census_to_json(const VeldkampSpace& v, const Census& census) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["points"] = census.points;
  j["lines"] = census.lines;
  j["point_types"] = Json::object();
  for (const auto& [t, n] : census.point_types) j["point_types"][std::string(name(t))] = n;
  j["line_types"] = Json::array();
  for (const auto& [t, n] : census.line_types) {
    Json entry;
    entry["type"] = t.name();
    entry["count"] = n;
    if (auto it = census.core_sizes.find(t); it != census.core_sizes.end())
      entry["core_sizes"] = std::vector<std::size_t>(it->second.begin(), it->second.end());
    if (auto it = census.core_shapes.find(t); it != census.core_shapes.end())
      entry["core_shapes"] = std::vector<std::string>(it->second.begin(), it->second.end());
    j["line_types"].push_back(std::move(entry));
  }
  j["lines_per_point"] = {census.min_lines_per_point, census.max_lines_per_point};
  j["vpoints"] = Json::array();
  for (std::size_t i = 0; i < v.point_count(); ++i)
    j["vpoints"].push_back({{"label", v.label(i)}, {"type", std::string(name(v.point_type(i)))}});
  return dump(j);
}

std::string subspace_to_json(const VeldkampSpace& v, const PolarSubspace& s) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = std::string(name(s.kind));
  j["points"] = label_list(v.geometry(), s.points);
  j["lines"] = line_labels(v, s.lines);
  return dump(j);
}

std::string magic_lines_to_json(const VeldkampSpace& v, std::span<const MagicLineDecomposition> lines) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["magic_lines"] = Json::array();
  for (const auto& m : lines) {
    Json entry;
    entry["pivot"] = m.pivot;
    entry["vertex"] = v.label(m.vertex);
    Json sectors = Json::object();
    for (auto s : {Sector::core, Sector::elliptic, Sector::hyperbolic, Sector::cone}) {
      sectors[std::string(name(s))] = {{"points", label_list(v.geometry(), m.sector_points(s))},
                                       {"lines", line_labels(v, m.sector_lines(s))}};
    }
    entry["sectors"] = std::move(sectors);
    entry["cone_induced_lines"] = line_labels(v, m.cone_induced_lines);
    j["magic_lines"].push_back(std::move(entry));
  }
  return dump(j);
}

std::string magic_line_to_dot(const VeldkampSpace& v, const PolarSubspace& w, const MagicLineDecomposition& m) {
  static constexpr const char* kColours[] = {"black", "blue", "green", "red"};
  std::ostringstream out;
  out << "graph magic_line_" << m.pivot << " {\n";
  for (std::size_t p = 0; p < v.point_count(); ++p) {
    const auto s = sector_of(v, p, m.pivot);
    out << "  " << quoted(v.label(p)) << " [sector=" << name(s) << ", type=" << name(v.point_type(p))
        << ", color=" << kColours[static_cast<int>(s)];
    if (p == m.vertex) out << ", shape=doublecircle";
    out << "];\n";
  }
  const auto g = collinearity_graph(w.as_incidence(v));
  for (std::size_t a = 0; a < g.vertex_count(); ++a)
    for (auto b : g.adjacency[a])
      if (b > a) out << "  " << quoted(g.labels[a]) << " -- " << quoted(g.labels[b]) << ";\n";
  out << "}\n";
  return out.str();
}

std::string reports_to_json(std::span<const Report> reports) {
  Json j;
  j["schema"] = kSchemaVersion;
  bool all = true;
  j["reports"] = Json::array();
  for (const auto& r : reports) {
    all &= r.passed();
    Json entry;
    entry["title"] = r.title;
    entry["passed"] = r.passed();
    entry["checks"] = Json::array();
    for (const auto& c : r.checks)
      entry["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["reports"].push_back(std::move(entry));
  }
  j["passed"] = all;
  return dump(j);
}

}  // namespace vgeom
