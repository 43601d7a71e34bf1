#include "vgeom/grassmannian.hpp"

#include <utility>

#include "vgeom/error.hpp"

namespace vgeom {

std::string pair_label(int a, int b) {
  if (a > b) std::swap(a, b);
  return std::to_string(a) + std::to_string(b);
}

std::size_t pair_index(int n, int a, int b) {
  if (a > b) std::swap(a, b);
  if (a < 1 || b > n || a == b)
    throw GeometryError(ErrorCode::out_of_range, "invalid pair {" + std::to_string(a) + "," +
                                                     std::to_string(b) + "} in a ground set of size " +
                                                     std::to_string(n));
  // Labels are two digits with a < b, so label order is (a, b) order.
  std::size_t index = 0;
  for (int i = 1; i < a; ++i) index += static_cast<std::size_t>(n - i);
  return index + static_cast<std::size_t>(b - a - 1);
}

IncidenceStructure build_grassmannian(int n, int k) {
  if (k != 2)
    throw GeometryError(ErrorCode::invalid_argument,
                        "only k = 2 Grassmannians are supported (got k = " + std::to_string(k) + ")");
  if (n < kMinGroundSet || n > kMaxGroundSet)
    throw GeometryError(ErrorCode::out_of_range, "ground set size " + std::to_string(n) +
                                                     " outside [" + std::to_string(kMinGroundSet) +
                                                     ", " + std::to_string(kMaxGroundSet) + "]");
  std::vector<std::string> labels;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) labels.push_back(pair_label(a, b));

  std::vector<std::vector<std::string>> lines;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        lines.push_back({pair_label(a, b), pair_label(a, c), pair_label(b, c)});
  return IncidenceStructure::create(std::move(labels), lines);
}

std::optional<int> grassmannian_order(const IncidenceStructure& c) {
  for (int n = kMinGroundSet; n <= kMaxGroundSet; ++n) {
    if (static_cast<std::size_t>(n * (n - 1) / 2) != c.point_count()) continue;
    if (c == build_g2(n)) return n;
  }
  return std::nullopt;
}

std::string named_configuration(const IncidenceStructure& c) {
  const auto p = configuration_parameters(c);
  if (!p.regular() || !p.linear || p.k() != 3) return "unnamed";
  struct Named {
    std::size_t v, b, r;
    const char* name;
  };
  static constexpr Named kNamed[] = {
      {3, 1, 1, "line"},
      {6, 4, 2, "Pasch"},
      {10, 10, 3, "Desargues"},
      {15, 20, 4, "Cayley-Salmon"},
  };
  for (const auto& n : kNamed)
    if (p.v == n.v && p.b == n.b && p.r() == n.r) return n.name;
  return "unnamed";
}

std::string grassmannian_name(int m) {
  switch (m) {
    case 2: return "point";
    case 3: return "line";
    case 4: return "Pasch";
    case 5: return "Desargues";
    case 6: return "Cayley-Salmon";
    default: return "G2(" + std::to_string(m) + ")";
  }
}

}  // namespace vgeom
