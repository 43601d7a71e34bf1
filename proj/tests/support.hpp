#ifndef VGEOM_TESTS_SUPPORT_HPP
#define VGEOM_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "oracles.hpp"
#include "vgeom/incidence.hpp"

namespace test_support {

inline vgeom::IncidenceStructure to_structure(const oracle::RawStructure& raw) {
  std::vector<std::vector<std::string>> lines;
  for (const auto& l : raw.lines) lines.emplace_back(l.begin(), l.end());
  return vgeom::IncidenceStructure::create(raw.points, lines);
}

inline oracle::LabelSet labels_of(const vgeom::IncidenceStructure& c, const vgeom::PointSet& s) {
  oracle::LabelSet out;
  for (auto p : s) out.insert(c.label(p));
  return out;
}

/// Random structure with 3-point lines on `v` points, each line kept with
/// probability `density`, rejecting lines that would break linearity.
inline oracle::RawStructure random_linear(std::mt19937& rng, std::size_t v, double density) {
  oracle::RawStructure s;
  for (std::size_t i = 0; i < v; ++i) s.points.push_back("p" + std::to_string(10 + i));
  std::bernoulli_distribution keep(density);
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b)
      for (std::size_t c = b + 1; c < v; ++c) {
        if (!keep(rng)) continue;
        oracle::LabelSet line{s.points[a], s.points[b], s.points[c]};
        bool linear = true;
        for (const auto& l : s.lines) {
          std::size_t common = 0;
          for (const auto& p : line) common += l.count(p);
          if (common >= 2) linear = false;
        }
        if (linear) s.lines.push_back(line);
      }
  return s;
}

}  // namespace test_support

#endif  // VGEOM_TESTS_SUPPORT_HPP
