#ifndef VGEOM_GRASSMANNIAN_HPP
#define VGEOM_GRASSMANNIAN_HPP

#include <optional>
#include <string>

#include "vgeom/incidence.hpp"

namespace vgeom {

inline constexpr int kMinGroundSet = 3;
inline constexpr int kMaxGroundSet = 9;

/// Canonical label of the pair {a, b}, e.g. pair_label(5, 2) == "25".
std::string pair_label(int a, int b);

/// Canonical index of the pair {a, b} in G_2(n), matching build_g2(n).
std::size_t pair_index(int n, int a, int b);

/// The combinatorial Grassmannian G_k(n): k-subsets as points, (k+1)-subsets
/// as lines, incidence by inclusion. Only k = 2 is supported.
IncidenceStructure build_grassmannian(int n, int k = 2);

/// G_2(n) for 3 <= n <= 9.
inline IncidenceStructure build_g2(int n) { return build_grassmannian(n, 2); }

/// Returns n if `c` is exactly G_2(n) (labels and lines), otherwise nullopt.
std::optional<int> grassmannian_order(const IncidenceStructure& c);

/// "line", "Pasch", "Desargues", "Cayley-Salmon" or "unnamed", by the
/// (v, b, r, k) parameters of G_2(3..6).
std::string named_configuration(const IncidenceStructure& c);

/// Name for a core component consisting of all pairs within an m-set.
std::string grassmannian_name(int m);

}  // namespace vgeom

#endif  // VGEOM_GRASSMANNIAN_HPP
