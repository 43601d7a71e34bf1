// Brute-force reference computations used as test oracles. They work on
// plain label sets and share no code with the library's bit-set machinery.
#ifndef VGEOM_TESTS_ORACLES_HPP
#define VGEOM_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Label = std::string;
using LabelSet = std::set<Label>;

struct RawStructure {
  std::vector<Label> points;
  std::vector<LabelSet> lines;
};

inline RawStructure g2(int n) {
  RawStructure s;
  auto pair = [](int a, int b) { return std::to_string(a) + std::to_string(b); };
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) s.points.push_back(pair(a, b));
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) s.lines.push_back({pair(a, b), pair(a, c), pair(b, c)});
  return s;
}

inline RawStructure grid3() {
  RawStructure s;
  auto p = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s.points.push_back(p(i, j));
  for (int i = 0; i < 3; ++i) {
    s.lines.push_back({p(i, 0), p(i, 1), p(i, 2)});
    s.lines.push_back({p(0, i), p(1, i), p(2, i)});
  }
  return s;
}

inline RawStructure fano() {
  RawStructure s{{"1", "2", "3", "4", "5", "6", "7"}, {}};
  for (const char* l : {"124", "235", "346", "457", "561", "672", "713"}) {
    LabelSet line;
    for (const char* c = l; *c; ++c) line.insert(std::string(1, *c));
    s.lines.push_back(line);
  }
  return s;
}

inline bool collinear(const RawStructure& s, const Label& a, const Label& b) {
  if (a == b) return false;
  for (const auto& l : s.lines)
    if (l.count(a) && l.count(b)) return true;
  return false;
}

inline std::size_t degree(const RawStructure& s, const Label& a) {
  std::size_t d = 0;
  for (const auto& b : s.points) d += collinear(s, a, b) ? 1 : 0;
  return d;
}

/// Every subset of the points satisfying the hyperplane law, by direct scan.
inline std::set<LabelSet> hyperplanes(const RawStructure& s) {
  std::set<LabelSet> out;
  const auto v = s.points.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v); ++mask) {
    if (mask == (std::uint64_t{1} << v) - 1) continue;
    LabelSet subset;
    for (std::size_t i = 0; i < v; ++i)
      if ((mask >> i) & 1U) subset.insert(s.points[i]);
    bool ok = true;
    for (const auto& l : s.lines) {
      std::size_t meet = 0;
      for (const auto& p : l) meet += subset.count(p);
      if (meet != 1 && meet != l.size()) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(subset);
  }
  return out;
}

/// Pairs within each side of the split of {1..n} given by `side` (bit e-1 = element e).
inline LabelSet bipartition(int n, std::uint32_t side) {
  LabelSet out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (((side >> (a - 1)) & 1U) == ((side >> (b - 1)) & 1U))
        out.insert(std::to_string(a) + std::to_string(b));
  return out;
}

/// Complement of the symmetric difference, within `universe`.
inline LabelSet third(const std::vector<Label>& universe, const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  for (const auto& p : universe)
    if (a.count(p) == b.count(p)) out.insert(p);
  return out;
}

/// Strong-regularity parameters by counting common neighbours of every pair;
/// returns {-1,...} when not strongly regular.
struct Srg {
  long n = -1, k = -1, lambda = -1, mu = -1;
};

inline Srg srg(const std::vector<std::vector<bool>>& adj) {
  Srg out;
  const auto n = adj.size();
  std::set<long> ks, lambdas, mus;
  for (std::size_t a = 0; a < n; ++a) {
    long k = 0;
    for (std::size_t b = 0; b < n; ++b) k += adj[a][b] ? 1 : 0;
    ks.insert(k);
    for (std::size_t b = a + 1; b < n; ++b) {
      long common = 0;
      for (std::size_t c = 0; c < n; ++c) common += (adj[a][c] && adj[b][c]) ? 1 : 0;
      (adj[a][b] ? lambdas : mus).insert(common);
    }
  }
  if (ks.size() != 1 || lambdas.size() > 1 || mus.size() > 1) return out;
  out.n = static_cast<long>(n);
  out.k = *ks.begin();
  out.lambda = lambdas.empty() ? 0 : *lambdas.begin();
  out.mu = mus.empty() ? 0 : *mus.begin();
  return out;
}

}  // namespace oracle

#endif  // VGEOM_TESTS_ORACLES_HPP
