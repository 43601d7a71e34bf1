#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "vgeom/error.hpp"
#include "vgeom/export.hpp"
#include "vgeom/grassmannian.hpp"
#include "vgeom/hyperplanes.hpp"
#include "vgeom/magic_line.hpp"
#include "vgeom/polar.hpp"
#include "vgeom/veldkamp.hpp"

namespace vgeom::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << contents;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

std::string to_string(std::size_t a, std::size_t b) {
  return std::to_string(a) + "/" + std::to_string(b);
}

std::string count_detail(std::size_t got, std::size_t want) {
  return std::to_string(got) + " (expected " + std::to_string(want) + ")";
}

std::vector<PointSet> bipartition_sets(int n) {
  std::set<Bipartition> partitions;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t side = 1; side < full; ++side) partitions.insert(Bipartition::from_side(n, side));
  std::vector<PointSet> sets;
  for (const auto& p : partitions) sets.push_back(bipartition_points(p));
  return sets;
}

bool same_sets(std::vector<PointSet> a, std::vector<PointSet> b) {
  auto less = [](const PointSet& x, const PointSet& y) { return lex_less(x, y); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

std::vector<PointSet> members_of(std::span<const Hyperplane> hs) {
  std::vector<PointSet> out;
  for (const auto& h : hs) out.push_back(h.members);
  return out;
}

void require_seven(int n, const char* what) {
  if (n != 7) throw UsageError(std::string(what) + " is defined for --n 7 only");
}

// Point-type and line-type counts from the two census tables.
constexpr std::size_t kPointTypeCounts[] = {35, 21, 7};
constexpr std::size_t kLineOrbitCounts[] = {105, 210, 70, 105, 105, 35, 21};
constexpr std::size_t kLineOrbitCoreSizes[] = {3, 4, 6, 5, 7, 6, 10};

}  // namespace

std::vector<Report> verify_all(int n) {
  require_seven(n, "verify-all");
  std::vector<Report> reports;

  const auto g27 = build_g2(7);
  const auto hyperplanes = enumerate_hyperplanes(g27);
  {
    Report r{"1. hyperplane census", {}, std::nullopt};
    r.add("63 hyperplanes", hyperplanes.size() == 63, count_detail(hyperplanes.size(), 63));
    r.add("equal to the bipartition hyperplanes", same_sets(members_of(hyperplanes), bipartition_sets(7)));
    std::size_t counts[3] = {0, 0, 0};
    bool labelled = true;
    for (const auto& h : hyperplanes) {
      labelled &= h.partition.has_value();
      if (h.partition) ++counts[static_cast<int>(classify_point(h))];
    }
    r.add("every hyperplane carries a partition label", labelled);
    for (int t = 0; t < 3; ++t)
      r.add(std::string(name(static_cast<PointType>(t))) + " points", counts[t] == kPointTypeCounts[t],
            count_detail(counts[t], kPointTypeCounts[t]));
    reports.push_back(std::move(r));
  }
  {
    Report r{"2. oracle equivalence", {}, std::nullopt};
    for (int m = 4; m <= 6; ++m) {
      const auto g = build_g2(m);
      const auto fast = enumerate_hyperplanes(g);
      const auto slow = enumerate_hyperplanes_by_scan(g);
      r.add("G2(" + std::to_string(m) + ") backtracking == scan", members_of(fast) == members_of(slow),
            to_string(fast.size(), slow.size()));
    }
    reports.push_back(std::move(r));
  }

  const auto v = build_veldkamp(g27);
  const auto census = tabulate_census(v);
  {
    Report r{"3. Veldkamp census", {}, std::nullopt};
    r.add("63 points", census.points == 63, count_detail(census.points, 63));
    r.add("651 lines", census.lines == 651, count_detail(census.lines, 651));
    for (std::size_t i = 0; i < kLineOrbits.size(); ++i) {
      const auto got = census.line_types.at(kLineOrbits[i]);
      r.add(kLineOrbits[i].symbol() + " lines", got == kLineOrbitCounts[i], count_detail(got, kLineOrbitCounts[i]));
    }
    for (const auto& t : kAbsentLineTypes)
      r.add(t.symbol() + " absent", census.line_types.at(t) == 0, std::to_string(census.line_types.at(t)));
    r.add("31 lines per point", census.min_lines_per_point == 31 && census.max_lines_per_point == 31,
          to_string(census.min_lines_per_point, census.max_lines_per_point));
    const auto projective = check_projective(v.geometry());
    r.add("projective space", projective.holds, projective.witness ? projective.witness->reason : "");
    bool forms_match = true;
    for (const auto& form : kLineForms) {
      std::set<std::size_t> typed;
      for (std::size_t l = 0; l < v.line_count(); ++l)
        if (v.line_type(l) == form.type) typed.insert(l);
      forms_match &= form_lines(v, form) == typed;
    }
    r.add("symbolic line forms reproduce the orbits", forms_match);
    reports.push_back(std::move(r));
  }
  {
    Report r{"4. core parity", {}, std::nullopt};
    bool pairwise = true;
    for (std::size_t l = 0; l < v.line_count(); ++l) {
      const auto& [a, b, c] = v.line(l);
      const auto& ha = v.point(a).members;
      const auto& hb = v.point(b).members;
      const auto& hc = v.point(c).members;
      const auto triple = ha & hb & hc;
      pairwise &= triple == (ha & hb) && triple == (ha & hc) && triple == (hb & hc) && triple == v.core(l);
    }
    r.add("triple intersection equals each pairwise intersection", pairwise);
    for (std::size_t i = 0; i < kLineOrbits.size(); ++i) {
      const auto& sizes = census.core_sizes.at(kLineOrbits[i]);
      const bool ok = sizes.size() == 1 && *sizes.begin() == kLineOrbitCoreSizes[i];
      r.add(kLineOrbits[i].symbol() + " core size", ok,
            sizes.empty() ? "none" : count_detail(*sizes.begin(), kLineOrbitCoreSizes[i]));
    }
    reports.push_back(std::move(r));
  }

  const auto w = extract_symplectic(v);
  {
    Report r{"5. symplectic extraction", {}, std::nullopt};
    const auto cert = certify_symplectic(v, w);
    r.add("315 lines", cert.lines == 315, count_detail(cert.lines, 315));
    r.add("15 lines per point", cert.min_lines_per_point == 15 && cert.max_lines_per_point == 15,
          to_string(cert.min_lines_per_point, cert.max_lines_per_point));
    r.add("odd cores select the same lines", cert.odd_core_equivalent);
    r.add("one-or-all axiom", cert.one_or_all.holds && !cert.one_or_all.witness,
          cert.one_or_all.witness ? cert.one_or_all.witness->reason : "");
    const bool srg_ok = cert.srg && *cert.srg == SrgParameters{63, 30, 13, 15, false};
    r.add("SRG(63,30,13,15)", srg_ok,
          cert.srg ? "(" + std::to_string(cert.srg->n) + "," + std::to_string(cert.srg->k) + "," +
                         std::to_string(cert.srg->lambda) + "," + std::to_string(cert.srg->mu) + ")"
                   : "not strongly regular");
    reports.push_back(std::move(r));
  }
  const auto q0 = alpha_quadric(v);
  {
    Report r{"6. sub-geometries", {}, std::nullopt};
    r.add("α quadric points", q0.points.size() == 35, count_detail(q0.points.size(), 35));
    r.add("α quadric lines", q0.lines.size() == 105, count_detail(q0.lines.size(), 105));
    const auto emb = embedded_grassmannian(v);
    r.add("β points and (β,β,β) lines isomorphic to G2(7)", emb.is_isomorphism(),
          to_string(emb.subspace.points.size(), emb.subspace.lines.size()));
    const auto heptad = conwell_heptad(v);
    const auto ext = certify_exterior_set(v, heptad, q0);
    r.add("heptad has 7 points", ext.size == 7, count_detail(ext.size, 7));
    r.add("21 connecting lines avoid the α quadric", ext.connecting_lines == 21 && ext.lines_meeting_quadric == 0,
          std::to_string(ext.lines_meeting_quadric) + " of " + std::to_string(ext.connecting_lines) + " meet it");
    r.add("maximal exterior set bound", ext.maximal(), count_detail(ext.size, ext.bound));
    reports.push_back(std::move(r));
  }
  {
    Report r{"7. quadric formulas", {}, std::nullopt};
    const auto p = quadric_point_count(QuadricKind::parabolic, 2, 2);
    const auto e = quadric_point_count(QuadricKind::elliptic, 3, 2);
    const auto h = quadric_point_count(QuadricKind::hyperbolic, 3, 2);
    r.add("Q(4,2)", p == 15, count_detail(p, 15));
    r.add("Q-(5,2)", e == 27, count_detail(e, 27));
    r.add("Q+(5,2)", h == 35, count_detail(h, 35));
    reports.push_back(std::move(r));
  }
  {
    Report structure{"8. magic lines", {}, std::nullopt};
    Report line_of_w{"9. Veldkamp line of W", {}, std::nullopt};
    for (int g = 1; g <= 7; ++g) {
      const auto m = build_magic_line(v, w, g);
      for (const auto& sub : verify_magic_line(v, w, m)) {
        auto& target = sub.title.starts_with("Veldkamp line") ? line_of_w : structure;
        const auto* failure = sub.first_failure();
        target.add(sub.title, sub.passed(), failure ? failure->name + ": " + failure->detail : "");
      }
    }
    reports.push_back(std::move(structure));
    reports.push_back(std::move(line_of_w));
  }
  return reports;
}

std::optional<RunConfig> parse(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                               int& exit_code) {
  CLI::App app{"Combinatorial Grassmannian G2(N), its Veldkamp space and the magic Veldkamp lines", "vgeom"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "ground set size")->check(CLI::Range(kMinGroundSet, kMaxGroundSet));
  };
  auto* build = app.add_subcommand("build-grassmannian", "build G2(N) and report its parameters");
  add_n(build);
  build->add_option("--json", config.json_path, "write the structure as JSON");
  build->add_option("--dot", config.dot_path, "write the collinearity graph as DOT");

  auto* hyper = app.add_subcommand("hyperplanes", "enumerate geometric hyperplanes of G2(N)");
  add_n(hyper);
  hyper->add_flag("--oracle", config.oracle, "also run the exhaustive subset scan and compare");
  hyper->add_option("--json", config.json_path, "write the hyperplanes as JSON");

  auto* veld = app.add_subcommand("veldkamp", "build the Veldkamp space of G2(N)");
  add_n(veld);
  veld->add_flag("--census", config.census, "print the point and line type tables (N = 7)");
  veld->add_option("--json", config.json_path, "write the space (or the census) as JSON");

  auto* polar = app.add_subcommand("polar", "extract a distinguished sub-geometry of V(G2(7))");
  add_n(polar);
  polar->add_option("--what", config.what, "sub-geometry")
      ->required()
      ->check(CLI::IsMember({"symplectic", "quadric", "grassmannian", "heptad"}));
  polar->add_option("--json", config.json_path, "write the selection as JSON");

  auto* magic = app.add_subcommand("magic-line", "build and verify a magic Veldkamp line");
  add_n(magic);
  magic->add_option("--pivot", config.pivot, "pivot element g");
  magic->add_flag("--all", config.all_pivots, "all seven pivots");
  magic->add_option("--json", config.json_path, "write sectors as JSON");
  magic->add_option("--dot", config.dot_path, "write W coloured by sector as DOT");

  auto* verify = app.add_subcommand("verify-all", "run every check and exit nonzero on failure");
  add_n(verify);
  verify->add_option("--json", config.json_path, "write all reports as JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    exit_code = e.get_exit_code() == 0 ? kOk : kUsage;
    app.exit(e, out, err);
    return std::nullopt;
  }

  if (build->parsed()) config.command = Command::build_grassmannian;
  else if (hyper->parsed()) config.command = Command::hyperplanes;
  else if (veld->parsed()) config.command = Command::veldkamp;
  else if (polar->parsed()) config.command = Command::polar;
  else if (magic->parsed()) config.command = Command::magic_line;
  else config.command = Command::verify_all;

  if (config.command == Command::magic_line) {
    if (config.pivot && (*config.pivot < 1 || *config.pivot > config.n)) {
      err << "error: --pivot must lie in 1.." << config.n << "\n";
      exit_code = kUsage;
      return std::nullopt;
    }
    if (!config.pivot && !config.all_pivots) {
      err << "error: magic-line needs --pivot or --all\n";
      exit_code = kUsage;
      return std::nullopt;
    }
  }
  exit_code = kOk;
  return config;
}

namespace {

void print_report(std::ostream& out, const Report& r) {
  out << (r.passed() ? "[PASS] " : "[FAIL] ") << r.title << "\n";
  for (const auto& c : r.checks) {
    out << "    " << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
}

int run_build(const RunConfig& config, std::ostream& out) {
  const auto g = build_g2(config.n);
  const auto p = configuration_parameters(g);
  out << "G2(" << config.n << "): (" << p.v << "_" << p.r() << ", " << p.b << "_" << p.k() << ")"
      << (p.regular() ? " regular" : " irregular") << (p.linear ? ", linear" : ", not linear") << "\n";
  out << "configuration: " << named_configuration(g) << "\n";
  if (!config.json_path.empty()) write_file(config.json_path, structure_to_json(g));
  if (!config.dot_path.empty()) write_file(config.dot_path, collinearity_to_dot(collinearity_graph(g)));
  return kOk;
}

int run_hyperplanes(const RunConfig& config, std::ostream& out) {
  const auto g = build_g2(config.n);
  const auto hs = enumerate_hyperplanes(g);
  out << "G2(" << config.n << ") has " << hs.size() << " geometric hyperplanes\n";
  for (const auto& h : hs) out << "  " << h.label(g) << "  " << g.format(h.members) << "\n";
  int status = kOk;
  if (config.oracle) {
    const auto scanned = enumerate_hyperplanes_by_scan(g);
    const bool same = members_of(hs) == members_of(scanned);
    out << "oracle scan: " << scanned.size() << " hyperplanes, " << (same ? "identical" : "MISMATCH") << "\n";
    if (!same) status = kCheckFailed;
  }
  if (!config.json_path.empty()) write_file(config.json_path, hyperplanes_to_json(g, hs));
  return status;
}

int run_veldkamp(const RunConfig& config, std::ostream& out) {
  if (config.census) require_seven(config.n, "--census");
  const auto v = build_veldkamp(build_g2(config.n));
  out << "V(G2(" << config.n << ")): " << v.point_count() << " points, " << v.line_count() << " lines\n";
  if (config.census) {
    const auto census = tabulate_census(v);
    out << "\n" << render_census(census);
    if (!config.json_path.empty()) write_file(config.json_path, census_to_json(v, census));
  } else if (!config.json_path.empty()) {
    write_file(config.json_path, structure_to_json(v.geometry()));
  }
  return kOk;
}

int run_polar(const RunConfig& config, std::ostream& out) {
  require_seven(config.n, "polar");
  const auto v = build_veldkamp(build_g2(7));
  PolarSubspace selection;
  bool ok = true;
  if (config.what == "symplectic") {
    selection = extract_symplectic(v);
    const auto cert = certify_symplectic(v, selection);
    out << "W(5,2): " << cert.points << " points, " << cert.lines << " lines, " << cert.min_lines_per_point
        << " lines per point\n";
    out << "one-or-all axiom: " << (cert.one_or_all.holds ? "holds" : cert.one_or_all.witness->reason) << "\n";
    if (cert.srg)
      out << "collinearity graph: SRG(" << cert.srg->n << "," << cert.srg->k << "," << cert.srg->lambda << ","
          << cert.srg->mu << ")\n";
    ok = cert.passed();
  } else if (config.what == "quadric") {
    selection = alpha_quadric(v);
    const auto expected = quadric_point_count(QuadricKind::hyperbolic, 3, 2);
    out << "Q+0(5,2): " << selection.points.size() << " points (Q+(5,2) has " << expected << "), "
        << selection.lines.size() << " lines\n";
    ok = selection.points.size() == expected;
  } else if (config.what == "grassmannian") {
    const auto emb = embedded_grassmannian(v);
    selection = emb.subspace;
    out << "embedded G2(7): " << selection.points.size() << " β points, " << selection.lines.size()
        << " (β,β,β) lines; map abcde:fg -> fg is " << (emb.is_isomorphism() ? "an isomorphism" : "NOT an isomorphism")
        << "\n";
    ok = emb.is_isomorphism();
  } else {
    selection = conwell_heptad(v);
    const auto ext = certify_exterior_set(v, selection, alpha_quadric(v));
    out << "Conwell heptad:";
    for (auto p : selection.points) out << " " << v.label(p);
    out << "\n" << ext.lines_meeting_quadric << " of " << ext.connecting_lines
        << " connecting lines meet the α quadric; size " << ext.size << ", bound " << ext.bound << "\n";
    ok = ext.maximal();
  }
  if (!config.json_path.empty()) write_file(config.json_path, subspace_to_json(v, selection));
  return ok ? kOk : kCheckFailed;
}

int run_magic(const RunConfig& config, std::ostream& out) {
  require_seven(config.n, "magic-line");
  const auto v = build_veldkamp(build_g2(7));
  const auto w = extract_symplectic(v);
  std::vector<int> pivots;
  if (config.all_pivots) pivots = {1, 2, 3, 4, 5, 6, 7};
  else pivots = {*config.pivot};

  std::vector<MagicLineDecomposition> lines;
  bool ok = true;
  std::string dot;
  for (int g : pivots) {
    lines.push_back(build_magic_line(v, w, g));
    const auto& m = lines.back();
    out << "magic line, pivot " << g << ": vertex " << v.label(m.vertex) << "\n";
    for (const auto& r : verify_magic_line(v, w, m)) {
      print_report(out, r);
      ok &= r.passed();
    }
    if (!config.dot_path.empty()) dot += magic_line_to_dot(v, w, m);
  }
  if (!config.json_path.empty()) write_file(config.json_path, magic_lines_to_json(v, lines));
  if (!config.dot_path.empty()) write_file(config.dot_path, dot);
  return ok ? kOk : kCheckFailed;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto reports = verify_all(config.n);
  bool ok = true;
  for (const auto& r : reports) {
    print_report(out, r);
    if (!r.passed() && ok) {
      const auto* f = r.first_failure();
      err << "first failure: " << r.title << ": " << f->name << (f->detail.empty() ? "" : ": " + f->detail) << "\n";
    }
    ok &= r.passed();
  }
  out << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  if (!config.json_path.empty()) write_file(config.json_path, reports_to_json(reports));
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::build_grassmannian: return run_build(config, out);
      case Command::hyperplanes: return run_hyperplanes(config, out);
      case Command::veldkamp: return run_veldkamp(config, out);
      case Command::polar: return run_polar(config, out);
      case Command::magic_line: return run_magic(config, out);
      case Command::verify_all: return run_verify(config, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GeometryError& e) {
    err << "error (" << vgeom::to_string(e.code()) << "): " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  int code = kOk;
  const auto config = parse(args, out, err, code);
  if (!config) return code;
  return run(*config, out, err);
}

}  // namespace vgeom::cli
