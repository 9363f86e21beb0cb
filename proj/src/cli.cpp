#include "orthocircles/cli.hpp"

#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "orthocircles/document.hpp"
#include "orthocircles/generators.hpp"
#include "orthocircles/svg.hpp"

namespace orthocircles {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

void emit(std::ostream& out, const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    out << content;
  else
    write_file_atomic(path, content);
}

void print(std::ostream& out, const ReportJson& j) { out << j.dump(2) << '\n'; }

ValidationMode mode_of(bool acute) { return acute ? ValidationMode::Acute : ValidationMode::Orthogonal; }

struct Options {
  std::string kind;
  int wheels = 1;
  int satellites = 5;
  int n = 10;
  std::uint64_t seed = 0;
  bool augment = false;
  bool acute = false;
  double scale = 1.0;
  double rotation = 0.0;
  std::optional<double> tolerance;
  std::string file;
  std::string out;
  std::string query;
};

Tolerance tolerance_of(const Options& o) { return o.tolerance ? Tolerance(*o.tolerance) : Tolerance{}; }

int cmd_gen(const Options& o, std::ostream& out) {
  const Tolerance tol = tolerance_of(o);
  Arrangement arr;
  if (o.kind == "wheel")
    arr = make_wheel(o.satellites, o.scale, o.rotation, tol);
  else if (o.kind == "b")
    arr = make_B(o.wheels, o.satellites, tol);
  else if (o.kind == "nonnested")
    arr = make_nonnested_B(o.wheels, tol);
  else
    arr = make_random_nonnested(o.n, o.seed, tol);
  if (o.augment) arr = augment_triangles(arr);
  if (o.acute) arr = perturb_acute(arr, o.seed);
  emit(out, o.out, serialize_arrangement(arr));
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Arrangement arr = load_arrangement(o.file, o.tolerance);
  const ValidationReport report = validate(arr, mode_of(o.acute));
  for (const auto& v : report.violations) {
    out << "violation: " << v.first << ' ' << v.second << ' ' << to_string(v.relation);
    if (v.angle) out << " angle=" << *v.angle;
    out << " expected " << v.expected << '\n';
  }
  out << (report.ok ? "ok" : "invalid") << " (" << to_string(report.mode) << ", " << arr.size() << " circles, "
      << report.violations.size() << " violations)\n";
  return report.ok ? kOk : kFailed;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const Arrangement arr = load_arrangement(o.file, o.tolerance);
  const ValidationMode mode = mode_of(o.acute);
  const ValidationReport validation = validate(arr, mode);
  ReportJson j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "analysis";
  j["mode"] = to_string(mode);
  j["valid"] = validation.ok;
  if (!validation.ok) {
    j["validation"] = to_report(validation);
    print(out, j);
    return kFailed;
  }

  const IntersectionGraph g = build_graph(arr);
  const CrossingReport crossings = crossing_pairs(g, arr.tolerance());
  const DepthLabeling depth = depth_labeling(arr);
  const BoundReport bounds = check_bounds(arr);
  const bool nonnested = depth.max_depth() == 0;

  std::map<int, int> histogram;
  for (int d : depth.depth) ++histogram[d];
  ReportJson hist = ReportJson::object();
  for (const auto& [d, k] : histogram) hist[std::to_string(d)] = k;

  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["nonnested"] = nonnested;
  j["crossing_count"] = crossings.count;
  j["depth_histogram"] = hist;
  j["outer_face_size"] =
      crossings.count == 0 ? ReportJson(outer_face_vertices(g, arr.tolerance()).size()) : ReportJson(nullptr);
  j["bounds"] = to_report(bounds);

  const auto forbidden = find_forbidden(g);
  if (forbidden) {
    ReportJson f;
    f["kind"] = forbidden->kind == ForbiddenKind::K4 ? "K4" : "InducedC4";
    ReportJson ids = ReportJson::array();
    for (int v : forbidden->vertices) ids.push_back(g.ids()[std::size_t(v)]);
    f["vertices"] = ids;
    j["forbidden_subgraph"] = f;
  } else {
    j["forbidden_subgraph"] = nullptr;
  }

  const bool pass = bounds.pass() && !(forbidden && mode == ValidationMode::Orthogonal) &&
                    !(nonnested && crossings.count > 0);
  j["pass"] = pass;
  print(out, j);
  return pass ? kOk : kFailed;
}

int cmd_cells(const Options& o, std::ostream& out, std::ostream& err) {
  const Arrangement arr = load_arrangement(o.file, o.tolerance);
  try {
    const ArcSubdivision sub = build_subdivision(arr);
    const FaceCensus census = face_census(sub);
    print(out, to_report(sub, census));
    return sub.euler_holds() ? kOk : kFailed;
  } catch (const NonGenericError& e) {
    err << "cells: " << e.what() << '\n';
    return kFailed;
  } catch (const TangencyError& e) {
    err << "cells: " << e.what() << '\n';
    return kFailed;
  }
}

int cmd_audit(const Options& o, std::ostream& out) {
  const Arrangement arr = load_arrangement(o.file, o.tolerance);
  const AuditReport report = audit(arr);
  print(out, to_report(report, arr));
  return report.passed() ? kOk : kFailed;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const MaxEdgesResult result = max_edges_c3c4_free(o.n);
  print(out, to_report(result));
  return kOk;
}

int cmd_export_svg(const Options& o, std::ostream& out) {
  const Arrangement arr = load_arrangement(o.file, o.tolerance);
  std::optional<Classification> cls;
  if (validate(arr, ValidationMode::Orthogonal).ok) {
    try {
      cls = select_red(arr);
    } catch (const Error&) {
      cls.reset();
    }
  }
  emit(out, o.out, render_svg(arr, cls));
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, validate and analyze arrangements of orthogonal circles", "orthocircles"};
  app.require_subcommand(1);
  Options o;

  auto add_tolerance = [&](CLI::App* sub) {
    sub->add_option("--tolerance", o.tolerance, "relative tolerance for geometric comparisons");
  };

  auto* gen = app.add_subcommand("gen", "generate an arrangement document");
  gen->add_option("kind", o.kind, "wheel | b | nonnested | random")
      ->required()
      ->check(CLI::IsMember({"wheel", "b", "nonnested", "random"}));
  gen->add_option("--wheels", o.wheels, "number of nested wheels (x)");
  gen->add_option("--satellites", o.satellites, "satellites per wheel (a)");
  gen->add_option("--n", o.n, "circle count for random arrangements");
  gen->add_option("--seed", o.seed, "seed for random generation and perturbation");
  gen->add_flag("--augment", o.augment, "add a small orthogonal circle at every intersection point");
  gen->add_flag("--acute", o.acute, "shrink radii randomly to obtain an acute arrangement");
  gen->add_option("--scale", o.scale, "wheel scale");
  gen->add_option("--rotation", o.rotation, "wheel rotation in radians");
  gen->add_option("--out", o.out, "output path (default: stdout)");
  add_tolerance(gen);

  auto* verify = app.add_subcommand("verify", "validate an arrangement document");
  verify->add_option("file", o.file)->required();
  verify->add_flag("--acute", o.acute, "accept crossing angles up to pi/2");
  add_tolerance(verify);

  auto* analyze = app.add_subcommand("analyze", "graph statistics and edge bounds");
  analyze->add_option("file", o.file)->required();
  analyze->add_flag("--acute", o.acute, "validate in acute mode");
  add_tolerance(analyze);

  auto* cells = app.add_subcommand("cells", "face census of the arrangement");
  cells->add_option("file", o.file)->required();
  add_tolerance(cells);

  auto* audit_cmd = app.add_subcommand("audit", "check every lemma on the arrangement");
  audit_cmd->add_option("file", o.file)->required();
  add_tolerance(audit_cmd);

  auto* oracle = app.add_subcommand("oracle", "exhaustive small-graph oracle");
  oracle->add_option("query", o.query, "max-edges")->required()->check(CLI::IsMember({"max-edges"}));
  oracle->add_option("--n", o.n, "vertex count (1..7)")->required();

  auto* svg = app.add_subcommand("export-svg", "render the arrangement as SVG");
  svg->add_option("file", o.file)->required();
  svg->add_option("--out", o.out, "output path (default: stdout)");
  add_tolerance(svg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*analyze) return cmd_analyze(o, out);
    if (*cells) return cmd_cells(o, out, err);
    if (*audit_cmd) return cmd_audit(o, out);
    if (*oracle) return cmd_oracle(o, out);
    if (*svg) return cmd_export_svg(o, out);
  } catch (const std::exception& e) {
    err << "orthocircles: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace orthocircles
