#include "orthocircles/document.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace orthocircles {

namespace {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

double require_number(const nlohmann::json& obj, const char* key, std::size_t index) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number())
    throw ParseError("circle " + std::to_string(index) + ": missing numeric field '" + key + "'");
  return it->get<double>();
}

ReportJson point_json(const Point& p) { return ReportJson::array({p.x(), p.y()}); }

ReportJson header(const char* kind) {
  ReportJson j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

}  // namespace

std::string serialize_arrangement(const Arrangement& arr) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"format_version\": " << quote(kFormatVersion) << ",\n";
  out << "  \"tolerance\": " << format_real(arr.tolerance().rel_eps) << ",\n";
  out << "  \"circles\": [";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Circle& c = arr[i];
    out << (i == 0 ? "\n" : ",\n");
    out << "    {\"id\": " << quote(c.id) << ", \"cx\": " << format_real(c.center.x())
        << ", \"cy\": " << format_real(c.center.y()) << ", \"r\": " << format_real(c.radius) << "}";
  }
  out << (arr.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

Arrangement parse_arrangement(std::string_view text, std::optional<double> tolerance) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed arrangement document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("arrangement document must be an object");
  auto version = doc.find("format_version");
  if (version == doc.end() || !version->is_string() || version->get<std::string>() != kFormatVersion)
    throw ParseError("unsupported or missing format_version (expected \"1\")");
  auto circles = doc.find("circles");
  if (circles == doc.end() || !circles->is_array()) throw ParseError("missing 'circles' array");

  double eps = Tolerance{}.rel_eps;
  if (auto t = doc.find("tolerance"); t != doc.end()) {
    if (!t->is_number()) throw ParseError("'tolerance' must be a number");
    eps = t->get<double>();
  }
  if (tolerance) eps = *tolerance;

  try {
    std::vector<Circle> out;
    for (std::size_t i = 0; i < circles->size(); ++i) {
      const auto& c = (*circles)[i];
      if (!c.is_object()) throw ParseError("circle " + std::to_string(i) + " is not an object");
      auto id = c.find("id");
      if (id == c.end() || !id->is_string()) throw ParseError("circle " + std::to_string(i) + ": missing string 'id'");
      out.emplace_back(id->get<std::string>(), Point(require_number(c, "cx", i), require_number(c, "cy", i)),
                       require_number(c, "r", i));
    }
    return Arrangement(std::move(out), Tolerance(eps), Arrangement::Strictness::Lenient);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Arrangement load_arrangement(const std::filesystem::path& path, std::optional<double> tolerance) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arrangement(buf.str(), tolerance);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out.write(content.data(), std::streamsize(content.size()));
    if (!out) throw Error("write to '" + tmp.string() + "' failed");
  }
  std::filesystem::rename(tmp, path);
}

ReportJson to_report(const ValidationReport& report) {
  ReportJson j = header("validation");
  j["mode"] = to_string(report.mode);
  j["ok"] = report.ok;
  ReportJson violations = ReportJson::array();
  for (const auto& v : report.violations) {
    ReportJson e;
    e["first"] = v.first;
    e["second"] = v.second;
    e["relation"] = to_string(v.relation);
    e["angle"] = v.angle ? ReportJson(*v.angle) : ReportJson(nullptr);
    e["expected"] = v.expected;
    violations.push_back(e);
  }
  j["violations"] = violations;
  return j;
}

ReportJson to_report(const BoundReport& report) {
  ReportJson j = header("bounds");
  j["n"] = report.n;
  j["m"] = report.m;
  j["orthogonal"] = report.orthogonal;
  j["acute"] = report.acute;
  j["nonnested"] = report.nonnested;
  ReportJson entries = ReportJson::array();
  for (const auto& e : report.entries) {
    ReportJson b;
    b["name"] = e.name;
    b["applicable"] = e.applicable;
    b["bound"] = e.bound;
    b["pass"] = e.pass;
    b["slack"] = e.slack;
    entries.push_back(b);
  }
  j["bounds"] = entries;
  j["pass"] = report.pass();
  return j;
}

ReportJson to_report(const ArcSubdivision& sub, const FaceCensus& census) {
  ReportJson j = header("face_census");
  j["vertices"] = sub.vertex_count();
  j["arcs"] = sub.arc_count();
  j["faces"] = sub.face_count();
  j["components"] = sub.component_count();
  j["euler_ok"] = sub.euler_holds();
  j["bounded_faces"] = census.bounded_faces;
  j["digon_count"] = census.digon_count;
  j["triangle_count"] = census.triangle_count;
  ReportJson by_sides = ReportJson::object();
  for (const auto& [sides, count] : census.by_sides) by_sides[std::to_string(sides)] = count;
  j["by_sides"] = by_sides;
  return j;
}

ReportJson to_report(const AuditReport& report, const Arrangement& arr) {
  ReportJson j = header("audit");
  j["mode"] = report.mode ? ReportJson(to_string(*report.mode)) : ReportJson(nullptr);
  j["nonnested"] = report.nonnested;
  if (report.classification) {
    const auto& cls = *report.classification;
    auto ids = [&](const std::vector<int>& v) {
      ReportJson a = ReportJson::array();
      for (int i : v) a.push_back(arr[std::size_t(i)].id);
      return a;
    };
    ReportJson c;
    c["red"] = cls.red;
    c["black"] = ids(cls.black);
    c["green"] = ids(cls.green);
    c["boundary_black"] = ids(cls.boundary_black);
    c["inner_black"] = ids(cls.inner_black);
    c["n_black"] = cls.n_black();
    j["classification"] = c;
  } else {
    j["classification"] = nullptr;
  }
  ReportJson entries = ReportJson::array();
  for (const auto& e : report.entries) {
    ReportJson r;
    r["tag"] = e.tag;
    r["status"] = to_string(e.status);
    r["sampled"] = e.sampled;
    r["detail"] = e.detail;
    ReportJson counts = ReportJson::object();
    for (const auto& [k, v] : e.counts) counts[k] = v;
    r["counts"] = counts;
    if (e.status == AuditStatus::Fail) {
      r["witness_ids"] = e.witness_ids;
      ReportJson pts = ReportJson::array();
      for (const auto& p : e.witness_points) pts.push_back(point_json(p));
      r["witness_points"] = pts;
    }
    entries.push_back(r);
  }
  j["entries"] = entries;
  j["passed"] = report.passed();
  return j;
}

ReportJson to_report(const MaxEdgesResult& result) {
  ReportJson j = header("max_edges_c3c4_free");
  j["n"] = result.witness.n;
  j["max_edges"] = result.max_edges;
  j["graphs_examined"] = result.graphs_examined;
  ReportJson edges = ReportJson::array();
  for (int a = 0; a < result.witness.n; ++a)
    for (int b = a + 1; b < result.witness.n; ++b)
      if (result.witness.has_edge(a, b)) edges.push_back(ReportJson::array({a, b}));
  j["witness_edges"] = edges;
  return j;
}

}  // namespace orthocircles
