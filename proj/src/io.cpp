#include "supertree/io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace supertree {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

int int_field(const Json& j, const char* key) {
  if (!j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  if (!j[key].is_number_integer()) parse_error(std::string("field '") + key + "' must be an integer");
  const auto v = j[key].get<long long>();
  if (v < 0 || v > std::numeric_limits<int>::max()) parse_error(std::string("field '") + key + "' out of range");
  return static_cast<int>(v);
}

std::string number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return Json(static_cast<long long>(v));
  }
  return Json(v.str());
}

BigInt big_from_json(const Json& j, std::size_t index) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  parse_error("counts[" + std::to_string(index) + "] is not an integer");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Hypergraph hypergraph_from_json(const Json& j) {
  if (!j.is_object()) parse_error("hypergraph must be a JSON object");
  const int r = int_field(j, "r");
  const int n = int_field(j, "n");
  if (!j.contains("edges") || !j["edges"].is_array()) parse_error("field 'edges' must be an array");
  if (j.contains("name") && !j["name"].is_string()) parse_error("field 'name' must be a string");
  std::vector<std::vector<long long>> edges;
  const Json& raw = j["edges"];
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Json& e = raw[i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!e.is_array()) parse_error(where + " must be an array of vertex ids");
    std::vector<long long> edge;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k].is_number_integer()) parse_error(where + "[" + std::to_string(k) + "] must be an integer");
      edge.push_back(e[k].get<long long>());
    }
    edges.push_back(std::move(edge));
  }
  std::vector<long long> vertices(n);
  for (int v = 0; v < n; ++v) vertices[v] = v;
  return Hypergraph::validate(vertices, edges, r);
}

Json to_json(const Hypergraph& h, const std::optional<std::string>& name) {
  Json j;
  j["r"] = h.rank();
  j["n"] = h.order();
  j["edges"] = h.edges();
  if (name) j["name"] = *name;
  return j;
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    parse_error("line " + std::to_string(line) + ", column " + std::to_string(upto - line_start + 1) +
                ": malformed JSON");
  }
}

Hypergraph load_hypergraph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return hypergraph_from_json(parse_json_text(buf.str()));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.detail());
  }
}

Json to_json(const MatchingPolynomial& phi) {
  Json counts = Json::array();
  for (const auto& c : phi.counts) counts.push_back(big_to_json(c));
  return Json{{"n", phi.order}, {"r", phi.rank}, {"counts", counts}};
}

MatchingPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object()) parse_error("polynomial must be a JSON object");
  MatchingPolynomial phi;
  phi.order = int_field(j, "n");
  phi.rank = int_field(j, "r");
  if (!j.contains("counts") || !j["counts"].is_array() || j["counts"].empty()) {
    parse_error("field 'counts' must be a nonempty array");
  }
  phi.counts.clear();
  for (std::size_t k = 0; k < j["counts"].size(); ++k) phi.counts.push_back(big_from_json(j["counts"][k], k));
  if (phi.counts.front() != 1) parse_error("counts[0] must be 1");
  while (phi.counts.size() > 1 && phi.counts.back() == 0) phi.counts.pop_back();
  return phi;
}

Json to_json(const SpectralResult& s) {
  return Json{{"rho", s.rho}, {"method", method_name(s.method)}, {"error_bound", s.error_bound},
              {"iterations", s.iterations}};
}

Json to_json(const OrderingVerdict& v) {
  return Json{{"relation", relation_name(v.relation)},
              {"difference", v.difference.to_string()},
              {"threshold", v.threshold},
              {"first", v.first.bytes},
              {"second", v.second.bytes}};
}

Json to_json(const RankingReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back(Json{{"rank", e.rank},
                           {"canonical_code", e.code.bytes},
                           {"family_match", e.family_match},
                           {"rho", e.rho},
                           {"method_gap", e.method_gap}});
  }
  Json j{{"check", report.check}, {"m", report.m}, {"r", report.r},
         {"order", report.descending ? "descending" : "ascending"},
         {"entries", entries}, {"expected", report.expected}, {"failures", report.failures},
         {"pass", report.pass}};
  if (report.d >= 0) j["d"] = report.d;
  return j;
}

Json to_json(const SuiteReport& report) {
  return Json{{"property", report.name}, {"instances", report.instances}, {"violations", report.violations},
              {"seed", report.seed}, {"failures", report.failures}, {"pass", report.pass}};
}

Json to_json(const PowerRelationReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back(Json{{"r", e.r}, {"rho_power_graph", e.rho_power_graph}, {"expected", e.expected},
                           {"gap", e.gap}, {"bound", e.bound}, {"pass", e.pass}});
  }
  return Json{{"rho_graph", report.rho_graph}, {"entries", entries}, {"pass", report.pass}};
}

std::string to_csv(const RankingReport& report) {
  std::string out = "rank,canonical_code,family_match,rho,method_gap\n";
  for (const auto& e : report.entries) {
    out += std::to_string(e.rank) + "," + csv_field(e.code.bytes) + "," + csv_field(e.family_match) + "," +
           number(e.rho) + "," + number(e.method_gap) + "\n";
  }
  return out;
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  parse_error("unknown format '" + name + "' (expected json, csv or text)");
}

std::string to_text(const RankingReport& report) {
  std::ostringstream out;
  out << report.check << " m=" << report.m;
  if (report.d >= 0) out << " d=" << report.d;
  out << " r=" << report.r << ": " << (report.pass ? "PASS" : "FAIL") << "\n";
  out << "expected:";
  for (const auto& e : report.expected) out << " " << e;
  out << "\n";
  for (const auto& e : report.entries) {
    out << "  " << e.rank << "  " << number(e.rho) << "  " << (e.family_match.empty() ? "-" : e.family_match)
        << "  " << e.code.bytes << "\n";
  }
  for (const auto& f : report.failures) out << "failure: " << f << "\n";
  return out.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

void export_report(const RankingReport& report, const std::filesystem::path& path, Format format) {
  switch (format) {
    case Format::Json: write_file(path, to_json(report).dump(2) + "\n"); break;
    case Format::Csv: write_file(path, to_csv(report)); break;
    case Format::Text: write_file(path, to_text(report)); break;
  }
}

}  // namespace supertree
