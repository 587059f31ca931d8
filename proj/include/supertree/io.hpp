#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "supertree/hypergraph.hpp"
#include "supertree/matching_poly.hpp"
#include "supertree/ordering.hpp"
#include "supertree/spectral.hpp"

namespace supertree {

using Json = nlohmann::json;

/// {"r": int, "n": int, "edges": [[int, ...], ...], "name": optional string}.
/// Structural problems raise ParseError naming the offending field or edge
/// index; semantic ones (non-uniform, non-linear, dangling) come from validate.
Hypergraph hypergraph_from_json(const Json& j);
Json to_json(const Hypergraph& h, const std::optional<std::string>& name = std::nullopt);

/// Parses JSON text; syntax errors report the line and column.
Json parse_json_text(std::string_view text);

/// Reads a hypergraph file. IoError when unreadable, ParseError when malformed.
Hypergraph load_hypergraph(const std::filesystem::path& path);

/// {"n": int, "r": int, "counts": [...]}; counts beyond 64 bits are decimal strings.
Json to_json(const MatchingPolynomial& phi);
MatchingPolynomial polynomial_from_json(const Json& j);

/// {"rho": float, "method": str, "error_bound": float, "iterations": int}.
Json to_json(const SpectralResult& s);

Json to_json(const OrderingVerdict& v);
Json to_json(const RankingReport& report);
Json to_json(const SuiteReport& report);
Json to_json(const PowerRelationReport& report);

/// Header "rank,canonical_code,family_match,rho,method_gap", one row per entry.
std::string to_csv(const RankingReport& report);

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& name);

/// Human-readable rendering of a ranking.
std::string to_text(const RankingReport& report);

/// Writes the report in the given format. IoError if the file cannot be written.
void export_report(const RankingReport& report, const std::filesystem::path& path, Format format);

/// Writes text to a file, replacing it. IoError on failure.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace supertree
