#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "fewnomial/bounds.hpp"
#include "fewnomial/oracles.hpp"
#include "fewnomial/polytope.hpp"
#include "fewnomial/smirnov.hpp"
#include "fewnomial/sparse.hpp"

namespace fewnomial {

enum class Format { kText, kJson, kTsv };

/// Accepts "text", "json", "tsv"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

/// Extra accounting printed by `analyze --verbose`.
struct AnalyzeDiagnostics {
  BigInt valuation_cap;  // C(mn, n+1)
  EdgeTupleSearch edge_search;
  std::size_t term_count = 0;  // sum of |Supp(g_i)|, next to the union count m
};

// Rationals are rendered as "num/den" (or "num" when integral), integers as
// decimal strings: JSON never carries floating-point or bounded integers.
nlohmann::json to_json(const ValuationTable& table, const AnalyzeDiagnostics* diagnostics = nullptr);
nlohmann::json to_json(const StratifiedReport& report);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const std::vector<PolygonSegment>& polygon, std::uint64_t p);
nlohmann::json to_json(const Reduction& reduction);

std::string render(const ValuationTable& table, Format format, const AnalyzeDiagnostics* diagnostics = nullptr);
std::string render(const StratifiedReport& report, Format format);
std::string render(const BoundReport& report, Format format);
std::string render(const std::vector<PolygonSegment>& polygon, std::uint64_t p, Format format);
std::string render(const Reduction& reduction, Format format);
std::string render_mixed_volume(const std::vector<Polytope>& polytopes, const BigRational& value, Format format);
std::string render(const BinomialSystem& system, const std::optional<BinomialSolution>& solution, Format format);
std::string render(const ProductPolynomial& product, const std::vector<PolygonSegment>& computed, std::uint64_t p,
                   Format format);
std::string render_modpk(const ModPkCount& count, std::uint64_t p, unsigned k, Format format);

std::string vector_text(const QPoint& v);

}  // namespace fewnomial
