#include "fewnomial/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fewnomial {

using nlohmann::json;

Format parse_format(std::string_view name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "tsv") return Format::kTsv;
  throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

std::string vector_text(const QPoint& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

namespace {

json rational_array(const QPoint& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json entries_json(const std::vector<ValuationEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries) out.push_back({{"v", rational_array(e.v)}, {"bound", e.bound.get_str()}});
  return out;
}

std::string variables_header(std::size_t n) {
  std::string out;
  for (std::size_t i = 1; i <= n; ++i) out += "v" + std::to_string(i) + "\t";
  return out;
}

std::string tsv_row(const QPoint& v) {
  std::string out;
  for (const auto& x : v) out += x.to_string() + "\t";
  return out;
}

void table_text(std::ostringstream& os, const ValuationTable& t, const std::string& indent) {
  for (const auto& e : t.entries) os << indent << vector_text(e.v) << " -> " << e.bound.get_str() << "\n";
  os << indent << "total " << t.total.get_str() << "\n";
}

std::string subset_text(const std::vector<std::size_t>& zeroed) {
  if (zeroed.empty()) return "{} (torus)";
  std::string out = "{";
  for (std::size_t i = 0; i < zeroed.size(); ++i) {
    if (i) out += ", ";
    out += "x" + std::to_string(zeroed[i] + 1);
  }
  return out + "}";
}

}  // namespace

json to_json(const ValuationTable& t, const AnalyzeDiagnostics* diagnostics) {
  json out = {{"p", t.p},
              {"n", t.n},
              {"m", t.m},
              {"entries", entries_json(t.entries)},
              {"total", t.total.get_str()},
              {"bernstein", t.bernstein.get_str()},
              {"candidates_examined", t.candidates_examined()}};
  if (diagnostics) {
    json normals = json::array();
    for (const auto& v : diagnostics->edge_search.normals) normals.push_back(rational_array(v));
    out["diagnostics"] = {{"valuation_cap", diagnostics->valuation_cap.get_str()},
                          {"term_count", diagnostics->term_count},
                          {"cells_retained", t.entries.size()},
                          {"cells", entries_json(t.cells)},
                          {"edge_tuple_candidates", diagnostics->edge_search.candidates},
                          {"edge_tuple_normals", std::move(normals)}};
  }
  return out;
}

json to_json(const StratifiedReport& r) {
  json strata = json::array();
  for (const auto& s : r.strata) {
    json item = {{"zeroed", json::array()},
                 {"status", to_string(s.status)},
                 {"reduced", s.reduced},
                 {"vanished", json::array()},
                 {"total", s.total.get_str()}};
    for (auto i : s.zeroed) item["zeroed"].push_back(i + 1);
    for (auto i : s.vanished) item["vanished"].push_back(i + 1);
    if (s.table) item["table"] = to_json(*s.table);
    strata.push_back(std::move(item));
  }
  return {{"p", r.p},
          {"n", r.n},
          {"seed", r.seed},
          {"strata", std::move(strata)},
          {"grand_total", r.grand_total.get_str()},
          {"has_unbounded", r.has_unbounded}};
}

json to_json(const BoundReport& r) {
  json inputs = json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  return {{"formula", r.formula},
          {"inputs", std::move(inputs)},
          {"value", r.value_text()},
          {"effective", r.value.has_value()},
          {"precision_digits", BoundReport::kPrecisionDigits}};
}

json to_json(const std::vector<PolygonSegment>& polygon, std::uint64_t p) {
  json segments = json::array();
  for (const auto& s : polygon) segments.push_back({{"v", s.v.to_string()}, {"multiplicity", s.multiplicity}});
  return {{"p", p}, {"segments", std::move(segments)}};
}

json to_json(const Reduction& r) {
  json multipliers = json::array();
  for (const auto& row : r.multipliers) {
    json j = json::array();
    for (const auto& c : row) j.push_back(c.get_str());
    multipliers.push_back(std::move(j));
  }
  json polys = json::array();
  for (const auto& g : r.system.polynomials()) polys.push_back(g.to_string());
  return {{"seed", r.seed},
          {"underdetermined", r.underdetermined},
          {"n", r.system.variables()},
          {"multipliers", std::move(multipliers)},
          {"system", std::move(polys)}};
}

std::string render(const ValuationTable& t, Format format, const AnalyzeDiagnostics* diagnostics) {
  if (format == Format::kJson) return dump(to_json(t, diagnostics));
  std::ostringstream os;
  if (format == Format::kTsv) {
    os << variables_header(t.n) << "bound\n";
    for (const auto& e : t.entries) os << tsv_row(e.v) << e.bound.get_str() << "\n";
    return os.str();
  }
  table_text(os, t, "");
  if (diagnostics) {
    os << "sparsity m " << t.m << " (" << diagnostics->term_count << " terms counted per polynomial)\n";
    os << "valuation cap C(mn, n+1) " << diagnostics->valuation_cap.get_str() << "\n";
    os << "cells examined " << t.candidates_examined() << ", retained " << t.entries.size() << "\n";
    for (const auto& c : t.cells) os << "  cell " << vector_text(c.v) << " mixed volume " << c.bound.get_str() << "\n";
    os << "edge-tuple candidates " << diagnostics->edge_search.candidates << ", true normals "
       << diagnostics->edge_search.normals.size() << "\n";
    os << "bernstein " << t.bernstein.get_str() << "\n";
  }
  return os.str();
}

std::string render(const StratifiedReport& r, Format format) {
  if (format == Format::kJson) return dump(to_json(r));
  std::ostringstream os;
  if (format == Format::kTsv) {
    os << "zeroed\tstatus\t" << variables_header(r.n) << "bound\n";
    for (const auto& s : r.strata) {
      std::string zeroed;
      for (auto i : s.zeroed) zeroed += (zeroed.empty() ? "x" : ",x") + std::to_string(i + 1);
      if (zeroed.empty()) zeroed = "-";
      if (!s.table || s.table->entries.empty()) {
        os << zeroed << "\t" << to_string(s.status) << "\t" << std::string(r.n, '\t') << s.total.get_str() << "\n";
        continue;
      }
      // Surviving coordinates only; zeroed ones have valuation +inf.
      for (const auto& e : s.table->entries) {
        os << zeroed << "\t" << to_string(s.status) << "\t";
        std::size_t k = 0;
        for (std::size_t i = 0; i < r.n; ++i) {
          const bool gone = std::find(s.zeroed.begin(), s.zeroed.end(), i) != s.zeroed.end();
          os << (gone ? std::string("+inf") : e.v[k++].to_string()) << "\t";
        }
        os << e.bound.get_str() << "\n";
      }
    }
    return os.str();
  }
  for (const auto& s : r.strata) {
    os << "stratum " << subset_text(s.zeroed) << ": " << to_string(s.status);
    if (s.reduced) os << " (generic combination, seed " << r.seed << ")";
    os << "\n";
    if (s.table) table_text(os, *s.table, "  ");
    else if (s.status == StratumStatus::kOrigin) os << "  total 1\n";
  }
  os << "grand total " << r.grand_total.get_str();
  if (r.has_unbounded) os << " (some strata unbounded)";
  os << "\n";
  return os.str();
}

std::string render(const BoundReport& r, Format format) {
  if (format == Format::kJson) return dump(to_json(r));
  std::ostringstream os;
  if (format == Format::kTsv) {
    os << "formula\tinputs\tvalue\n" << r.formula << "\t";
    for (std::size_t i = 0; i < r.inputs.size(); ++i) os << (i ? "," : "") << r.inputs[i].first << "=" << r.inputs[i].second;
    os << "\t" << r.value_text() << "\n";
    return os.str();
  }
  os << r.formula;
  for (const auto& [k, v] : r.inputs) os << " " << k << "=" << v;
  os << "\n" << r.value_text() << "\n";
  return os.str();
}

std::string render(const std::vector<PolygonSegment>& polygon, std::uint64_t p, Format format) {
  if (format == Format::kJson) return dump(to_json(polygon, p));
  std::ostringstream os;
  if (format == Format::kTsv) os << "v\tmultiplicity\n";
  for (const auto& s : polygon) {
    if (format == Format::kTsv) os << s.v.to_string() << "\t" << s.multiplicity << "\n";
    else os << "(" << s.v.to_string() << ", " << s.multiplicity << ")\n";
  }
  return os.str();
}

std::string render(const Reduction& r, Format format) {
  if (format == Format::kJson) return dump(to_json(r));
  std::ostringstream os;
  if (format == Format::kTsv) {
    os << "seed\tpolynomial\n";
    for (const auto& g : r.system.polynomials()) os << r.seed << "\t" << g.to_string() << "\n";
    return os.str();
  }
  os << "seed " << r.seed << (r.underdetermined ? " (underdetermined: unchanged)" : "") << "\n";
  for (const auto& g : r.system.polynomials()) os << g.to_string() << "\n";
  return os.str();
}

std::string render_mixed_volume(const std::vector<Polytope>& polytopes, const BigRational& value, Format format) {
  if (format == Format::kJson) {
    json ps = json::array();
    for (const auto& p : polytopes) {
      json vs = json::array();
      for (const auto& v : p.vertices()) vs.push_back(rational_array(v));
      ps.push_back(std::move(vs));
    }
    return dump({{"polytopes", std::move(ps)}, {"mixed_volume", value.to_string()}});
  }
  if (format == Format::kTsv) return "mixed_volume\n" + value.to_string() + "\n";
  return value.to_string() + "\n";
}

std::string render(const BinomialSystem& system, const std::optional<BinomialSolution>& solution, Format format) {
  if (format == Format::kJson) {
    json a = json::array();
    for (const auto& row : system.A) a.push_back(rational_array(row));
    json out = {{"p", system.p}, {"A", std::move(a)}, {"r", rational_array(system.r)}, {"singular", !solution}};
    if (solution) {
      out["v"] = rational_array(solution->v);
      out["count"] = solution->count.get_str();
    }
    return dump(out);
  }
  std::ostringstream os;
  if (format == Format::kTsv) {
    os << variables_header(system.r.size()) << "count\n";
    if (solution) os << tsv_row(solution->v) << solution->count.get_str() << "\n";
    return os.str();
  }
  if (!solution) return "singular\n";
  os << vector_text(solution->v) << " -> " << solution->count.get_str() << "\n";
  return os.str();
}

std::string render(const ProductPolynomial& product, const std::vector<PolygonSegment>& computed, std::uint64_t p,
                   Format format) {
  const bool agree = product.expected == computed;
  if (format == Format::kJson) {
    return dump({{"polynomial", product.polynomial.to_string()},
                 {"support_collapsed", product.support_collapsed},
                 {"expected", to_json(product.expected, p)["segments"]},
                 {"computed", to_json(computed, p)["segments"]},
                 {"agree", agree}});
  }
  std::ostringstream os;
  if (format == Format::kTsv) {
    os << "source\tv\tmultiplicity\n";
    for (const auto& s : product.expected) os << "expected\t" << s.v.to_string() << "\t" << s.multiplicity << "\n";
    for (const auto& s : computed) os << "computed\t" << s.v.to_string() << "\t" << s.multiplicity << "\n";
    return os.str();
  }
  os << product.polynomial.to_string() << "\n";
  if (product.support_collapsed) os << "warning: coefficient cancellation shrank the support\n";
  os << "expected";
  for (const auto& s : product.expected) os << " (" << s.v.to_string() << ", " << s.multiplicity << ")";
  os << "\ncomputed";
  for (const auto& s : computed) os << " (" << s.v.to_string() << ", " << s.multiplicity << ")";
  os << "\n" << (agree ? "agree" : "DISAGREE") << "\n";
  return os.str();
}

std::string render_modpk(const ModPkCount& c, std::uint64_t p, unsigned k, Format format) {
  if (format == Format::kJson) {
    return dump({{"p", p},
                 {"k", k},
                 {"residues", c.residues},
                 {"certified", c.certified},
                 {"uncertified", c.uncertified},
                 {"certified_torus", c.certified_torus}});
  }
  std::ostringstream os;
  if (format == Format::kTsv) {
    os << "residues\tcertified\tuncertified\tcertified_torus\n"
       << c.residues << "\t" << c.certified << "\t" << c.uncertified << "\t" << c.certified_torus << "\n";
    return os.str();
  }
  os << "certified " << c.certified << "\nuncertified " << c.uncertified << "\ncertified in torus " << c.certified_torus
     << "\n";
  return os.str();
}

}  // namespace fewnomial
