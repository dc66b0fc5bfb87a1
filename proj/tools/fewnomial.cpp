// Command-line front end. Exit codes: 0 ok, 1 parse error, 2 invalid
// parameters, 3 internal consistency failure.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "fewnomial/bounds.hpp"
#include "fewnomial/oracles.hpp"
#include "fewnomial/polytope.hpp"
#include "fewnomial/report.hpp"
#include "fewnomial/smirnov.hpp"
#include "fewnomial/sparse.hpp"

namespace fw = fewnomial;

namespace {

enum Exit { kOk = 0, kParse = 1, kInvalid = 2, kConsistency = 3 };

struct Input {
  std::string inline_text;
  std::string file;
  std::size_t n = 0;
  bool laurent = false;

  void attach(CLI::App* cmd, bool with_n = true) {
    cmd->add_option("system", inline_text, "Polynomials separated by ';' or newlines");
    cmd->add_option("--file", file, "Read the system from a file");
    if (with_n) cmd->add_option("-n,--variables", n, "Number of variables (default: highest index used)");
    cmd->add_flag("--laurent", laurent, "Allow negative exponents");
  }

  std::string text() const {
    if (inline_text.empty() == file.empty()) {
      throw std::invalid_argument("give exactly one of an inline system or --file");
    }
    if (inline_text.size()) return inline_text;
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot read " + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fw::SparsePolynomialSystem system() const {
    const std::string t = text();
    std::size_t vars = n;
    if (vars == 0) {
      static const std::regex var(R"(x(\d+))");
      for (auto it = std::sregex_iterator(t.begin(), t.end(), var); it != std::sregex_iterator(); ++it) {
        vars = std::max<std::size_t>(vars, std::stoul((*it)[1].str()));
      }
      if (vars == 0) vars = 1;
    }
    return fw::parse_system(t, vars, laurent);
  }
};

void check_prime(std::uint64_t p) {
  if (!fw::is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t\n") - a + 1);
}

// "0,0;18,0 | 1,0;0,1": polytopes by '|', points by ';' or newlines, coordinates by ','.
std::vector<fw::Polytope> parse_polytopes(const std::string& text) {
  std::vector<fw::Polytope> out;
  std::size_t offset = 0;
  for (auto chunk : split(text, '|')) {
    const std::size_t length = chunk.size();
    std::replace(chunk.begin(), chunk.end(), '\n', ';');
    std::vector<fw::QPoint> points;
    for (const auto& pt : split(chunk, ';')) {
      if (trim(pt).empty()) continue;
      fw::QPoint x;
      for (const auto& c : split(pt, ',')) {
        try {
          x.push_back(fw::BigRational::parse(trim(c)));
        } catch (const fw::ParseError& e) {
          throw fw::ParseError("bad coordinate '" + trim(c) + "'", offset);
        }
      }
      points.push_back(std::move(x));
    }
    if (points.empty()) throw fw::ParseError("empty polytope", offset);
    out.push_back(fw::convex_hull(std::move(points)));
    offset += length + 1;
  }
  for (const auto& p : out) {
    if (p.ambient_dim() != out.size()) {
      throw std::invalid_argument("mixed volume needs n polytopes in R^n (got " + std::to_string(out.size()) +
                                  " polytopes in R^" + std::to_string(p.ambient_dim()) + ")");
    }
  }
  return out;
}

std::pair<std::pair<unsigned, unsigned>, fw::Real> parse_beta(const std::string& spec) {
  static const std::regex form(R"(\s*(\d+)\s*,\s*(\d+)\s*=\s*([0-9.eE+-]+)\s*)");
  std::smatch m;
  if (!std::regex_match(spec, m, form)) throw std::invalid_argument("--beta expects n,m=value (got '" + spec + "')");
  return {{std::stoul(m[1].str()), std::stoul(m[2].str())}, fw::Real(m[3].str())};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Valuation tables and root-count bounds for sparse polynomial systems over p-adic fields"};
  app.require_subcommand(1);
  std::string format_name = "text";
  app.add_option("--format", format_name, "text | json | tsv")->check(CLI::IsMember({"text", "json", "tsv"}));
  std::uint64_t p = 0;
  std::uint64_t seed = 1;

  // analyze
  Input analyze_in;
  bool strata = false, verbose = false;
  auto* analyze = app.add_subcommand("analyze", "Valuation table of a system");
  analyze_in.attach(analyze);
  analyze->add_option("-p,--prime", p, "Prime p")->required();
  analyze->add_flag("--strata", strata, "Include zero strata (subsets of variables set to 0)");
  analyze->add_flag("--verbose", verbose, "Report candidate accounting");
  analyze->add_option("--seed", seed, "Seed for the generic combination of overdetermined systems");
  analyze->add_option("--format", format_name)->check(CLI::IsMember({"text", "json", "tsv"}));

  // bounds
  std::string formula;
  fw::BoundParameters params;
  std::string gamma_text;
  std::vector<std::string> beta_specs;
  auto* bounds = app.add_subcommand("bounds", "Evaluate a root-count bound formula");
  bounds->add_option("formula", formula, "One of: descartes lenstra-local lenstra-global beta1 gamma theorem-local "
                                         "corollary-global degree-bounded valuation-count leading-classes")
      ->required();
  bounds->add_option("-p,--prime", params.p);
  bounds->add_option("-d", params.d, "Degree of the extension");
  bounds->add_option("-e", params.e, "Ramification index");
  bounds->add_option("-f", params.f, "Residue field degree");
  bounds->add_option("-n", params.n, "Number of variables");
  bounds->add_option("-m", params.m, "Sparsity");
  bounds->add_option("--f-L", params.f_L, "Residue degree for the improved global bound");
  bounds->add_option("--D-p", params.D_p, "Compositum degree D_p");
  bounds->add_option("--f-p", params.f_p, "Residue degree f_p");
  bounds->add_option("--gamma", gamma_text, "Use this gamma(n,m) instead of the recursion");
  bounds->add_option("--beta", beta_specs, "Plug beta'(n,m): n,m=value (repeatable)");
  bounds->add_flag("--global", params.global, "Global (base 2) variant of degree-bounded");
  bounds->add_option("--format", format_name)->check(CLI::IsMember({"text", "json", "tsv"}));

  // polygon
  Input polygon_in;
  auto* polygon = app.add_subcommand("polygon", "Newton polygon of a univariate polynomial");
  polygon_in.attach(polygon, false);
  polygon->add_option("-p,--prime", p, "Prime p")->required();
  polygon->add_option("--format", format_name)->check(CLI::IsMember({"text", "json", "tsv"}));

  // mixedvol
  std::string polytopes_text;
  auto* mixedvol = app.add_subcommand("mixedvol", "Mixed volume of n polytopes in R^n");
  mixedvol->add_option("polytopes", polytopes_text, "Points: '|' between polytopes, ';' or newlines between points, ','")
      ->required();
  mixedvol->add_option("--format", format_name)->check(CLI::IsMember({"text", "json", "tsv"}));

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Independent verification oracles");
  oracle->require_subcommand(1);
  Input binomial_in, modpk_in;
  std::string roots_text;
  unsigned k = 1;
  auto* binomial = oracle->add_subcommand("binomial", "Exact solution of a two-term system");
  binomial_in.attach(binomial);
  binomial->add_option("-p,--prime", p, "Prime p")->required();
  binomial->add_option("--format", format_name)->check(CLI::IsMember({"text", "json", "tsv"}));
  auto* product = oracle->add_subcommand("polygon", "Expand prod (x - u_j) and compare polygons");
  product->add_option("roots", roots_text, "Comma-separated nonzero rationals")->required();
  product->add_option("-p,--prime", p, "Prime p")->required();
  product->add_option("--format", format_name)->check(CLI::IsMember({"text", "json", "tsv"}));
  auto* modpk = oracle->add_subcommand("modpk", "Count Hensel-certified roots mod p^k");
  modpk_in.attach(modpk);
  modpk->add_option("-p,--prime", p, "Prime p")->required();
  modpk->add_option("-k", k, "Precision k")->required();
  modpk->add_option("--format", format_name)->check(CLI::IsMember({"text", "json", "tsv"}));

  // reduce
  Input reduce_in;
  auto* reduce = app.add_subcommand("reduce", "Generic combination of an overdetermined system");
  reduce_in.attach(reduce);
  reduce->add_option("--seed", seed, "Seed for the random combination");
  reduce->add_option("--format", format_name)->check(CLI::IsMember({"text", "json", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    const fw::Format format = fw::parse_format(format_name);
    if (analyze->parsed()) {
      check_prime(p);
      const fw::SparsePolynomialSystem g = analyze_in.system();
      if (strata) {
        std::cout << fw::render(fw::stratified_analysis(g, p, seed), format);
        return kOk;
      }
      if (g.size() < g.variables()) {
        throw std::invalid_argument("underdetermined system: " + std::to_string(g.size()) + " equations in " +
                                    std::to_string(g.variables()) + " variables");
      }
      const fw::SparsePolynomialSystem square = g.is_square() ? g : fw::generic_reduce(g, seed).system;
      const fw::ValuationTable table = fw::valuation_table(square, p);
      if (!verbose) {
        std::cout << fw::render(table, format);
        return kOk;
      }
      std::vector<fw::Polytope> lifted;
      for (const auto& poly : square.polynomials()) lifted.push_back(fw::padic_newton_polytope(poly, p).hull);
      const fw::AnalyzeDiagnostics diagnostics{
          fw::valuation_count_bound(static_cast<unsigned>(table.n), static_cast<unsigned>(table.m)),
          fw::edge_tuple_search(lifted), fw::total_term_count(square)};
      std::cout << fw::render(table, format, &diagnostics);
    } else if (bounds->parsed()) {
      if (!gamma_text.empty()) {
        try {
          params.gamma = fw::Real(gamma_text);
        } catch (const std::exception&) {
          throw std::invalid_argument("--gamma expects a real number");
        }
      }
      for (const auto& spec : beta_specs) params.beta.insert(parse_beta(spec));
      std::cout << fw::render(fw::evaluate_bound(formula, params), format);
    } else if (polygon->parsed()) {
      check_prime(p);
      polygon_in.n = 1;
      const fw::SparsePolynomialSystem g = polygon_in.system();
      if (g.size() != 1) throw std::invalid_argument("polygon takes a single polynomial");
      std::cout << fw::render(fw::univariate_polygon(g[0], p), p, format);
    } else if (mixedvol->parsed()) {
      const std::vector<fw::Polytope> polytopes = parse_polytopes(polytopes_text);
      std::cout << fw::render_mixed_volume(polytopes, fw::mixed_volume(polytopes), format);
    } else if (binomial->parsed()) {
      check_prime(p);
      const fw::BinomialSystem b = fw::binomial_system(binomial_in.system(), p);
      std::cout << fw::render(b, fw::binomial_solve(b), format);
    } else if (product->parsed()) {
      check_prime(p);
      std::vector<fw::BigRational> roots;
      std::size_t offset = 0;
      for (const auto& r : split(roots_text, ',')) {
        try {
          roots.push_back(fw::BigRational::parse(trim(r)));
        } catch (const fw::ParseError&) {
          throw fw::ParseError("bad root '" + trim(r) + "'", offset);
        }
        offset += r.size() + 1;
      }
      const fw::ProductPolynomial prod = fw::product_polynomial(roots, p);
      std::cout << fw::render(prod, fw::univariate_polygon(prod.polynomial, p), p, format);
    } else if (modpk->parsed()) {
      std::cout << fw::render_modpk(fw::exhaustive_count_mod_pk(modpk_in.system(), p, k), p, k, format);
    } else if (reduce->parsed()) {
      std::cout << fw::render(fw::generic_reduce(reduce_in.system(), seed), format);
    }
  } catch (const fw::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const fw::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kConsistency;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}
