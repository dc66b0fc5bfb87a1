#include "fewnomial/smirnov.hpp"

#include <algorithm>
#include <stdexcept>

#include "fewnomial/parallel.hpp"

namespace fewnomial {

PAdicNewtonPolytope padic_newton_polytope(const SparsePolynomial& g, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  std::vector<std::pair<ExponentVector, BigRational>> lifted;
  std::vector<QPoint> points;
  for (const auto& [exponent, term] : g.terms()) {
    BigRational height = SparsePolynomial::term_valuation(term, p);
    QPoint x;
    for (long e : exponent) x.emplace_back(e);
    x.push_back(height);
    points.push_back(std::move(x));
    lifted.emplace_back(exponent, std::move(height));
  }
  return PAdicNewtonPolytope{g, p, std::move(lifted), convex_hull(std::move(points))};
}

namespace {

BigInt integral_bound(const BigRational& mv) {
  if (!mv.is_integer() || mv.sign() < 0) {
    throw ConsistencyError("mixed volume of lattice polytopes is not a nonnegative integer: " + mv.to_string());
  }
  return mv.numerator();
}

}  // namespace

ValuationTable valuation_table(const SparsePolynomialSystem& g, std::uint64_t p) {
  if (!g.is_square()) {
    throw std::invalid_argument("valuation_table needs a square system; apply generic_reduce first");
  }
  const std::size_t n = g.variables();
  std::vector<Polytope> lifted;
  std::vector<Polytope> projected;
  for (const auto& poly : g.polynomials()) {
    lifted.push_back(padic_newton_polytope(poly, p).hull);
    projected.push_back(project_last(lifted.back()));
  }

  ValuationTable table;
  table.p = p;
  table.n = n;
  table.m = sparsity(g);

  const std::vector<LowerCell> cells = lower_cells(lifted);
  table.cells.resize(cells.size());
  parallel_for(cells.size(), [&](std::size_t c) {
    std::vector<Polytope> faces;
    for (const auto& f : cells[c].faces) {
      std::vector<QPoint> pts;
      for (const auto& x : f) pts.push_back(project_last(x));
      faces.push_back(convex_hull(std::move(pts)));
    }
    table.cells[c] = ValuationEntry{cells[c].gradient, integral_bound(mixed_volume(faces))};
  });
  for (const auto& cell : table.cells) {
    if (cell.bound > 0) {
      table.entries.push_back(cell);
      table.total += cell.bound;
    }
  }
  table.bernstein = integral_bound(mixed_volume(projected));
  if (table.total != table.bernstein) {
    throw ConsistencyError("valuation table total " + table.total.get_str() + " differs from mixed volume " +
                           table.bernstein.get_str());
  }
  return table;
}

std::vector<PolygonSegment> univariate_polygon(const SparsePolynomial& g, std::uint64_t p) {
  if (g.variables() != 1) throw std::invalid_argument("univariate_polygon needs a polynomial in one variable");
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  struct Pt {
    long e;
    BigRational h;
  };
  std::vector<Pt> pts;
  for (const auto& [exponent, term] : g.terms()) pts.push_back(Pt{exponent[0], SparsePolynomial::term_valuation(term, p)});
  // Terms are already ordered by exponent. Monotone chain, dropping collinear points.
  std::vector<Pt> hull;
  for (const auto& q : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      const BigRational cross = BigRational(b.e - a.e) * (q.h - a.h) - (b.h - a.h) * BigRational(q.e - a.e);
      if (cross.sign() > 0) break;
      hull.pop_back();
    }
    hull.push_back(q);
  }
  std::vector<PolygonSegment> out;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const long width = hull[i].e - hull[i - 1].e;
    out.push_back(PolygonSegment{(hull[i - 1].h - hull[i].h) / BigRational(width), width});
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_string(StratumStatus status) {
  switch (status) {
    case StratumStatus::kBounded: return "bounded";
    case StratumStatus::kInconsistent: return "empty";
    case StratumStatus::kUnbounded: return "unbounded";
    case StratumStatus::kOrigin: return "origin";
  }
  return "unknown";
}

StratifiedReport stratified_analysis(const SparsePolynomialSystem& g, std::uint64_t p, std::uint64_t seed) {
  if (g.has_negative_exponent()) {
    throw std::invalid_argument("zero strata are undefined for Laurent systems");
  }
  const std::size_t n = g.variables();
  if (n > 20) throw std::invalid_argument("too many variables for stratum enumeration");

  StratifiedReport report;
  report.p = p;
  report.n = n;
  report.seed = seed;

  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  report.strata.resize(subsets.size());
  parallel_for(subsets.size(), [&](std::size_t idx) {
    Stratum& stratum = report.strata[idx];
    stratum.zeroed = subsets[idx];
    const Specialization spec = specialize_zero(g, {stratum.zeroed.begin(), stratum.zeroed.end()});
    for (std::size_t i = 0; i < spec.polynomials.size(); ++i) {
      if (!spec.polynomials[i]) stratum.vanished.push_back(i);
    }
    std::vector<SparsePolynomial> remaining = spec.nonzero();
    const std::size_t vars = spec.surviving_variables.size();
    const bool inconsistent = std::any_of(remaining.begin(), remaining.end(),
                                          [](const SparsePolynomial& q) { return q.is_constant(); });
    if (inconsistent) {
      stratum.status = StratumStatus::kInconsistent;
      return;
    }
    if (vars == 0) {
      stratum.status = StratumStatus::kOrigin;
      stratum.total = 1;
      return;
    }
    if (remaining.size() < vars) {
      stratum.status = StratumStatus::kUnbounded;
      return;
    }
    SparsePolynomialSystem system(vars, std::move(remaining));
    if (!system.is_square()) {
      system = generic_reduce(system, seed).system;
      stratum.reduced = true;
    }
    stratum.table = valuation_table(system, p);
    stratum.total = stratum.table->total;
  });
  for (const auto& s : report.strata) {
    report.grand_total += s.total;
    report.has_unbounded = report.has_unbounded || s.status == StratumStatus::kUnbounded;
  }
  return report;
}

}  // namespace fewnomial
