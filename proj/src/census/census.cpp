#include "qf/census/census.hpp"

#include "qf/errors.hpp"
#include "qf/kernels/orbit_kernel.hpp"
#include "qf/quiver/hom.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iomanip>
#include <sstream>
#include <mutex>

#include <omp.h>

namespace qf {

std::string to_string(CensusMethod m) {
  switch (m) {
    case CensusMethod::Auto:
      return "auto";
    case CensusMethod::OrbitKernel:
      return "orbit-kernel";
    case CensusMethod::SimilarityClasses:
      return "similarity-classes";
  }
  return "auto";
}

FiniteField field_of_order(std::uint32_t q) {
  if (q < 2) throw DomainError("no field with " + std::to_string(q) + " elements");
  auto f = factor(Integer(q));
  if (f.size() != 1) throw DomainError(std::to_string(q) + " is not a prime power");
  const auto p = static_cast<std::uint32_t>(f.front().first.get_ui());
  const int n = static_cast<int>(f.front().second);
  return n == 1 ? FiniteField::prime(p) : FiniteField::extension(p, n);
}

namespace {

using Elem = FiniteField::Elem;
using Poly = std::vector<Elem>;  // monic, low degree first

std::vector<Poly> monic_of_degree(const FiniteField& f, int k) {
  std::vector<Poly> out;
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= f.order();
  for (std::uint64_t code = 0; code < total; ++code) {
    Poly p(static_cast<std::size_t>(k) + 1, 0);
    std::uint64_t c = code;
    for (int i = 0; i < k; ++i) {
      p[static_cast<std::size_t>(i)] = static_cast<Elem>(c % f.order());
      c /= f.order();
    }
    p[static_cast<std::size_t>(k)] = 1;
    out.push_back(std::move(p));
  }
  return out;
}

bool divides(const FiniteField& f, const Poly& a, Poly b) {
  const std::size_t da = a.size() - 1;
  while (b.size() > da) {
    const Elem lead = b.back();
    const std::size_t shift = b.size() - 1 - da;
    for (std::size_t i = 0; i <= da; ++i) b[shift + i] = f.sub(b[shift + i], f.mul(lead, a[i]));
    b.pop_back();
  }
  return std::all_of(b.begin(), b.end(), [](Elem x) { return x == 0; });
}

void invariant_sequences(const FiniteField& f, const std::vector<std::vector<Poly>>& by_degree, const Poly* prev,
                         int remaining, std::vector<const Poly*>& seq, std::vector<std::vector<const Poly*>>& out) {
  if (remaining == 0) {
    out.push_back(seq);
    return;
  }
  const int lo = prev ? static_cast<int>(prev->size()) - 1 : 1;
  for (int k = lo; k <= remaining; ++k) {
    for (const auto& g : by_degree[static_cast<std::size_t>(k)]) {
      if (prev && !divides(f, *prev, g)) continue;
      seq.push_back(&g);
      invariant_sequences(f, by_degree, &g, remaining - k, seq, out);
      seq.pop_back();
    }
  }
}

void check_budget(const QuiverPtr& quiver, const DimVector& dims, const FiniteField& field, const CensusConfig& cfg) {
  if (dims.size() != quiver->num_vertices()) throw DomainError("dimension vector length mismatch");
  if (field.order() > cfg.max_field_order)
    throw BudgetError("field order " + std::to_string(field.order()) + " exceeds the budget " +
                          std::to_string(cfg.max_field_order),
                      field.order());
  if (total_dimension(dims) > cfg.max_total_dim)
    throw BudgetError("total dimension " + std::to_string(total_dimension(dims)) + " exceeds the budget " +
                          std::to_string(cfg.max_total_dim),
                      total_dimension(dims));
}

/// Classifies representatives in parallel; the first exception is rethrown.
void classify(std::vector<OrbitRecord>& recs, const Theta& theta, const FiniteField& field, int max_dim,
              const CensusConfig& cfg) {
  SubspaceCatalog catalog(field, max_dim);
  StabilityConfig sc = cfg.stability;
  sc.parallel = !cfg.parallel;
  std::exception_ptr err;
  std::mutex mu;
  const auto n = static_cast<std::int64_t>(recs.size());
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      auto& r = recs[static_cast<std::size_t>(i)];
      r.stable = stability_verdict(r.rep, theta, sc, &catalog).verdict == Verdict::Stable;
      r.geom_stable = r.stable && is_schur(r.rep);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace

std::vector<Matrix<FiniteField>> similarity_classes(const FiniteField& field, int d) {
  if (d < 0) throw DomainError("negative matrix size");
  std::vector<std::vector<Poly>> by_degree(static_cast<std::size_t>(d) + 1);
  for (int k = 1; k <= d; ++k) by_degree[static_cast<std::size_t>(k)] = monic_of_degree(field, k);
  std::vector<std::vector<const Poly*>> seqs;
  std::vector<const Poly*> seq;
  invariant_sequences(field, by_degree, nullptr, d, seq, seqs);
  std::vector<Matrix<FiniteField>> out;
  for (const auto& s : seqs) {
    Matrix<FiniteField> m(field, static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    std::size_t off = 0;
    for (const Poly* p : s) {
      const std::size_t k = p->size() - 1;
      for (std::size_t i = 1; i < k; ++i) m(off + i, off + i - 1) = 1;
      for (std::size_t i = 0; i < k; ++i) m(off + i, off + k - 1) = field.neg((*p)[i]);
      off += k;
    }
    out.push_back(std::move(m));
  }
  return out;
}

CensusResult orbit_census(const QuiverPtr& quiver, const DimVector& dims, const Theta& theta, const FiniteField& field,
                          const CensusConfig& cfg) {
  check_budget(quiver, dims, field, cfg);
  if (theta.size() != quiver->num_vertices()) throw DomainError("stability parameter length mismatch");
  CensusResult res{quiver, dims, theta, field, cfg.method, 0, 0, 0, 0, {}};
  if (res.method == CensusMethod::Auto)
    res.method = quiver->is_single_loop() ? CensusMethod::SimilarityClasses : CensusMethod::OrbitKernel;
  const int max_dim = dims.empty() ? 0 : *std::max_element(dims.begin(), dims.end());

  std::vector<OrbitRecord> recs;
  if (res.method == CensusMethod::SimilarityClasses) {
    if (!quiver->is_single_loop()) throw DomainError("similarity classes need a quiver with one vertex and one loop");
    for (auto& m : similarity_classes(field, dims[0]))
      recs.push_back({Representation<FiniteField>(quiver, field, dims, {std::move(m)}), 0, false, false});
  } else {
    std::size_t entries = 0;
    for (const auto& a : quiver->arrows()) entries += static_cast<std::size_t>(dims[a.head] * dims[a.tail]);
    const double points = std::pow(static_cast<double>(field.order()), static_cast<double>(entries));
    if (points > static_cast<double>(cfg.max_points)) {
      std::ostringstream msg;
      msg << "Rep_{Q,d}(" << field.name() << ") has " << std::setprecision(4) << points << " points, budget "
          << cfg.max_points;
      throw BudgetError(msg.str(), points);
    }
    kernels::RepSpace space(quiver, field, dims);
    res.points = space.count();
    auto labels = cfg.parallel ? kernels::orbit_labels_parallel(space) : kernels::orbit_labels_serial(space);
    std::vector<std::uint32_t> size(labels.size(), 0);
    for (auto l : labels) ++size[l];
    for (std::uint64_t c = 0; c < labels.size(); ++c)
      if (labels[c] == c) recs.push_back({space.decode(c), size[c], false, false});
  }
  res.orbits = recs.size();
  classify(recs, theta, field, max_dim, cfg);
  for (auto& r : recs) {
    if (!r.stable) continue;
    ++res.stable;
    if (r.geom_stable) ++res.geom_stable;
    res.stable_orbits.push_back(std::move(r));
  }
  return res;
}

std::uint64_t count_geom_stable_orbits(const QuiverPtr& quiver, const DimVector& dims, const Theta& theta,
                                       std::uint32_t q, const CensusConfig& cfg) {
  return orbit_census(quiver, dims, theta, field_of_order(q), cfg).geom_stable;
}

namespace {

Rational evaluate(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

/// Interpolating polynomial through the first k points (Newton form expanded).
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys, std::size_t k) {
  std::vector<Rational> dd(ys.begin(), ys.begin() + static_cast<long>(k));
  for (std::size_t j = 1; j < k; ++j)
    for (std::size_t i = k - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      dd[i].canonicalize();
    }
  std::vector<Rational> c(1, 0);
  for (std::size_t i = k; i-- > 0;) {
    // c <- c * (x - xs[i]) + dd[i]
    std::vector<Rational> next(c.size() + 1, 0);
    for (std::size_t t = 0; t < c.size(); ++t) {
      next[t + 1] += c[t];
      next[t] -= c[t] * xs[i];
    }
    next[0] += dd[i];
    c = std::move(next);
  }
  for (auto& x : c) x.canonicalize();
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

}  // namespace

PolynomialFit fit_polynomial(const std::vector<std::uint32_t>& qs, const std::vector<std::uint64_t>& counts) {
  if (qs.size() != counts.size() || qs.empty()) throw DomainError("fit_polynomial: need matching nonempty lists");
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = i + 1; j < qs.size(); ++j)
      if (qs[i] == qs[j]) throw DomainError("fit_polynomial: repeated q = " + std::to_string(qs[i]));
  PolynomialFit fit{qs, counts, {}, {}, true};
  std::vector<Rational> xs, ys;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    xs.emplace_back(qs[i]);
    ys.emplace_back(Integer(std::to_string(counts[i])));
  }
  for (std::size_t k = 1; k <= qs.size(); ++k) {
    fit.coefficients = interpolate(xs, ys, k);
    bool all = true;
    for (std::size_t i = k; i < qs.size() && all; ++i) all = evaluate(fit.coefficients, xs[i]) == ys[i];
    if (all) break;
  }
  for (std::size_t i = 0; i < qs.size(); ++i) {
    Rational r = ys[i] - evaluate(fit.coefficients, xs[i]);
    r.canonicalize();
    fit.residuals.push_back(r);
  }
  for (const auto& c : fit.coefficients)
    if (c.get_den() != 1) fit.integral = false;
  return fit;
}

std::string PolynomialFit::describe() const {
  std::string out;
  for (std::size_t i = coefficients.size(); i-- > 0;) {
    const Rational& c = coefficients[i];
    if (c == 0) continue;
    Rational a = abs(c);
    std::string mono = i == 0 ? "" : (i == 1 ? "q" : "q^" + std::to_string(i));
    std::string term = (a == 1 && i > 0) ? mono : (i == 0 ? to_string(a) : to_string(a) + mono);
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

PolynomialFit census_polynomiality(const QuiverPtr& quiver, const DimVector& dims, const Theta& theta,
                                   const std::vector<std::uint32_t>& qs, const CensusConfig& cfg) {
  std::vector<std::uint64_t> counts;
  for (auto q : qs) counts.push_back(count_geom_stable_orbits(quiver, dims, theta, q, cfg));
  return fit_polynomial(qs, counts);
}

AuditResult index_divisibility_audit(const std::vector<IndexRecord>& records) {
  AuditResult out;
  for (const auto& r : records) {
    for (std::size_t v = 0; v < r.dims.size(); ++v) {
      if (r.index >= 1 && r.dims[v] % r.index == 0) continue;
      out.ok = false;
      out.violations.push_back((r.label.empty() ? std::string("record") : r.label) + ": index " +
                               std::to_string(r.index) + " does not divide d_" + std::to_string(v) + " = " +
                               std::to_string(r.dims[v]));
    }
  }
  return out;
}

IndexRecord index_record(const ClassificationRecord& r) { return {r.label, r.index, r.dims}; }

}  // namespace qf
