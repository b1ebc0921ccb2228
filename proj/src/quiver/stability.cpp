#include "qf/quiver/stability.hpp"

#include "qf/kernels/subrep_kernel.hpp"
#include "qf/quiver/hom.hpp"

#include <algorithm>
#include <memory>
#include <optional>

namespace qf {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable:
      return "Stable";
    case Verdict::StrictlySemistable:
      return "StrictlySemistable";
    case Verdict::Unstable:
      return "Unstable";
    case Verdict::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

namespace {

struct Lattice {
  std::shared_ptr<const SubspaceCatalog> owned;
  const SubspaceCatalog* catalog = nullptr;
  std::vector<kernels::SubspaceTuple> tuples;

  const Subspace& space(const FFRep& w, const kernels::SubspaceTuple& t, std::size_t v) const {
    return catalog->of(w.dim(v))[t[v]];
  }
  DimVector dims(const FFRep& w, const kernels::SubspaceTuple& t) const {
    DimVector e;
    for (std::size_t v = 0; v < t.size(); ++v) e.push_back(space(w, t, v).dim);
    return e;
  }
  SubrepWitness<FiniteField> witness(const FFRep& w, const kernels::SubspaceTuple& t) const {
    SubrepWitness<FiniteField> s;
    for (std::size_t v = 0; v < t.size(); ++v) {
      const auto& sp = space(w, t, v);
      Matrix<FiniteField> b(w.field(), static_cast<std::size_t>(sp.ambient), static_cast<std::size_t>(sp.dim));
      for (int r = 0; r < sp.dim; ++r)
        for (int c = 0; c < sp.ambient; ++c) b(static_cast<std::size_t>(c), static_cast<std::size_t>(r)) = sp.at(r, c);
      s.dims.push_back(sp.dim);
      s.basis.push_back(std::move(b));
    }
    return s;
  }
  bool contained(const FFRep& w, const kernels::SubspaceTuple& a, const kernels::SubspaceTuple& b) const {
    for (std::size_t v = 0; v < a.size(); ++v) {
      const auto& sa = space(w, a, v);
      const auto& sb = space(w, b, v);
      for (int r = 0; r < sa.dim; ++r) {
        std::span<const FiniteField::Elem> row(sa.rows.data() + static_cast<std::size_t>(r * sa.ambient),
                                               static_cast<std::size_t>(sa.ambient));
        if (!in_subspace(w.field(), sb, row)) return false;
      }
    }
    return true;
  }
};

Lattice build_lattice(const FFRep& w, const StabilityConfig& cfg, const SubspaceCatalog* catalog) {
  const double size = kernels::subrep_search_size(w);
  if (size > static_cast<double>(cfg.max_subspace_checks))
    throw BudgetError("subrepresentation search needs " + std::to_string(static_cast<std::uint64_t>(size)) +
                          " subspace tuples, budget is " + std::to_string(cfg.max_subspace_checks),
                      size);
  Lattice lat;
  int max_dim = 0;
  for (int d : w.dims()) max_dim = std::max(max_dim, d);
  if (catalog != nullptr && catalog->field() == w.field() && catalog->max_dim() >= max_dim) {
    lat.catalog = catalog;
  } else {
    lat.owned = std::make_shared<const SubspaceCatalog>(w.field(), max_dim);
    lat.catalog = lat.owned.get();
  }
  lat.tuples = cfg.parallel ? kernels::closed_tuples_parallel(w, *lat.catalog)
                            : kernels::closed_tuples_serial(w, *lat.catalog);
  return lat;
}

bool is_proper_nonzero(const DimVector& e, const DimVector& d) {
  const int te = total_dimension(e);
  return te > 0 && e != d;
}

}  // namespace

std::vector<SubrepWitness<FiniteField>> enumerate_subreps(const FFRep& w, const StabilityConfig& cfg,
                                                          const SubspaceCatalog* catalog) {
  Lattice lat = build_lattice(w, cfg, catalog);
  std::vector<SubrepWitness<FiniteField>> out;
  out.reserve(lat.tuples.size());
  for (const auto& t : lat.tuples) out.push_back(lat.witness(w, t));
  return out;
}

StabilityVerdict<FiniteField> stability_verdict(const FFRep& w, const Theta& theta, const StabilityConfig& cfg,
                                                const SubspaceCatalog* catalog) {
  const mpq_class mu = slope(w.dims(), theta);
  Lattice lat = build_lattice(w, cfg, catalog);
  const kernels::SubspaceTuple* best = nullptr;
  mpq_class best_slope;
  int best_total = -1;
  for (const auto& t : lat.tuples) {
    DimVector e = lat.dims(w, t);
    if (!is_proper_nonzero(e, w.dims())) continue;
    mpq_class s = slope(e, theta);
    const int te = total_dimension(e);
    if (best == nullptr || s > best_slope || (s == best_slope && te > best_total)) {
      best = &t;
      best_slope = s;
      best_total = te;
    }
  }
  StabilityVerdict<FiniteField> out;
  if (best == nullptr || best_slope < mu) {
    out.verdict = Verdict::Stable;
  } else {
    out.verdict = best_slope > mu ? Verdict::Unstable : Verdict::StrictlySemistable;
    out.witness = lat.witness(w, *best);
  }
  return out;
}

namespace {

/// Every nonzero subrepresentation has the same slope.
bool constant_slope(const FFRep& w, const Theta& theta) {
  std::optional<long> t;
  for (std::size_t v = 0; v < w.dims().size(); ++v) {
    if (w.dim(v) == 0) continue;
    if (t && *t != theta[v]) return false;
    t = theta[v];
  }
  return true;
}

}  // namespace

bool is_semistable(const FFRep& w, const Theta& theta, const StabilityConfig& cfg, const SubspaceCatalog* catalog) {
  if (theta.size() == w.dims().size() && constant_slope(w, theta)) return true;
  return stability_verdict(w, theta, cfg, catalog).verdict != Verdict::Unstable;
}

bool is_geometrically_stable(const FFRep& w, const Theta& theta, const StabilityConfig& cfg,
                             const SubspaceCatalog* catalog) {
  if (stability_verdict(w, theta, cfg, catalog).verdict != Verdict::Stable) return false;
  return is_schur(w);
}

SubrepWitness<FiniteField> scss(const FFRep& w, const Theta& theta, const StabilityConfig& cfg,
                                const SubspaceCatalog* catalog) {
  if (w.total_dim() == 0) throw DomainError("scss of the zero representation");
  Lattice lat = build_lattice(w, cfg, catalog);
  std::vector<const kernels::SubspaceTuple*> top;
  mpq_class best;
  for (const auto& t : lat.tuples) {
    DimVector e = lat.dims(w, t);
    if (total_dimension(e) == 0) continue;
    mpq_class s = slope(e, theta);
    if (top.empty() || s > best) {
      top.assign(1, &t);
      best = s;
    } else if (s == best) {
      top.push_back(&t);
    }
  }
  const kernels::SubspaceTuple* biggest = top.front();
  int biggest_total = total_dimension(lat.dims(w, *biggest));
  for (const auto* t : top) {
    const int te = total_dimension(lat.dims(w, *t));
    if (te > biggest_total) {
      biggest = t;
      biggest_total = te;
    }
  }
  for (const auto* t : top) {
    if (!lat.contained(w, *t, *biggest))
      throw InternalInvariantError("maximal-slope subrepresentations have no unique maximal element");
  }
  return lat.witness(w, *biggest);
}

HNFiltration<FiniteField> hn_filtration(const FFRep& w, const Theta& theta, const StabilityConfig& cfg) {
  if (w.total_dim() == 0) throw DomainError("HN filtration of the zero representation");
  HNFiltration<FiniteField> out;
  if (theta.size() == w.dims().size() && constant_slope(w, theta)) {
    out.steps.push_back(normalize(whole(w)));
    out.slopes.push_back(slope(w.dims(), theta));
    return out;
  }
  SubrepWitness<FiniteField> first = scss(w, theta, cfg);
  out.steps.push_back(first);
  out.slopes.push_back(slope(first.dims, theta));
  if (first.dims == w.dims()) return out;

  Quotient<FiniteField> quot = quotient(w, first);
  HNFiltration<FiniteField> rest = hn_filtration(quot.rep, theta, cfg);
  for (std::size_t i = 0; i < rest.steps.size(); ++i) {
    out.steps.push_back(normalize(pullback(first, quot, rest.steps[i])));
    out.slopes.push_back(rest.slopes[i]);
  }
  return out;
}

}  // namespace qf
