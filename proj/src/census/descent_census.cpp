#include "qf/census/census.hpp"

#include "qf/descent/descent.hpp"
#include "qf/descent/division_form.hpp"
#include "qf/errors.hpp"
#include "qf/quiver/base_change.hpp"
#include "qf/quiver/hom.hpp"
#include "qf/quiver/isomorphism.hpp"

#include <random>

namespace qf {

DescentCensusReport verify_descent_census(const QuiverPtr& quiver, const DimVector& dims, const Theta& theta,
                                          std::uint32_t q, int n, const CensusConfig& cfg, std::uint64_t seed) {
  if (!is_prime(Integer(q))) throw DomainError("verify_descent_census needs a prime q, got " + std::to_string(q));
  if (n < 1) throw DomainError("extension degree must be positive");
  const FinitePair pair(q, n);
  DescentCensusReport rep;
  rep.q = q;
  rep.n = n;
  const auto ext = orbit_census(quiver, dims, theta, pair.ext(), cfg);
  const auto base = orbit_census(quiver, dims, theta, pair.base(), cfg);
  rep.ext_geom_stable = ext.geom_stable;
  rep.base_geom_stable = base.geom_stable;

  std::mt19937_64 rng(seed);
  const IsoSearchOptions iso;
  for (const auto& r : ext.stable_orbits) {
    if (!r.geom_stable) continue;
    DescentOrbit o{r.rep, false, std::nullopt, 0};
    auto dd = solve_modifying_u(r.rep, pair, rng, iso, seed);
    if (dd) {
      o.fixed = true;
      o.lambda = dd->lambda;
      ++rep.fixed;
      auto h = hilbert90_descend(*dd, rng, 64, seed);
      if (!is_isomorphic(base_change(h.form, pair), r.rep, rng, iso, seed))
        rep.violations.push_back("orbit " + std::to_string(rep.orbits.size()) +
                                 ": base change of the descended form is not in the orbit");
      if (!is_geometrically_stable(h.form, theta, cfg.stability))
        rep.violations.push_back("orbit " + std::to_string(rep.orbits.size()) +
                                 ": descended form is not geometrically stable");
      o.form = std::move(h.form);
    }
    rep.orbits.push_back(std::move(o));
  }

  for (std::size_t i = 0; i < rep.orbits.size(); ++i) {
    if (!rep.orbits[i].form) continue;
    for (std::size_t j = i + 1; j < rep.orbits.size(); ++j) {
      if (!rep.orbits[j].form) continue;
      if (is_isomorphic(*rep.orbits[i].form, *rep.orbits[j].form, rng, iso, seed))
        rep.violations.push_back("orbits " + std::to_string(i) + " and " + std::to_string(j) +
                                 " have isomorphic forms");
    }
  }

  for (const auto& b : base.stable_orbits) {
    if (!b.geom_stable) continue;
    const auto lifted = base_change(b.rep, pair);
    int hits = 0;
    for (const auto& o : rep.orbits)
      if (o.fixed && is_isomorphic(lifted, o.rep, rng, iso, seed)) ++hits;
    if (hits != 1)
      rep.violations.push_back("an orbit over " + pair.base().name() + " meets " + std::to_string(hits) +
                               " fixed orbits over " + pair.ext().name());
  }

  if (rep.fixed != rep.base_geom_stable)
    rep.violations.push_back(std::to_string(rep.fixed) + " fixed orbits over " + pair.ext().name() + " but " +
                             std::to_string(rep.base_geom_stable) + " geometrically stable orbits over " +
                             pair.base().name());
  return rep;
}

ClassificationRecord decompose_rational_point(const FFRep& w, const FinitePair& pair, const TypeMapOptions& opts,
                                              std::mt19937_64& rng, const std::string& label) {
  auto tm = type_map(w, pair, opts, rng);
  if (!tm) throw DomainError("orbit not Galois-fixed");
  ClassificationRecord rec;
  rec.label = label;
  rec.cls = tm->cls;
  rec.index = class_index(tm->datum);
  rec.dims = w.dims();
  rec.lambda = std::to_string(tm->datum.lambda);
  rec.notes = tm->log;
  auto h = hilbert90_descend(tm->datum, rng, 64, opts.seed);
  if (!is_isomorphic(base_change(h.form, pair), w, rng, opts.iso, opts.seed))
    throw InternalInvariantError("descended form does not base change to the input orbit");
  rec.notes.push_back("form over " + pair.base().name() + " by Hilbert 90 after " + std::to_string(h.attempts) +
                      " attempt(s)");
  rec.finite_form = std::move(h.form);
  return rec;
}

ClassificationRecord decompose_rational_point(const Representation<QuadraticField>& w, const QuadraticPair& pair,
                                              const TypeMapOptions& opts, std::mt19937_64& rng,
                                              const std::string& label) {
  auto tm = type_map(w, pair, opts, rng);
  if (!tm) throw DomainError("orbit not Galois-fixed");
  ClassificationRecord rec;
  rec.label = label;
  rec.cls = tm->cls;
  rec.index = class_index(tm->datum);
  rec.dims = w.dims();
  rec.lambda = to_string(tm->datum.lambda);
  rec.notes = tm->log;
  if (rec.cls.is_trivial()) {
    auto h = hilbert90_descend(tm->datum, rng, 64, opts.seed);
    if (!is_isomorphic(base_change(h.form, pair), w, rng, opts.iso, opts.seed))
      throw InternalInvariantError("descended form does not base change to the input orbit");
    rec.notes.push_back("form over Q by Hilbert 90 after " + std::to_string(h.attempts) + " attempt(s)");
    rec.rational_form = std::move(h.form);
    return rec;
  }
  for (int d : rec.dims)
    if (d % rec.index != 0)
      throw InternalInvariantError("class of index " + std::to_string(rec.index) + " on dimension vector " +
                                   to_string(rec.dims));
  auto div = division_form(tm->datum, rng, 256, opts.seed);
  if (!is_isomorphic(morita_split(div.form, pair), w, rng, opts.iso, opts.seed))
    throw InternalInvariantError("split division form is not isomorphic to the input");
  rec.notes.push_back("division form over " + rec.cls.describe() + " after " + std::to_string(div.attempts) +
                      " attempt(s)");
  rec.division_dims = div.form.dims();
  rec.division_form = std::move(div.form);
  rec.twisted = TwistedRep<QuadraticPair>{tm->datum, rec.index};
  return rec;
}

}  // namespace qf
