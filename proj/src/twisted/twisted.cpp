#include "qf/twisted/twisted.hpp"

#include "qf/arith/hilbert.hpp"

namespace qf {

int class_index(const DescentDatum<FinitePair>&) { return 1; }

int class_index(const DescentDatum<QuadraticPair>& dd) {
  return quat_is_division(Rational(dd.pair.m()), dd.lambda) ? 2 : 1;
}

TwistedRep<QuadraticPair> drep_to_twisted(const DRep& r) {
  QuadraticPair pair = splitting_pair(r.field());
  LRep w = morita_split(r, pair);
  LTuple u = standard_structure(pair.ext(), w.dims(), r.field().b());
  TwistedRep<QuadraticPair> t{DescentDatum<QuadraticPair>{pair, std::move(w), std::move(u), r.field().b()}, 1};
  t.index = class_index(t.datum);
  return t;
}

DRep twisted_to_drep(const TwistedRep<QuadraticPair>& t, std::mt19937_64& rng, std::uint64_t seed) {
  auto problems = validate_twisted(t);
  if (!problems.empty()) throw DomainError("twisted_to_drep: " + problems.front());
  if (t.index != 2) throw DomainError("twisted_to_drep needs a class of index 2");
  return division_form(t.datum, rng, 256, seed).form;
}

StabilityVerdict<QuadraticField> drep_is_geom_stable(const DRep& r, const Theta& theta, const CertificateConfig& cfg) {
  return geom_stability_certificate(morita_split(r), theta, cfg);
}

}  // namespace qf
