#include "qf/descent/type_map.hpp"

#include "qf/quiver/hom.hpp"

namespace qf {

std::string require_geometrically_stable(const FFRep& w, const TypeMapOptions& opts) {
  auto v = stability_verdict(w, opts.theta, opts.certificate.stability);
  if (v.verdict != Verdict::Stable) throw DomainError("representation is not stable (" + to_string(v.verdict) + ")");
  if (!is_schur(w)) throw DomainError("representation is stable but not geometrically stable (End(W) != L)");
  return "geometrically stable over " + w.field().name() + " (exhaustive)";
}

std::string require_geometrically_stable(const Representation<QuadraticField>& w, const TypeMapOptions& opts) {
  auto v = geom_stability_certificate(w, opts.theta, opts.certificate);
  switch (v.verdict) {
    case Verdict::Stable:
      return "geometrically stable: " + v.note;
    case Verdict::Unknown:
      throw InconclusiveError("geometric stability not certified: " + v.note, opts.seed);
    default:
      throw DomainError("representation is not geometrically stable (" + to_string(v.verdict) + ")");
  }
}

}  // namespace qf
