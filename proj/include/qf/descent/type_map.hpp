#pragma once

#include "qf/descent/descent.hpp"
#include "qf/quiver/certificate.hpp"
#include "qf/quiver/stability.hpp"

#include <optional>
#include <random>
#include <string>

namespace qf {

struct TypeMapOptions {
  Theta theta;
  CertificateConfig certificate;
  IsoSearchOptions iso;
  std::uint64_t seed = 0;
};

/// Geometric stability of W over L; throws DomainError when W is not
/// geometrically stable and InconclusiveError when no certificate is found.
/// Returns a short description of the evidence.
std::string require_geometrically_stable(const FFRep& w, const TypeMapOptions& opts);
std::string require_geometrically_stable(const Representation<QuadraticField>& w, const TypeMapOptions& opts);

/// The type of the orbit of W: nullopt when the orbit is not Galois-fixed.
template <class Pair>
std::optional<TypeMapResult<Pair>> type_map(const ExtRep<Pair>& w, const Pair& pair, const TypeMapOptions& opts,
                                            std::mt19937_64& rng) {
  TypeMapResult<Pair> out{BrauerClass::trivial(), DescentDatum<Pair>{pair, w, {}, pair.base().one()}, {}};
  out.log.push_back(require_geometrically_stable(w, opts));
  auto dd = solve_modifying_u(w, pair, rng, opts.iso, opts.seed);
  if (!dd) return std::nullopt;
  out.log.push_back("solved u : sigma(W) -> W from Hom(sigma(W), W)");
  out.cls = type_class(*dd);
  out.datum = std::move(*dd);
  return out;
}

}  // namespace qf
