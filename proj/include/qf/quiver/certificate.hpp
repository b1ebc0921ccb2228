#pragma once

#include "qf/arith/quadratic_field.hpp"
#include "qf/arith/rational_field.hpp"
#include "qf/quiver/stability.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qf {

struct CertificateConfig {
  std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13};
  StabilityConfig stability;
};

/// Entrywise reduction mod p; nullopt when p divides a denominator.
std::optional<FFRep> reduce_mod_p(const Representation<RationalField>& w, std::uint32_t p);

/// Reduction along sqrt(m) -> r with r^2 = m mod p, using the smallest such r.
/// nullopt when p divides a denominator or m is not a square mod p.
std::optional<FFRep> reduce_mod_p(const Representation<QuadraticField>& w, std::uint32_t p);

/// Smallest r in [0, p) with r^2 = m mod p.
std::optional<std::uint32_t> root_of_m_mod_p(std::int64_t m, std::uint32_t p);

/// One-sided stability certificate over Q or Q(sqrt m).
///
/// Stable: some reduction is geometrically stable over F_p (a destabilizing
/// subrepresentation over the algebraic closure would specialize).
/// Unstable: an exact subrepresentation of larger slope, re-verified.
/// StrictlySemistable: some reduction is semistable and an exact proper
/// subrepresentation of equal slope was found.
/// Unknown otherwise; the note says why.
StabilityVerdict<RationalField> geom_stability_certificate(const Representation<RationalField>& w, const Theta& theta,
                                                           const CertificateConfig& cfg = {});
StabilityVerdict<QuadraticField> geom_stability_certificate(const Representation<QuadraticField>& w,
                                                            const Theta& theta, const CertificateConfig& cfg = {});

}  // namespace qf
