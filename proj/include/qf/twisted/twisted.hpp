#pragma once

#include "qf/descent/descent.hpp"
#include "qf/descent/division_form.hpp"
#include "qf/quiver/certificate.hpp"
#include "qf/twisted/drep.hpp"

#include <random>
#include <string>
#include <vector>

namespace qf {

/// A twisted representation in descent-datum form: W over L, the transition
/// u : sigma(W) -> W with cyclic cocycle identity u sigma(u) ... = lambda,
/// and the declared index e of the class.
template <class Pair>
struct TwistedRep {
  DescentDatum<Pair> datum;
  int index = 1;
};

/// dim_L(W) / e; throws DomainError when e does not divide.
template <class Pair>
DimVector twisted_dim(const TwistedRep<Pair>& t) {
  if (t.index < 1) throw DomainError("twisted representation with index " + std::to_string(t.index));
  DimVector out;
  for (int d : t.datum.rep.dims()) {
    if (d % t.index != 0)
      throw DomainError("index " + std::to_string(t.index) + " does not divide dimension " + std::to_string(d));
    out.push_back(d / t.index);
  }
  return out;
}

/// The index of the class of the datum, where decidable.
int class_index(const DescentDatum<FinitePair>& dd);
int class_index(const DescentDatum<QuadraticPair>& dd);

/// Diagnostics; empty means valid.
template <class Pair>
std::vector<std::string> validate_twisted(const TwistedRep<Pair>& t) {
  auto out = datum_problems(t.datum);
  if (!out.empty()) return out;
  const Quiver& q = t.datum.rep.quiver();
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    if (t.index < 1 || t.datum.rep.dim(v) % t.index != 0)
      out.push_back("declared index " + std::to_string(t.index) + " does not divide the dimension at vertex '" +
                    q.vertices()[v] + "'");
  }
  const int e = class_index(t.datum);
  if (e != t.index)
    out.push_back("declared index " + std::to_string(t.index) + " differs from the index " + std::to_string(e) +
                  " of the class");
  return out;
}

/// (morita_split(R), u_std, b) for R over D = (a, b)_Q.
TwistedRep<QuadraticPair> drep_to_twisted(const DRep& r);

/// The division form of a nontrivial twisted representation.
DRep twisted_to_drep(const TwistedRep<QuadraticPair>& t, std::mt19937_64& rng, std::uint64_t seed = 0);

/// Geometric stability of R decided through its split L-representation.
StabilityVerdict<QuadraticField> drep_is_geom_stable(const DRep& r, const Theta& theta,
                                                     const CertificateConfig& cfg = {});

}  // namespace qf
