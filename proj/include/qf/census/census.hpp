#pragma once

#include "qf/arith/brauer.hpp"
#include "qf/arith/finite_field.hpp"
#include "qf/arith/galois_pair.hpp"
#include "qf/arith/rational_field.hpp"
#include "qf/descent/type_map.hpp"
#include "qf/quiver/stability.hpp"
#include "qf/twisted/twisted.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qf {

enum class CensusMethod { Auto, OrbitKernel, SimilarityClasses };

struct CensusConfig {
  /// Largest |Rep_{Q,d}(F_q)| enumerated point by point.
  std::uint64_t max_points = std::uint64_t{1} << 24;
  /// Largest field order accepted.
  std::uint32_t max_field_order = 256;
  /// Largest total dimension accepted.
  int max_total_dim = 6;
  /// Parallel orbit labelling and stability tests.
  bool parallel = true;
  CensusMethod method = CensusMethod::Auto;
  StabilityConfig stability;
};

std::string to_string(CensusMethod m);

/// F_q for a prime power q, with the default modulus.
FiniteField field_of_order(std::uint32_t q);

struct OrbitRecord {
  FFRep rep;
  std::uint64_t size = 0;  // 0 when not computed
  bool stable = false;
  bool geom_stable = false;
};

struct CensusResult {
  QuiverPtr quiver;
  DimVector dims;
  Theta theta;
  FiniteField field;
  CensusMethod method = CensusMethod::Auto;
  std::uint64_t points = 0;  // |Rep_{Q,d}(F_q)| when enumerated, else 0
  std::uint64_t orbits = 0;
  std::uint64_t stable = 0;
  std::uint64_t geom_stable = 0;
  /// Stable orbits, in increasing order of their canonical representative.
  std::vector<OrbitRecord> stable_orbits;

  std::uint64_t stable_not_geom() const { return stable - geom_stable; }
};

/// Every orbit of prod GL_{d_v}(F_q) on Rep_{Q,d}(F_q), classified by stability.
/// Throws BudgetError when a configured bound is exceeded.
CensusResult orbit_census(const QuiverPtr& quiver, const DimVector& dims, const Theta& theta, const FiniteField& field,
                          const CensusConfig& cfg = {});

std::uint64_t count_geom_stable_orbits(const QuiverPtr& quiver, const DimVector& dims, const Theta& theta,
                                       std::uint32_t q, const CensusConfig& cfg = {});

/// Representatives of the conjugacy classes of d x d matrices over F_q:
/// block-diagonal companion matrices of invariant factor sequences f_1 | ... | f_r.
std::vector<Matrix<FiniteField>> similarity_classes(const FiniteField& field, int d);

struct PolynomialFit {
  std::vector<std::uint32_t> qs;
  std::vector<std::uint64_t> counts;
  std::vector<Rational> coefficients;  // low degree first, trailing zeros removed
  std::vector<Rational> residuals;     // counts - P(q)
  bool integral = true;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  /// e.g. "q + 1"
  std::string describe() const;
};

/// The lowest-degree polynomial through the points (q_i, counts_i); the
/// interpolating polynomial of degree <= n-1 when nothing lower fits.
PolynomialFit fit_polynomial(const std::vector<std::uint32_t>& qs, const std::vector<std::uint64_t>& counts);

PolynomialFit census_polynomiality(const QuiverPtr& quiver, const DimVector& dims, const Theta& theta,
                                   const std::vector<std::uint32_t>& qs, const CensusConfig& cfg = {});

struct DescentOrbit {
  FFRep rep;                  // over F_{q^n}
  bool fixed = false;
  std::optional<FFRep> form;  // over F_q
  std::uint32_t lambda = 0;
};

struct DescentCensusReport {
  std::uint32_t q = 0;
  int n = 0;
  std::uint64_t ext_geom_stable = 0;
  std::uint64_t fixed = 0;
  std::uint64_t base_geom_stable = 0;
  std::vector<DescentOrbit> orbits;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Exhaustive check over F_q inside F_{q^n}, q prime: every Frobenius-fixed
/// geometrically stable orbit descends to a geometrically stable F_q-form
/// whose base change lies in that orbit, forms of distinct orbits are not
/// isomorphic, every F_q-orbit is reached, and the counts agree.
DescentCensusReport verify_descent_census(const QuiverPtr& quiver, const DimVector& dims, const Theta& theta,
                                          std::uint32_t q, int n, const CensusConfig& cfg = {},
                                          std::uint64_t seed = 0);

struct ClassificationRecord {
  std::string label;
  BrauerClass cls;
  int index = 1;
  DimVector dims;
  std::string lambda;  // cocycle scalar of the membership witness u
  std::optional<FFRep> finite_form;
  std::optional<Representation<RationalField>> rational_form;
  std::optional<DRep> division_form;
  DimVector division_dims;
  std::optional<TwistedRep<QuadraticPair>> twisted;
  std::vector<std::string> notes;
};

/// Type of a Galois-fixed geometrically stable point and its form over k or
/// over the division algebra. Throws DomainError when the orbit is not fixed.
ClassificationRecord decompose_rational_point(const FFRep& w, const FinitePair& pair, const TypeMapOptions& opts,
                                              std::mt19937_64& rng, const std::string& label = {});
ClassificationRecord decompose_rational_point(const Representation<QuadraticField>& w, const QuadraticPair& pair,
                                              const TypeMapOptions& opts, std::mt19937_64& rng,
                                              const std::string& label = {});

struct IndexRecord {
  std::string label;
  int index = 1;
  DimVector dims;
};

IndexRecord index_record(const ClassificationRecord& r);

struct AuditResult {
  bool ok = true;
  std::vector<std::string> violations;
};

/// ind(class) | d_v for every vertex of every record.
AuditResult index_divisibility_audit(const std::vector<IndexRecord>& records);

}  // namespace qf
