#pragma once

#include "qf/arith/finite_field.hpp"
#include "qf/quiver/subrep.hpp"
#include "qf/quiver/subspaces.hpp"

#include <cstdint>
#include <vector>

namespace qf {

using FFRep = Representation<FiniteField>;

struct StabilityConfig {
  /// Upper bound on the number of subspace tuples visited per representation.
  std::uint64_t max_subspace_checks = 1000000;
  /// Use the OpenMP kernel (true) or the serial reference kernel.
  bool parallel = true;
};

/// All subrepresentations (including 0 and W) of a representation over F_q.
/// `catalog`, when given, must cover every d_v. Throws BudgetError when the
/// number of subspace tuples exceeds the budget.
std::vector<SubrepWitness<FiniteField>> enumerate_subreps(const FFRep& w, const StabilityConfig& cfg = {},
                                                          const SubspaceCatalog* catalog = nullptr);

StabilityVerdict<FiniteField> stability_verdict(const FFRep& w, const Theta& theta, const StabilityConfig& cfg = {},
                                                const SubspaceCatalog* catalog = nullptr);

bool is_semistable(const FFRep& w, const Theta& theta, const StabilityConfig& cfg = {},
                   const SubspaceCatalog* catalog = nullptr);

/// Stable and End(W) = F_q; equivalent to stability over the algebraic closure.
bool is_geometrically_stable(const FFRep& w, const Theta& theta, const StabilityConfig& cfg = {},
                             const SubspaceCatalog* catalog = nullptr);

/// The maximal subrepresentation among those of maximal slope.
SubrepWitness<FiniteField> scss(const FFRep& w, const Theta& theta, const StabilityConfig& cfg = {},
                                const SubspaceCatalog* catalog = nullptr);

HNFiltration<FiniteField> hn_filtration(const FFRep& w, const Theta& theta, const StabilityConfig& cfg = {});

}  // namespace qf
