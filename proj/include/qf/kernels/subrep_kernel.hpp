#pragma once

#include "qf/arith/finite_field.hpp"
#include "qf/quiver/representation.hpp"
#include "qf/quiver/subspaces.hpp"

#include <cstdint>
#include <vector>

namespace qf::kernels {

/// One subspace index (into SubspaceCatalog::of(d_v)) per vertex.
using SubspaceTuple = std::vector<std::uint32_t>;

/// Number of subspace tuples the search visits: prod_v #subspaces(F_q^{d_v}).
double subrep_search_size(const Representation<FiniteField>& w);

/// Reference kernel: visits every tuple and checks closure arrow by arrow.
std::vector<SubspaceTuple> closed_tuples_serial(const Representation<FiniteField>& w, const SubspaceCatalog& catalog);

/// OpenMP kernel: precomputes per-arrow closure tables over subspace pairs,
/// then scans tuples in parallel. Output is identical to the serial kernel
/// (ascending lexicographic order of tuples).
std::vector<SubspaceTuple> closed_tuples_parallel(const Representation<FiniteField>& w,
                                                  const SubspaceCatalog& catalog);

}  // namespace qf::kernels
