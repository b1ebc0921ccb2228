#pragma once

#include "qf/arith/galois_pair.hpp"
#include "qf/arith/quaternion.hpp"
#include "qf/quiver/isomorphism.hpp"
#include "qf/quiver/representation.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace qf {

/// Representation over a quaternion algebra D: right D-modules D^{d'_v},
/// D-matrices acting on the left.
using DRep = Representation<QuaternionAlgebra>;
using DTuple = VertexMatrices<QuaternionAlgebra>;
using LRep = Representation<QuadraticField>;
using LTuple = VertexMatrices<QuadraticField>;

/// The splitting pair Q(sqrt a)/Q of D = (a, b)_Q; a must be a squarefree integer != 0, 1.
QuadraticPair splitting_pair(const QuaternionAlgebra& d);

/// 2x2 image of x0 + x1 i + x2 j + x3 ij under i -> diag(s, -s), j -> [[0, b], [1, 0]], s = sqrt a.
Matrix<QuadraticField> split_element(const QuaternionAlgebra& d, const QuadraticField& l, const Quat& x);

/// Block matrix of 2x2 split images.
Matrix<QuadraticField> split_matrix(const Matrix<QuaternionAlgebra>& x, const QuadraticField& l);

/// Block-diagonal standard structure u_std with blocks [[0, lambda], [1, 0]]; dims are L-dimensions (even).
LTuple standard_structure(const QuadraticField& l, const DimVector& dims, const Rational& lambda);

/// L-representation of dimension 2 d'.
LRep morita_split(const DRep& r, const QuadraticPair& pair);

/// Inverse of morita_split on representations fixed by the standard structure of D.
LRep morita_split(const DRep& r);
DRep morita_unsplit(const LRep& w, const QuaternionAlgebra& d);

/// Q-basis of D-linear intertwiners R -> R2 (f_v is d2'_v x d'_v over D).
std::vector<DTuple> drep_hom_space(const DRep& r, const DRep& r2);

bool drep_is_intertwiner(const DRep& r, const DRep& r2, const DTuple& f);

/// D-matrices invertible at every vertex (decided on split images).
bool drep_all_invertible(const DTuple& g);

/// A D-linear isomorphism R -> R2 or nullopt; randomized search over rational
/// combinations with a deterministic grid fallback, else InconclusiveError.
std::optional<DTuple> drep_find_isomorphism(const DRep& r, const DRep& r2, std::mt19937_64& rng,
                                            const IsoSearchOptions& opts = {}, std::uint64_t seed = 0);

}  // namespace qf
