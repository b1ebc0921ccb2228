#pragma once

#include "qf/descent/descent.hpp"
#include "qf/twisted/drep.hpp"

#include <cstdint>
#include <random>

namespace qf {

struct DivisionForm {
  DRep form;              // over D = (m, lambda)_Q with lambda normalized
  LTuple h;               // h . W is fixed by the standard structure
  LRep standardized;      // h . W = morita_split(form)
  Rational lambda;        // normalized cocycle scalar
  int attempts = 0;
};

/// h with h u = u_std sigma(h) at one vertex, u_std = blocks [[0, lambda], [1, 0]]
/// and u sigma(u) = lambda. Searches rational combinations of the solution space.
Matrix<QuadraticField> standardizing_change(const Matrix<QuadraticField>& u, const Rational& lambda,
                                            const QuadraticPair& pair, std::mt19937_64& rng, int& attempts,
                                            int max_attempts = 256, std::uint64_t seed = 0);

/// The D-representation attached to a datum of nontrivial class over Q(sqrt m)/Q.
DivisionForm division_form(const DescentDatum<QuadraticPair>& dd, std::mt19937_64& rng, int max_attempts = 256,
                           std::uint64_t seed = 0);

}  // namespace qf
