#pragma once

#include "qf/arith/rational.hpp"

#include <cstdint>
#include <string>

namespace qf {

/// Class in Br(k) of a cyclic algebra (L/k, sigma, lambda), stored through its
/// normalized cyclic data. For quadratic pairs over Q the representative
/// lambda is the signed squarefree part, and the algebra is (m, lambda)_Q.
struct BrauerClass {
  enum class Kind { Trivial, Cyclic };

  Kind kind = Kind::Trivial;
  std::string pair;       // label of L/k, empty for Trivial
  std::int64_t m = 0;     // L = Q(sqrt m) for quadratic pairs
  Rational lambda = 1;    // normalized
  int index = 1;

  static BrauerClass trivial() { return {}; }
  bool is_trivial() const { return kind == Kind::Trivial; }
  /// "Trivial" or the quaternion algebra, e.g. "(-1,-1)_Q".
  std::string describe() const {
    if (is_trivial()) return "Trivial";
    return "(" + std::to_string(m) + "," + to_string(lambda) + ")_Q";
  }
};

}  // namespace qf
