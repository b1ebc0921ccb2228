#pragma once

#include "qf/arith/rational.hpp"
#include "qf/errors.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace qf {

/// The field Q with exact GMP rationals, always kept canonical.
class RationalField {
 public:
  using Elem = Rational;
  static constexpr bool is_finite = false;

  std::string name() const { return "Q"; }
  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw NotInvertible("zero in Q");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem from_int(std::int64_t v) const { return Elem(static_cast<long>(v)); }

  /// Small integers in [-radius, radius]; used by randomized searches.
  template <class Rng>
  Elem random(Rng& rng, int radius = 3) const {
    std::uniform_int_distribution<int> dist(-radius, radius);
    return Elem(dist(rng));
  }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace qf
