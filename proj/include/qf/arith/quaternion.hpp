#pragma once

#include "qf/arith/rational.hpp"
#include "qf/errors.hpp"

#include <array>
#include <random>
#include <string>

namespace qf {

/// x0 + x1 i + x2 j + x3 ij
struct Quat {
  std::array<Rational, 4> c{Rational(0), Rational(0), Rational(0), Rational(0)};
  friend bool operator==(const Quat& x, const Quat& y) { return x.c == y.c; }
};

/// The quaternion algebra (a, b)_Q: i^2 = a, j^2 = b, ij = -ji.
/// Also serves as the coefficient ring of D-representations (non-commutative;
/// matrix products keep operand order).
class QuaternionAlgebra {
 public:
  using Elem = Quat;
  static constexpr bool is_finite = false;

  QuaternionAlgebra(Rational a, Rational b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::string name() const;

  Elem zero() const { return {}; }
  Elem one() const { return scalar(Rational(1)); }
  Elem scalar(const Rational& x) const {
    Quat q;
    q.c[0] = x;
    return q;
  }
  Elem i() const;
  Elem j() const;
  Elem ij() const;
  Elem make(Rational x0, Rational x1, Rational x2, Rational x3) const {
    return Quat{{std::move(x0), std::move(x1), std::move(x2), std::move(x3)}};
  }

  bool is_zero(const Elem& x) const;
  bool eq(const Elem& x, const Elem& y) const { return x == y; }
  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem conj(const Elem& x) const;
  /// Reduced norm x0^2 - a x1^2 - b x2^2 + ab x3^2.
  Rational nrd(const Elem& x) const;
  /// Two-sided inverse conj(x)/Nrd(x); throws NotInvertible when Nrd(x) = 0.
  Elem inv(const Elem& x) const;
  Elem from_int(std::int64_t v) const { return scalar(Rational(static_cast<long>(v))); }

  template <class Rng>
  Elem random(Rng& rng, int radius = 3) const {
    std::uniform_int_distribution<int> dist(-radius, radius);
    return make(Rational(dist(rng)), Rational(dist(rng)), Rational(dist(rng)), Rational(dist(rng)));
  }

  friend bool operator==(const QuaternionAlgebra& x, const QuaternionAlgebra& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  Rational a_;
  Rational b_;
};

std::string to_string(const Quat& x);

}  // namespace qf
