#pragma once

#include "qf/arith/rational.hpp"
#include "qf/errors.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace qf {

/// a + b*sqrt(m) with a, b rational.
struct QuadElem {
  Rational a;
  Rational b;
  friend bool operator==(const QuadElem& x, const QuadElem& y) { return x.a == y.a && x.b == y.b; }
};

/// Q(sqrt m) for a squarefree integer m != 0, 1.
class QuadraticField {
 public:
  using Elem = QuadElem;
  static constexpr bool is_finite = false;

  explicit QuadraticField(std::int64_t m);

  std::int64_t m() const { return m_; }
  std::string name() const { return m_ == -1 ? "Q(i)" : "Q(sqrt(" + std::to_string(m_) + "))"; }

  Elem zero() const { return {Rational(0), Rational(0)}; }
  Elem one() const { return {Rational(1), Rational(0)}; }
  Elem sqrt_m() const { return {Rational(0), Rational(1)}; }
  Elem embed(const Rational& x) const { return {x, Rational(0)}; }
  bool is_zero(const Elem& x) const { return sgn(x.a) == 0 && sgn(x.b) == 0; }
  bool eq(const Elem& x, const Elem& y) const { return x == y; }
  Elem add(const Elem& x, const Elem& y) const { return {x.a + y.a, x.b + y.b}; }
  Elem sub(const Elem& x, const Elem& y) const { return {x.a - y.a, x.b - y.b}; }
  Elem neg(const Elem& x) const { return {-x.a, -x.b}; }
  Elem mul(const Elem& x, const Elem& y) const {
    return {x.a * y.a + x.b * y.b * m_, x.a * y.b + x.b * y.a};
  }
  Elem conj(const Elem& x) const { return {x.a, -x.b}; }
  /// a^2 - m b^2
  Rational norm(const Elem& x) const { return x.a * x.a - x.b * x.b * m_; }
  Elem inv(const Elem& x) const {
    Rational n = norm(x);
    if (sgn(n) == 0) throw NotInvertible("zero in " + name());
    return {x.a / n, -x.b / n};
  }
  Elem div(const Elem& x, const Elem& y) const { return mul(x, inv(y)); }
  Elem from_int(std::int64_t v) const { return embed(Rational(static_cast<long>(v))); }

  template <class Rng>
  Elem random(Rng& rng, int radius = 3) const {
    std::uniform_int_distribution<int> dist(-radius, radius);
    return {Rational(dist(rng)), Rational(dist(rng))};
  }

  friend bool operator==(const QuadraticField& x, const QuadraticField& y) { return x.m_ == y.m_; }

 private:
  std::int64_t m_;
};

std::string to_string(const QuadElem& x, std::int64_t m);

}  // namespace qf
