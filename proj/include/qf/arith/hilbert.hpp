#pragma once

#include "qf/arith/rational.hpp"

#include <string>
#include <vector>

namespace qf {

/// A place of Q: the real place or a prime p.
struct Place {
  bool infinite = true;
  Integer p = 0;

  static Place infinity() { return {}; }
  static Place prime(const Integer& p) { return {false, p}; }
  std::string name() const { return infinite ? "inf" : p.get_str(); }
};

/// Local Hilbert symbol (a, b)_v in {+1, -1}. Throws DomainError for a zero
/// argument or a finite place that is not prime.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

/// inf, 2, and the odd primes dividing a numerator or denominator of a or b.
/// Every place where (a, b) can ramify is in this list.
std::vector<Place> candidate_places(const Rational& a, const Rational& b);

/// Places where (a, b)_v = -1.
std::vector<Place> ramified_places(const Rational& a, const Rational& b);

/// Whether (a, b)_Q is a division algebra (as opposed to Mat_2(Q)).
bool quat_is_division(const Rational& a, const Rational& b);

}  // namespace qf
