#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws ParseError on malformed text or zero denominator.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Prime factorization by trial division; |n| must be nonzero. Sign is dropped.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n);
bool is_prime(const Integer& n);

/// Sign times the squarefree part of num*den, so x = squarefree_part(x) * c^2 with c rational.
Integer squarefree_part(const Rational& x);
/// Rational c > 0 with x = squarefree_part(x) * c^2.
Rational square_cofactor(const Rational& x);

/// p-adic valuation of a nonzero rational.
long valuation(const Rational& x, const Integer& p);

/// Legendre symbol (a/p) for odd prime p, a an integer; returns 0 when p | a.
int legendre(const Integer& a, const Integer& p);

/// Some r with r^2 = a mod p, for odd prime p and a a nonzero square mod p.
Integer sqrt_mod(const Integer& a, const Integer& p);

/// x, y with x^2 + y^2 = n, if n >= 0 is a sum of two squares.
std::optional<std::pair<Integer, Integer>> two_squares(const Integer& n);

}  // namespace qf
