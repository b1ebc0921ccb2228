#include "qf/arith/hilbert.hpp"

#include "qf/errors.hpp"

#include <algorithm>

namespace qf {

namespace {

// Integer in the same square class as x.
Integer square_class_integer(const Rational& x) { return x.get_num() * x.get_den(); }

// x = p^v * u with p not dividing u.
std::pair<long, Integer> split_valuation(Integer x, const Integer& p) {
  long v = 0;
  while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) != 0) {
    x /= p;
    ++v;
  }
  return {v, x};
}

long mod_pos(const Integer& x, long m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r.get_si();
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  if (sgn(a) == 0 || sgn(b) == 0) throw DomainError("hilbert_symbol: arguments must be nonzero");
  if (place.infinite) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  const Integer& p = place.p;
  if (p <= 1 || !is_prime(p)) throw DomainError("hilbert_symbol: place " + p.get_str() + " is not prime");

  auto [alpha, u] = split_valuation(square_class_integer(a), p);
  auto [beta, v] = split_valuation(square_class_integer(b), p);

  if (p == 2) {
    const long u8 = mod_pos(u, 8);
    const long v8 = mod_pos(v, 8);
    auto eps = [](long w) { return ((w - 1) / 2) % 2; };
    auto omega = [](long w) { return ((w * w - 1) / 8) % 2; };
    long e = eps(u8) * eps(v8) + alpha * omega(v8) + beta * omega(u8);
    return (e % 2 == 0) ? 1 : -1;
  }

  int sign = 1;
  const long eps_p = mod_pos((p - 1) / 2, 2);
  if ((alpha % 2) * (beta % 2) * eps_p % 2 != 0) sign = -sign;
  if (beta % 2 != 0) sign *= legendre(u, p);
  if (alpha % 2 != 0) sign *= legendre(v, p);
  return sign;
}

std::vector<Place> candidate_places(const Rational& a, const Rational& b) {
  std::vector<Integer> primes{Integer(2)};
  for (const Rational* x : {&a, &b}) {
    for (const Integer* part : {&x->get_num(), &x->get_den()}) {
      if (abs(*part) <= 1) continue;
      for (const auto& [p, e] : factor(*part)) primes.push_back(p);
    }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Place> out{Place::infinity()};
  for (const auto& p : primes) out.push_back(Place::prime(p));
  return out;
}

std::vector<Place> ramified_places(const Rational& a, const Rational& b) {
  std::vector<Place> out;
  for (const auto& place : candidate_places(a, b)) {
    if (hilbert_symbol(a, b, place) == -1) out.push_back(place);
  }
  return out;
}

bool quat_is_division(const Rational& a, const Rational& b) { return !ramified_places(a, b).empty(); }

}  // namespace qf
