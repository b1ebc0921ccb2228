#include "qf/arith/rational.hpp"

#include "qf/errors.hpp"

#include <algorithm>
#include <cctype>

namespace qf {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty rational literal");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw ParseError("malformed rational literal '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) {
  Rational y = x;
  y.canonicalize();
  if (y.get_den() == 1) return y.get_num().get_str();
  return y.get_num().get_str() + "/" + y.get_den().get_str();
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n) {
  if (n == 0) throw DomainError("factor: zero has no factorization");
  Integer m = abs(n);
  std::vector<std::pair<Integer, unsigned>> out;
  auto strip = [&](const Integer& p) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(Integer(2));
  for (Integer p = 3; p * p <= m; p += 2) strip(p);
  if (m > 1) out.emplace_back(m, 1U);
  return out;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Integer squarefree_part(const Rational& x) {
  if (x == 0) throw DomainError("squarefree part of zero");
  Integer prod = x.get_num() * x.get_den();
  Integer out = sgn(prod) < 0 ? -1 : 1;
  for (const auto& [p, e] : factor(prod)) {
    if (e % 2 == 1) out *= p;
  }
  return out;
}

Rational square_cofactor(const Rational& x) {
  // x = s * c^2 with c = sqrt(x / s); x/s = num*den/(s*den^2), so c = sqrt(num*den/s)/den.
  Integer s = squarefree_part(x);
  Integer t = x.get_num() * x.get_den() / s;
  Integer root = sqrt(t);
  if (root * root != t) throw InternalInvariantError("square_cofactor: cofactor not a square");
  Rational c(root, x.get_den());
  c.canonicalize();
  return c;
}

long valuation(const Rational& x, const Integer& p) {
  if (x == 0) throw DomainError("valuation of zero");
  long v = 0;
  Integer n = x.get_num();
  Integer d = x.get_den();
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
    n /= p;
    ++v;
  }
  while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()) != 0) {
    d /= p;
    --v;
  }
  return v;
}

int legendre(const Integer& a, const Integer& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

Integer sqrt_mod(const Integer& a_in, const Integer& p) {
  Integer a = a_in % p;
  if (a < 0) a += p;
  if (legendre(a, p) != 1) throw DomainError("sqrt_mod: " + a.get_str() + " is not a nonzero square mod " + p.get_str());
  // Tonelli-Shanks
  Integer q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (legendre(z, p) != -1) ++z;
  auto powm = [&](const Integer& b, const Integer& e) {
    Integer r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r;
  };
  Integer c = powm(z, q);
  Integer r = powm(a, (q + 1) / 2);
  Integer t = powm(a, q);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    Integer b = c;
    for (unsigned k = 0; k + i + 1 < m; ++k) b = b * b % p;
    r = r * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  // Smallest of the two roots, for deterministic output.
  Integer other = p - r;
  return r < other ? r : other;
}

namespace {

// p = x^2 + y^2 for a prime p = 1 mod 4 (Hermite-Serret descent).
std::pair<Integer, Integer> prime_two_squares(const Integer& p) {
  Integer r = sqrt_mod(p - 1, p);
  Integer a = p;
  Integer b = r;
  while (b * b > p) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  Integer rest = p - b * b;
  Integer y = sqrt(rest);
  if (y * y != rest) throw InternalInvariantError("two-squares descent failed for prime " + p.get_str());
  return {b, y};
}

}  // namespace

std::optional<std::pair<Integer, Integer>> two_squares(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (n == 0) return std::make_pair(Integer(0), Integer(0));
  // Multiply Gaussian integers x + y i prime by prime.
  Integer x = 1;
  Integer y = 0;
  auto mul = [&](const Integer& a, const Integer& b) {
    Integer nx = x * a - y * b;
    Integer ny = x * b + y * a;
    x = nx;
    y = ny;
  };
  for (const auto& [p, e] : factor(n)) {
    if (p == 2) {
      for (unsigned k = 0; k < e; ++k) mul(1, 1);
    } else if (p % 4 == 3) {
      if (e % 2 == 1) return std::nullopt;
      for (unsigned k = 0; k < e / 2; ++k) mul(p, 0);
    } else {
      auto [a, b] = prime_two_squares(p);
      for (unsigned k = 0; k < e; ++k) mul(a, b);
    }
  }
  return std::make_pair(Integer(abs(x)), Integer(abs(y)));
}

}  // namespace qf
