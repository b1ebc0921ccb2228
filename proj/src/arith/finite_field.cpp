#include "qf/arith/finite_field.hpp"

#include "qf/errors.hpp"

#include <algorithm>

namespace qf {

namespace {

constexpr std::uint32_t kMaxOrder = 1U << 16;
constexpr std::uint32_t kAddTableMax = 256;

bool small_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      std::uint64_t sub = static_cast<std::uint64_t>(lead) * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly decode(std::uint32_t a, std::uint32_t p, int n) {
  Poly out(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = a % p;
    a /= p;
  }
  return out;
}

std::uint32_t encode(const Poly& c, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

std::uint32_t mulmod_slow(std::uint32_t a, std::uint32_t b, std::uint32_t p, int n, const Poly& modulus) {
  Poly x = decode(a, p, n);
  Poly y = decode(b, p, n);
  Poly prod(static_cast<std::size_t>(2 * n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto& slot = prod[static_cast<std::size_t>(i + j)];
      slot = static_cast<std::uint32_t>((slot + static_cast<std::uint64_t>(x[static_cast<std::size_t>(i)]) *
                                                    y[static_cast<std::size_t>(j)]) % p);
    }
  }
  Poly r = poly_rem(prod, modulus, p);
  r.resize(static_cast<std::size_t>(n), 0);
  return encode(r, p);
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly_in, std::uint32_t p) {
  Poly poly(poly_in.begin(), poly_in.end());
  trim(poly);
  if (poly.size() < 2) return false;
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly divisor = decode(static_cast<std::uint32_t>(code), p, d);
      divisor.push_back(1);
      if (poly_rem(poly, divisor, p).empty()) return false;
    }
  }
  return true;
}

std::shared_ptr<const FiniteField::Impl> FiniteField::build(std::uint32_t p, int n, std::vector<std::uint32_t> modulus) {
  if (!small_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (n < 1) throw DomainError("extension degree must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder) throw DomainError("field order exceeds 2^16");
  }
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->n = n;
  impl->q = static_cast<std::uint32_t>(q);

  if (n == 1) {
    impl->modulus = {0, 1};
  } else if (modulus.empty()) {
    std::uint64_t count = q;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly cand = decode(static_cast<std::uint32_t>(code), p, n);
      cand.push_back(1);
      if (is_irreducible_mod_p(cand, p)) {
        impl->modulus = cand;
        break;
      }
    }
  } else {
    if (modulus.size() != static_cast<std::size_t>(n + 1) || modulus.back() != 1)
      throw DomainError("modulus must be monic of degree " + std::to_string(n));
    for (auto c : modulus) {
      if (c >= p) throw DomainError("modulus coefficient out of range");
    }
    if (!is_irreducible_mod_p(modulus, p)) throw DomainError("modulus is reducible over F_" + std::to_string(p));
    impl->modulus = std::move(modulus);
  }

  const std::uint32_t order = impl->q;
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    if (n == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    return mulmod_slow(a, b, p, n, impl->modulus);
  };

  impl->exp.assign(order > 1 ? order - 1 : 1, 1);
  impl->log.assign(order, 0);
  if (order > 2) {
    for (std::uint32_t g = 2; g < order; ++g) {
      std::uint32_t x = 1;
      std::uint32_t k = 0;
      bool primitive = true;
      do {
        impl->exp[k] = x;
        x = slow_mul(x, g);
        ++k;
        if (x == 1 && k < order - 1) {
          primitive = false;
          break;
        }
      } while (k < order - 1);
      if (primitive && x == 1) break;
    }
  }
  for (std::uint32_t k = 0; k < impl->exp.size(); ++k) impl->log[impl->exp[k]] = k;

  impl->neg.resize(order);
  for (std::uint32_t a = 0; a < order; ++a) {
    Poly c = decode(a, p, n);
    for (auto& x : c) x = (p - x) % p;
    impl->neg[a] = encode(c, p);
  }
  if (order <= kAddTableMax) {
    impl->add_table.resize(static_cast<std::size_t>(order) * order);
    for (std::uint32_t a = 0; a < order; ++a) {
      Poly ca = decode(a, p, n);
      for (std::uint32_t b = 0; b < order; ++b) {
        Poly cb = decode(b, p, n);
        Poly s(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = (ca[i] + cb[i]) % p;
        impl->add_table[static_cast<std::size_t>(a) * order + b] = encode(s, p);
      }
    }
  }
  impl->frob.resize(order);
  impl->frob[0] = 0;
  for (std::uint32_t a = 1; a < order; ++a) {
    std::uint64_t l = static_cast<std::uint64_t>(impl->log[a]) * p % (order - 1 == 0 ? 1 : order - 1);
    impl->frob[a] = impl->exp[static_cast<std::size_t>(l)];
  }
  return impl;
}

FiniteField FiniteField::prime(std::uint32_t p) { return FiniteField(build(p, 1, {})); }

FiniteField FiniteField::extension(std::uint32_t p, int n, std::vector<std::uint32_t> modulus) {
  return FiniteField(build(p, n, std::move(modulus)));
}

std::string FiniteField::name() const { return "F_" + std::to_string(impl_->q); }

FiniteField::Elem FiniteField::add_slow(Elem a, Elem b) const {
  const std::uint32_t p = impl_->p;
  if (impl_->n == 1) return (a + b) % p;
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (int i = 0; i < impl_->n; ++i) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw NotInvertible("zero in " + name());
  const std::uint32_t m = impl_->q - 1;
  return impl_->exp[(m - impl_->log[a]) % m];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t m = impl_->q - 1;
  return impl_->exp[static_cast<std::size_t>(static_cast<std::uint64_t>(impl_->log[a]) * (e % m) % m)];
}

FiniteField::Elem FiniteField::frobenius(Elem a, int i) const {
  const int n = impl_->n;
  i %= n;
  if (i < 0) i += n;
  for (int k = 0; k < i; ++k) a = impl_->frob[a];
  return a;
}

FiniteField::Elem FiniteField::from_int(std::int64_t v) const {
  std::int64_t p = impl_->p;
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(impl_->n)) throw DomainError("too many coefficients for " + name());
  Poly c(coeffs.begin(), coeffs.end());
  for (auto x : c) {
    if (x >= impl_->p) throw DomainError("coefficient out of range for " + name());
  }
  return encode(c, impl_->p);
}

std::vector<std::uint32_t> FiniteField::coefficients(Elem a) const { return decode(a, impl_->p, impl_->n); }

FiniteField::Elem FiniteField::adjoined_root() const {
  if (impl_->n == 1) return primitive_element();
  return impl_->p;
}

std::vector<FiniteField::Elem> FiniteField::prime_basis() const {
  std::vector<Elem> out;
  Elem x = 1;
  for (int i = 0; i < impl_->n; ++i) {
    out.push_back(x);
    x *= impl_->p;
  }
  return out;
}

}  // namespace qf
