#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace qf {

/// F_q with q = p^n, p prime, q <= 2^16. Elements are encoded as integers
/// sum_i c_i p^i where c_i is the coefficient of x^i modulo the (monic,
/// irreducible) modulus. The prime subfield is therefore {0, ..., p-1}.
class FiniteField {
 public:
  using Elem = std::uint32_t;
  static constexpr bool is_finite = true;

  static FiniteField prime(std::uint32_t p);
  /// Extension of degree n. `modulus` lists the coefficients of a monic
  /// degree-n polynomial, low degree first (length n+1). Empty selects the
  /// irreducible monic polynomial with the smallest encoding.
  static FiniteField extension(std::uint32_t p, int n, std::vector<std::uint32_t> modulus = {});

  std::uint32_t characteristic() const { return impl_->p; }
  int degree() const { return impl_->n; }
  std::uint32_t order() const { return impl_->q; }
  const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }
  bool is_prime_field() const { return impl_->n == 1; }
  std::string name() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    if (!impl_->add_table.empty()) return impl_->add_table[a * impl_->q + b];
    return add_slow(a, b);
  }
  Elem neg(Elem a) const { return impl_->neg[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = impl_->log[a] + impl_->log[b];
    if (s >= impl_->q - 1) s -= impl_->q - 1;
    return impl_->exp[s];
  }
  /// Throws NotInvertible for zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// x -> x^(p^i)
  Elem frobenius(Elem a, int i = 1) const;

  Elem from_int(std::int64_t v) const;
  Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coefficients(Elem a) const;
  /// Class of x modulo the modulus (equals p for extensions, a primitive root for prime fields).
  Elem adjoined_root() const;
  Elem primitive_element() const { return impl_->exp.size() > 1 ? impl_->exp[1] : 1; }
  /// Basis of F_q over F_p: 1, x, ..., x^(n-1).
  std::vector<Elem> prime_basis() const;

  template <class Rng>
  Elem random(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, impl_->q - 1);
    return dist(rng);
  }

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.impl_ == b.impl_ || (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
  }

 private:
  struct Impl {
    std::uint32_t p = 0;
    int n = 1;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<Elem> add_table;  // q*q when q is small
    std::vector<Elem> neg;
    std::vector<Elem> log;
    std::vector<Elem> exp;
    std::vector<Elem> frob;
  };
  explicit FiniteField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  Elem add_slow(Elem a, Elem b) const;
  static std::shared_ptr<const Impl> build(std::uint32_t p, int n, std::vector<std::uint32_t> modulus);

  std::shared_ptr<const Impl> impl_;
};

/// True iff the monic polynomial (low degree first) is irreducible over F_p.
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

}  // namespace qf
