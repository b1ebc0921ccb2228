#include "qf/arith/galois_pair.hpp"

#include "qf/errors.hpp"

namespace qf {

FinitePair::FinitePair(std::uint32_t p, int n, std::vector<std::uint32_t> modulus)
    : base_(FiniteField::prime(p)), ext_(FiniteField::extension(p, n, std::move(modulus))) {
  if (n < 2) throw DomainError("a Galois pair needs degree >= 2");
}

FinitePair::FinitePair(FiniteField base, FiniteField ext) : base_(std::move(base)), ext_(std::move(ext)) {
  if (!base_.is_prime_field() || base_.characteristic() != ext_.characteristic())
    throw DomainError("finite pairs need a prime base field of the same characteristic");
  if (ext_.degree() < 2) throw DomainError("a Galois pair needs degree >= 2");
}

FinitePair::BaseElem FinitePair::norm(ExtElem x) const {
  ExtElem prod = ext_.one();
  for (int i = 0; i < degree(); ++i) prod = ext_.mul(prod, apply(x, i));
  auto r = restrict(prod);
  if (!r) throw InternalInvariantError("norm of " + std::to_string(x) + " is not in the base field");
  return *r;
}

bool FinitePair::is_norm(BaseElem lambda) const {
  if (lambda == 0 || lambda >= base_.order()) throw DomainError("is_norm needs a nonzero base-field element");
  return true;
}

FinitePair::ExtElem FinitePair::norm_witness(BaseElem lambda) const {
  is_norm(lambda);
  for (ExtElem x = 1; x < ext_.order(); ++x) {
    if (norm(x) == lambda) return x;
  }
  throw InternalInvariantError("finite-field norm map is not onto");
}

BrauerClass FinitePair::brauer_class(BaseElem lambda) const {
  is_norm(lambda);
  return BrauerClass::trivial();
}

bool FinitePair::same_class(const BrauerClass& x, const BrauerClass& y) const {
  return x.is_trivial() && y.is_trivial();
}

bool QuadraticPair::is_norm(const BaseElem& lambda) const {
  if (sgn(lambda) == 0) throw DomainError("is_norm needs a nonzero element");
  if (m() != -1) throw NotDecidable("norm membership for " + label() + " (only Q(i)/Q is supported)");
  if (sgn(lambda) < 0) return false;
  for (const Integer* part : {&lambda.get_num(), &lambda.get_den()}) {
    if (*part == 1) continue;
    for (const auto& [p, e] : factor(*part)) {
      if (p % 4 == 3 && e % 2 == 1) return false;
    }
  }
  return true;
}

QuadraticPair::ExtElem QuadraticPair::norm_witness(const BaseElem& lambda) const {
  if (!is_norm(lambda)) throw DomainError(to_string(lambda) + " is not a norm from " + label());
  // lambda = n/d = (n d) / d^2
  const Integer& d = lambda.get_den();
  auto xy = two_squares(lambda.get_num() * d);
  if (!xy) throw InternalInvariantError("two-squares decomposition failed for a norm");
  QuadElem w{Rational(xy->first, d), Rational(xy->second, d)};
  w.a.canonicalize();
  w.b.canonicalize();
  if (norm(w) != lambda) throw InternalInvariantError("norm witness does not reproduce lambda");
  return w;
}

BrauerClass QuadraticPair::brauer_class(const BaseElem& lambda) const {
  if (is_norm(lambda)) return BrauerClass::trivial();
  BrauerClass c;
  c.kind = BrauerClass::Kind::Cyclic;
  c.pair = label();
  c.m = m();
  c.lambda = Rational(squarefree_part(lambda));
  c.index = 2;
  return c;
}

bool QuadraticPair::same_class(const BrauerClass& x, const BrauerClass& y) const {
  if (x.is_trivial() && y.is_trivial()) return true;
  Rational lx = x.is_trivial() ? Rational(1) : x.lambda;
  Rational ly = y.is_trivial() ? Rational(1) : y.lambda;
  if ((!x.is_trivial() && x.m != m()) || (!y.is_trivial() && y.m != m()))
    throw DomainError("Brauer classes from different pairs");
  return is_norm(lx / ly);
}

}  // namespace qf
