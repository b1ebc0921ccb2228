#pragma once

#include "qf/arith/brauer.hpp"
#include "qf/arith/finite_field.hpp"
#include "qf/arith/quadratic_field.hpp"
#include "qf/arith/rational_field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qf {

/// F_{p^n} / F_p with sigma the Frobenius x -> x^p.
class FinitePair {
 public:
  using BaseField = FiniteField;
  using ExtField = FiniteField;
  using BaseElem = FiniteField::Elem;
  using ExtElem = FiniteField::Elem;

  FinitePair(std::uint32_t p, int n, std::vector<std::uint32_t> modulus = {});
  FinitePair(FiniteField base, FiniteField ext);

  const FiniteField& base() const { return base_; }
  const FiniteField& ext() const { return ext_; }
  int degree() const { return ext_.degree(); }
  std::string label() const { return ext_.name() + "/" + base_.name(); }

  /// sigma^i(x); i is taken modulo n.
  ExtElem apply(ExtElem x, int i) const { return ext_.frobenius(x, i); }
  ExtElem embed(BaseElem x) const { return x; }
  /// The base-field element equal to x, if x is fixed by sigma.
  std::optional<BaseElem> restrict(ExtElem x) const {
    if (x < base_.order()) return x;
    return std::nullopt;
  }
  BaseElem norm(ExtElem x) const;
  /// The norm map of a finite extension is onto k^x.
  bool is_norm(BaseElem lambda) const;
  ExtElem norm_witness(BaseElem lambda) const;
  BrauerClass brauer_class(BaseElem lambda) const;
  bool same_class(const BrauerClass& x, const BrauerClass& y) const;

 private:
  FiniteField base_;
  FiniteField ext_;
};

/// Q(sqrt m) / Q with sigma: sqrt m -> -sqrt m.
class QuadraticPair {
 public:
  using BaseField = RationalField;
  using ExtField = QuadraticField;
  using BaseElem = Rational;
  using ExtElem = QuadElem;

  explicit QuadraticPair(std::int64_t m) : ext_(m) {}

  const RationalField& base() const { return base_; }
  const QuadraticField& ext() const { return ext_; }
  int degree() const { return 2; }
  std::int64_t m() const { return ext_.m(); }
  std::string label() const { return ext_.name() + "/Q"; }

  ExtElem apply(const ExtElem& x, int i) const { return (i % 2 == 0) ? x : ext_.conj(x); }
  ExtElem embed(const BaseElem& x) const { return ext_.embed(x); }
  std::optional<BaseElem> restrict(const ExtElem& x) const {
    if (sgn(x.b) == 0) return x.a;
    return std::nullopt;
  }
  BaseElem norm(const ExtElem& x) const { return ext_.norm(x); }
  /// Decided for m = -1 only (sums of two squares); NotDecidable otherwise.
  bool is_norm(const BaseElem& lambda) const;
  /// x with N(x) = lambda; m = -1 only.
  ExtElem norm_witness(const BaseElem& lambda) const;
  BrauerClass brauer_class(const BaseElem& lambda) const;
  /// Equality decided by is_norm(lambda1 / lambda2).
  bool same_class(const BrauerClass& x, const BrauerClass& y) const;

 private:
  RationalField base_;
  QuadraticField ext_;
};

}  // namespace qf
