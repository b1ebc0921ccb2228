#pragma once

#include "qf/arith/galois_pair.hpp"
#include "qf/quiver/base_change.hpp"
#include "qf/quiver/hom.hpp"
#include "qf/quiver/isomorphism.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qf {

template <class Pair>
using ExtRep = Representation<typename Pair::ExtField>;
template <class Pair>
using BaseRep = Representation<typename Pair::BaseField>;
template <class Pair>
using ExtTuple = VertexMatrices<typename Pair::ExtField>;

template <class Pair>
Matrix<typename Pair::ExtField> twist(const Matrix<typename Pair::ExtField>& m, const Pair& pair, int i) {
  return m.map(pair.ext(), [&](const auto& x) { return pair.apply(x, i); });
}

template <class Pair>
ExtTuple<Pair> twist(const ExtTuple<Pair>& g, const Pair& pair, int i) {
  ExtTuple<Pair> out;
  for (const auto& m : g) out.push_back(twist(m, pair, i));
  return out;
}

/// W^{sigma^i}: sigma^i applied to every entry.
template <class Pair>
ExtRep<Pair> twist(const ExtRep<Pair>& w, const Pair& pair, int i) {
  return w.transform(pair.ext(), [&](const auto& x) { return pair.apply(x, i); });
}

/// u sigma(u) ... sigma^{k-1}(u), vertexwise.
template <class Pair>
ExtTuple<Pair> cocycle_product(const ExtTuple<Pair>& u, const Pair& pair, int k) {
  ExtTuple<Pair> out;
  for (const auto& m : u) {
    auto p = Matrix<typename Pair::ExtField>::identity(pair.ext(), m.rows());
    for (int i = 0; i < k; ++i) p = p * twist(m, pair, i);
    out.push_back(std::move(p));
  }
  return out;
}

/// c with g_v = c I at every vertex of positive dimension.
template <class F>
std::optional<typename F::Elem> common_scalar(const VertexMatrices<F>& g) {
  std::optional<typename F::Elem> c;
  for (const auto& m : g) {
    if (m.rows() == 0) continue;
    const F& f = m.field();
    const auto& x = m(0, 0);
    if (!(m == Matrix<F>::scalar(f, m.rows(), x))) return std::nullopt;
    if (c && !f.eq(*c, x)) return std::nullopt;
    c = x;
  }
  return c;
}

/// Representation W over L with u : sigma(W) -> W and u sigma(u) ... = lambda.
template <class Pair>
struct DescentDatum {
  Pair pair;
  ExtRep<Pair> rep;
  ExtTuple<Pair> u;
  typename Pair::BaseElem lambda;
};

/// u_{h(a)} sigma(M_a) u_{t(a)}^{-1} = M_a for every arrow, u invertible.
template <class Pair>
bool verify_modified_action_fixed(const ExtRep<Pair>& w, const ExtTuple<Pair>& u, const Pair& pair) {
  const Quiver& q = w.quiver();
  if (u.size() != q.num_vertices()) return false;
  for (std::size_t v = 0; v < u.size(); ++v) {
    if (u[v].rows() != static_cast<std::size_t>(w.dim(v)) || u[v].cols() != u[v].rows()) return false;
  }
  if (!all_invertible(u)) return false;
  for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
    const auto& a = q.arrow(ai);
    if (!(u[a.head] * twist(w.map(ai), pair, 1) == w.map(ai) * u[a.tail])) return false;
  }
  return true;
}

/// Diagnostics for a datum; empty means valid.
template <class Pair>
std::vector<std::string> datum_problems(const DescentDatum<Pair>& dd) {
  std::vector<std::string> out;
  const Quiver& q = dd.rep.quiver();
  if (dd.u.size() != q.num_vertices()) {
    out.push_back("u has " + std::to_string(dd.u.size()) + " matrices for " + std::to_string(q.num_vertices()) +
                  " vertices");
    return out;
  }
  for (std::size_t v = 0; v < dd.u.size(); ++v) {
    const auto& m = dd.u[v];
    const std::string& name = q.vertices()[v];
    if (m.rows() != static_cast<std::size_t>(dd.rep.dim(v)) || m.cols() != m.rows()) {
      out.push_back("u at vertex '" + name + "' has shape " + m.shape());
      return out;
    }
    if (!is_invertible(m)) out.push_back("u at vertex '" + name + "' is not invertible");
  }
  for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
    const auto& a = q.arrow(ai);
    if (!(dd.u[a.head] * twist(dd.rep.map(ai), dd.pair, 1) == dd.rep.map(ai) * dd.u[a.tail]))
      out.push_back("u is not an intertwiner sigma(W) -> W at arrow '" + a.id + "'");
  }
  auto prod = cocycle_product(dd.u, dd.pair, dd.pair.degree());
  const auto lam = dd.pair.embed(dd.lambda);
  for (std::size_t v = 0; v < prod.size(); ++v) {
    if (!(prod[v] == Matrix<typename Pair::ExtField>::scalar(dd.pair.ext(), prod[v].rows(), lam)))
      out.push_back("cocycle product at vertex '" + q.vertices()[v] + "' is not lambda times the identity");
  }
  return out;
}

template <class Pair>
bool is_valid(const DescentDatum<Pair>& dd) {
  return datum_problems(dd).empty();
}

/// An isomorphism u : sigma(W) -> W with its cocycle scalar, or nullopt when
/// the orbit of W is not Galois-fixed. W must be Schur (End(W) = L), which
/// makes the cocycle product an automorphism of W and hence scalar.
template <class Pair, class Rng>
std::optional<DescentDatum<Pair>> solve_modifying_u(const ExtRep<Pair>& w, const Pair& pair, Rng& rng,
                                                    const IsoSearchOptions& opts = {}, std::uint64_t seed = 0) {
  if (!(w.field() == pair.ext())) throw DomainError("solve_modifying_u: representation is not over " + pair.label());
  if (!is_schur(w)) throw DomainError("solve_modifying_u needs a Schur representation (End(W) = L)");
  auto sw = twist(w, pair, 1);
  auto u = is_isomorphic(sw, w, rng, opts, seed);
  if (!u) return std::nullopt;
  auto prod = cocycle_product(*u, pair, pair.degree());
  auto c = common_scalar(prod);
  if (!c) throw InternalInvariantError("cocycle product of a Schur representation is not scalar");
  auto lambda = pair.restrict(*c);
  if (!lambda) throw InternalInvariantError("cocycle scalar is not in the base field");
  DescentDatum<Pair> dd{pair, w, std::move(*u), *lambda};
  if (!is_valid(dd)) throw InternalInvariantError("solved modifying element fails verification");
  return dd;
}

template <class Pair>
struct TypeMapResult {
  BrauerClass cls;
  DescentDatum<Pair> datum;
  std::vector<std::string> log;
};

template <class Pair>
BrauerClass type_class(const DescentDatum<Pair>& dd) {
  return dd.pair.brauer_class(dd.lambda);
}

/// a u with lambda replaced by N(a) lambda.
template <class Pair>
DescentDatum<Pair> rescale(const DescentDatum<Pair>& dd, const typename Pair::ExtElem& a) {
  DescentDatum<Pair> out = dd;
  for (auto& m : out.u) m = a * m;
  out.lambda = dd.pair.base().mul(dd.pair.norm(a), dd.lambda);
  return out;
}

template <class Pair>
struct Hilbert90Result {
  BaseRep<Pair> form;
  ExtTuple<Pair> g;  // form = g^{-1} . W
  typename Pair::ExtElem norm_witness;
  int attempts = 0;
};

/// Descends a datum of trivial class to a representation over k.
///
/// u is rescaled by a norm witness so the cocycle product is 1, then
/// g = sum_i (u sigma(u) ... sigma^{i-1}(u)) sigma^i(c) for random c solves
/// u = g sigma(g)^{-1}; g^{-1} . W has entries in k.
template <class Pair, class Rng>
Hilbert90Result<Pair> hilbert90_descend(const DescentDatum<Pair>& dd, Rng& rng, int max_attempts = 64,
                                        std::uint64_t seed = 0) {
  using L = typename Pair::ExtField;
  const Pair& pair = dd.pair;
  const L& f = pair.ext();
  if (!is_valid(dd)) throw DomainError("hilbert90_descend: invalid descent datum");
  if (!pair.is_norm(dd.lambda))
    throw DomainError("hilbert90_descend: the class of " + pair.label() + " is not trivial");
  const typename Pair::ExtElem a =
      pair.base().eq(dd.lambda, pair.base().one()) ? f.one() : pair.norm_witness(dd.lambda);
  DescentDatum<Pair> one = rescale(dd, f.inv(a));

  const int n = pair.degree();
  const auto& w = dd.rep;
  auto finish = [&](ExtTuple<Pair> g, int attempts) -> std::optional<Hilbert90Result<Pair>> {
    ExtTuple<Pair> ginv;
    for (const auto& m : g) ginv.push_back(*inverse(m));
    auto moved = w.act(ginv, g);
    auto form = restrict_to_base(moved, pair);
    if (!form) throw InternalInvariantError("Hilbert 90 output has entries outside the base field");
    return Hilbert90Result<Pair>{std::move(*form), std::move(g), a, attempts};
  };

  if (common_scalar(one.u) && f.eq(*common_scalar(one.u), f.one())) {
    return *finish(identity_tuple(f, w.dims()), 0);
  }
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    ExtTuple<Pair> g;
    for (std::size_t v = 0; v < one.u.size(); ++v) {
      const std::size_t d = one.u[v].rows();
      Matrix<L> c(f, d, d);
      for (auto& x : c.data()) x = f.random(rng);
      Matrix<L> sum(f, d, d);
      auto partial = Matrix<L>::identity(f, d);
      for (int i = 0; i < n; ++i) {
        sum = sum + partial * twist(c, pair, i);
        partial = partial * twist(one.u[v], pair, i);
      }
      g.push_back(std::move(sum));
    }
    if (all_invertible(g)) return *finish(std::move(g), attempt);
  }
  throw InconclusiveError("Hilbert 90 averaging found no invertible g in " + std::to_string(max_attempts) +
                              " attempts",
                          seed);
}

}  // namespace qf
