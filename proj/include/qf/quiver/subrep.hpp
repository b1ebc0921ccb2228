#pragma once

#include "qf/quiver/representation.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qf {

/// A subrepresentation given by a basis (columns) of U_v in F^{d_v} per vertex.
template <class F>
struct SubrepWitness {
  DimVector dims;
  VertexMatrices<F> basis;  // basis[v] is d_v x e_v

  bool is_zero() const { return total_dimension(dims) == 0; }
};

/// Canonical basis: columns spanning the same space, from the RREF of the transpose.
template <class F>
SubrepWitness<F> normalize(const SubrepWitness<F>& s) {
  SubrepWitness<F> out;
  for (const auto& b : s.basis) {
    auto c = column_space(b);
    out.dims.push_back(static_cast<int>(c.cols()));
    out.basis.push_back(std::move(c));
  }
  return out;
}

/// Closure: M_a U_{t(a)} lies in U_{h(a)} for all a, and the bases are independent.
template <class F>
bool is_closed(const Representation<F>& w, const SubrepWitness<F>& s) {
  const Quiver& q = w.quiver();
  if (s.basis.size() != q.num_vertices()) return false;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    if (s.basis[v].rows() != static_cast<std::size_t>(w.dim(v))) return false;
    if ((!s.basis[v].is_identity() && rank(s.basis[v]) != static_cast<std::size_t>(s.dims[v])) || s.basis[v].cols() != static_cast<std::size_t>(s.dims[v]))
      return false;
  }
  for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
    const auto& a = q.arrow(ai);
    if (!columns_in_span(s.basis[a.head], w.map(ai) * s.basis[a.tail])) return false;
  }
  return true;
}

/// U_v contained in V_v for every v.
template <class F>
bool contained_in(const SubrepWitness<F>& u, const SubrepWitness<F>& v) {
  for (std::size_t i = 0; i < u.basis.size(); ++i) {
    if (!columns_in_span(v.basis[i], u.basis[i])) return false;
  }
  return true;
}

template <class F>
bool same_subrep(const SubrepWitness<F>& u, const SubrepWitness<F>& v) {
  return u.dims == v.dims && contained_in(u, v);
}

template <class F>
SubrepWitness<F> whole(const Representation<F>& w) {
  SubrepWitness<F> s{w.dims(), identity_tuple(w.field(), w.dims())};
  return s;
}

/// Restriction of W to a closed subspace tuple, in the witness basis.
template <class F>
Representation<F> restrict_to(const Representation<F>& w, const SubrepWitness<F>& s) {
  bool trivial = true;
  for (const auto& b : s.basis) trivial = trivial && b.is_identity();
  if (trivial) return w;
  std::vector<Matrix<F>> maps;
  const Quiver& q = w.quiver();
  for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
    const auto& a = q.arrow(ai);
    auto x = solve(s.basis[a.head], w.map(ai) * s.basis[a.tail]);
    if (!x) throw DomainError("restrict_to: witness is not closed under arrow '" + a.id + "'");
    maps.push_back(std::move(*x));
  }
  return Representation<F>(w.quiver_ptr(), w.field(), s.dims, std::move(maps));
}

/// W/U computed in a complement basis: the witness basis extended greedily
/// by standard basis vectors in index order.
template <class F>
struct Quotient {
  Representation<F> rep;
  VertexMatrices<F> complement;  // d_v x (d_v - e_v) columns C_v
  VertexMatrices<F> change;      // inverse of [U_v | C_v]
  DimVector sub_dims;
};

template <class F>
Quotient<F> quotient(const Representation<F>& w, const SubrepWitness<F>& s) {
  const Quiver& q = w.quiver();
  VertexMatrices<F> comp;
  VertexMatrices<F> change;
  DimVector qd;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    auto full = extend_to_basis(s.basis[v]);
    auto inv = inverse(full);
    if (!inv) throw DomainError("quotient: witness basis is not independent");
    comp.push_back(full.columns(static_cast<std::size_t>(s.dims[v]), full.cols() - static_cast<std::size_t>(s.dims[v])));
    change.push_back(std::move(*inv));
    qd.push_back(w.dim(v) - s.dims[v]);
  }
  std::vector<Matrix<F>> maps;
  for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
    const auto& a = q.arrow(ai);
    // coordinates of M_a C_t in the basis [U_h | C_h]; keep the C_h part
    auto coords = change[a.head] * (w.map(ai) * comp[a.tail]);
    maps.push_back(coords.block(static_cast<std::size_t>(s.dims[a.head]), 0, static_cast<std::size_t>(qd[a.head]),
                                static_cast<std::size_t>(qd[a.tail])));
  }
  return {Representation<F>(w.quiver_ptr(), w.field(), qd, std::move(maps)), std::move(comp), std::move(change),
          s.dims};
}

/// Preimage in W of a subrepresentation of W/U.
template <class F>
SubrepWitness<F> pullback(const SubrepWitness<F>& u, const Quotient<F>& quot, const SubrepWitness<F>& y) {
  SubrepWitness<F> out;
  for (std::size_t v = 0; v < u.basis.size(); ++v) {
    auto b = u.basis[v].hstack(quot.complement[v] * y.basis[v]);
    out.dims.push_back(static_cast<int>(b.cols()));
    out.basis.push_back(std::move(b));
  }
  return out;
}

/// Subrepresentation generated by the given vectors (columns) at each vertex.
template <class F>
SubrepWitness<F> generated_subrep(const Representation<F>& w, const VertexMatrices<F>& gens) {
  const Quiver& q = w.quiver();
  VertexMatrices<F> span;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) span.push_back(column_space(gens[v]));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
      const auto& a = q.arrow(ai);
      auto img = w.map(ai) * span[a.tail];
      if (img.cols() == 0 || columns_in_span(span[a.head], img)) continue;
      span[a.head] = column_space(span[a.head].hstack(img));
      changed = true;
    }
  }
  SubrepWitness<F> out;
  for (auto& s : span) {
    out.dims.push_back(static_cast<int>(s.cols()));
    out.basis.push_back(std::move(s));
  }
  return out;
}

/// Coordinates of `inner` in the basis of `outer` (inner must be contained in outer).
template <class F>
SubrepWitness<F> relative_to(const SubrepWitness<F>& inner, const SubrepWitness<F>& outer) {
  SubrepWitness<F> out;
  out.dims = inner.dims;
  for (std::size_t v = 0; v < inner.basis.size(); ++v) {
    auto x = solve(outer.basis[v], inner.basis[v]);
    if (!x) throw DomainError("relative_to: subrepresentation not contained in the outer one");
    out.basis.push_back(std::move(*x));
  }
  return out;
}

/// upper / lower for subrepresentations lower <= upper of W.
template <class F>
Representation<F> subquotient(const Representation<F>& w, const SubrepWitness<F>& lower,
                              const SubrepWitness<F>& upper) {
  auto top = restrict_to(w, upper);
  if (lower.is_zero()) return top;
  return quotient(top, relative_to(lower, upper)).rep;
}

enum class Verdict { Stable, StrictlySemistable, Unstable, Unknown };

std::string to_string(Verdict v);

template <class F>
struct StabilityVerdict {
  Verdict verdict = Verdict::Unknown;
  std::optional<SubrepWitness<F>> witness;  // destabilizing (Unstable) or slope-equal (StrictlySemistable)
  std::optional<std::uint32_t> certificate_prime;
  std::string note;
};

/// 0 = W^0 < W^1 < ... < W^l = W with subquotient slopes strictly decreasing.
template <class F>
struct HNFiltration {
  std::vector<SubrepWitness<F>> steps;  // W^1 .. W^l
  std::vector<mpq_class> slopes;        // slope of W^i / W^{i-1}
};

}  // namespace qf
