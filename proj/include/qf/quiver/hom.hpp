#pragma once

#include "qf/quiver/representation.hpp"

#include <vector>

namespace qf {

/// Basis of Hom(W, W'): tuples (f_v : W_v -> W'_v) with
/// f_{h(a)} M_a = M'_a f_{t(a)} for every arrow. Over a field F.
template <class F>
std::vector<VertexMatrices<F>> hom_space(const Representation<F>& w, const Representation<F>& w2) {
  if (!(w.quiver() == w2.quiver())) throw DomainError("hom_space: different quivers");
  const F& f = w.field();
  const Quiver& q = w.quiver();
  const std::size_t nv = q.num_vertices();

  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v)
    offset[v + 1] = offset[v] + static_cast<std::size_t>(w2.dim(v)) * static_cast<std::size_t>(w.dim(v));
  auto var = [&](std::size_t v, std::size_t r, std::size_t c) {
    return offset[v] + r * static_cast<std::size_t>(w.dim(v)) + c;
  };

  std::size_t neq = 0;
  for (const auto& a : q.arrows()) neq += static_cast<std::size_t>(w2.dim(a.head)) * static_cast<std::size_t>(w.dim(a.tail));

  Matrix<F> sys(f, neq, offset[nv]);
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
    const auto& a = q.arrow(ai);
    const auto& m = w.map(ai);
    const auto& m2 = w2.map(ai);
    const std::size_t dh = static_cast<std::size_t>(w.dim(a.head));
    const std::size_t dt = static_cast<std::size_t>(w.dim(a.tail));
    const std::size_t d2h = static_cast<std::size_t>(w2.dim(a.head));
    const std::size_t d2t = static_cast<std::size_t>(w2.dim(a.tail));
    for (std::size_t r = 0; r < d2h; ++r) {
      for (std::size_t c = 0; c < dt; ++c, ++row) {
        // (f_h M)_{rc} = sum_k f_h[r,k] M[k,c]
        for (std::size_t k = 0; k < dh; ++k) {
          auto& slot = sys(row, var(a.head, r, k));
          slot = f.add(slot, m(k, c));
        }
        // -(M' f_t)_{rc} = -sum_k M'[r,k] f_t[k,c]
        for (std::size_t k = 0; k < d2t; ++k) {
          auto& slot = sys(row, var(a.tail, k, c));
          slot = f.sub(slot, m2(r, k));
        }
      }
    }
  }

  std::vector<VertexMatrices<F>> basis;
  for (const auto& vec : kernel(sys)) {
    VertexMatrices<F> tuple;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix<F> fv(f, static_cast<std::size_t>(w2.dim(v)), static_cast<std::size_t>(w.dim(v)));
      for (std::size_t r = 0; r < fv.rows(); ++r)
        for (std::size_t c = 0; c < fv.cols(); ++c) fv(r, c) = vec[var(v, r, c)];
      tuple.push_back(std::move(fv));
    }
    basis.push_back(std::move(tuple));
  }
  return basis;
}

/// sum_i coeffs[i] * basis[i]; the basis must be nonempty.
template <class F>
VertexMatrices<F> combine(const std::vector<VertexMatrices<F>>& basis, const std::vector<typename F::Elem>& coeffs) {
  if (basis.empty()) throw DomainError("combine: empty basis");
  VertexMatrices<F> out;
  for (const auto& m : basis.front()) out.emplace_back(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t v = 0; v < out.size(); ++v) {
      const auto& f = out[v].field();
      if (f.is_zero(coeffs[i])) continue;
      out[v] = out[v] + coeffs[i] * basis[i][v];
    }
  }
  return out;
}

/// Whether f is an intertwiner W -> W'.
template <class F>
bool is_intertwiner(const Representation<F>& w, const Representation<F>& w2, const VertexMatrices<F>& f) {
  const Quiver& q = w.quiver();
  for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
    const auto& a = q.arrow(ai);
    if (!(f[a.head] * w.map(ai) == w2.map(ai) * f[a.tail])) return false;
  }
  return true;
}

template <class F>
std::size_t end_dim(const Representation<F>& w) {
  return hom_space(w, w).size();
}

/// End(W) is the base field.
template <class F>
bool is_schur(const Representation<F>& w) {
  return end_dim(w) == 1;
}

}  // namespace qf
