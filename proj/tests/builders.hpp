#pragma once
// Small constructors for test fixtures.

#include "qf/arith/finite_field.hpp"
#include "qf/arith/quadratic_field.hpp"
#include "qf/arith/quaternion.hpp"
#include "qf/arith/rational_field.hpp"
#include "qf/quiver/representation.hpp"

#include <initializer_list>
#include <random>
#include <vector>

namespace build {

using namespace qf;

template <class F>
Matrix<F> mat(const F& f, std::initializer_list<std::initializer_list<typename F::Elem>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix<F> m(f, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline QuadElem gi(long a, long b) { return {q(a), q(b)}; }

/// Kronecker-n representation of dimension (1,1) with scalar maps.
template <class F>
Representation<F> kronecker11(const F& f, std::vector<typename F::Elem> scalars) {
  auto quiver = Quiver::kronecker(static_cast<int>(scalars.size()));
  std::vector<Matrix<F>> maps;
  for (const auto& s : scalars) maps.push_back(mat(f, {{s}}));
  return Representation<F>(quiver, f, {1, 1}, std::move(maps));
}

template <class F>
Representation<F> loop(const F& f, Matrix<F> m) {
  int d = static_cast<int>(m.rows());
  return Representation<F>(Quiver::jordan(), f, {d}, {std::move(m)});
}

/// The 3-Kronecker representation (I_2, diag(i,-i), [[0,-1],[1,0]]) over Q(i).
inline Representation<QuadraticField> quaternionic_kronecker() {
  QuadraticField qi(-1);
  return Representation<QuadraticField>(
      Quiver::kronecker(3), qi, {2, 2},
      {mat(qi, {{gi(1, 0), gi(0, 0)}, {gi(0, 0), gi(1, 0)}}), mat(qi, {{gi(0, 1), gi(0, 0)}, {gi(0, 0), gi(0, -1)}}),
       mat(qi, {{gi(0, 0), gi(-1, 0)}, {gi(1, 0), gi(0, 0)}})});
}

template <class F, class Rng>
Matrix<F> random_matrix(const F& f, std::size_t r, std::size_t c, Rng& rng) {
  Matrix<F> m(f, r, c);
  for (auto& x : m.data()) x = f.random(rng);
  return m;
}

template <class F, class Rng>
Representation<F> random_rep(QuiverPtr quiver, const F& f, DimVector d, Rng& rng) {
  std::vector<Matrix<F>> maps;
  for (const auto& a : quiver->arrows())
    maps.push_back(random_matrix(f, static_cast<std::size_t>(d[a.head]), static_cast<std::size_t>(d[a.tail]), rng));
  return Representation<F>(std::move(quiver), f, std::move(d), std::move(maps));
}

/// Random invertible group element prod_v GL_{d_v}(F).
template <class F, class Rng>
VertexMatrices<F> random_group_element(const F& f, const DimVector& d, Rng& rng) {
  VertexMatrices<F> g;
  for (int n : d) {
    while (true) {
      auto m = random_matrix(f, static_cast<std::size_t>(n), static_cast<std::size_t>(n), rng);
      if (is_invertible(m)) {
        g.push_back(std::move(m));
        break;
      }
    }
  }
  return g;
}


/// Calls fn on every representation of the given quiver and dimension vector over F_q.
template <class Fn>
void for_each_rep(const QuiverPtr& quiver, const FiniteField& f, const DimVector& d, Fn&& fn) {
  std::size_t entries = 0;
  for (const auto& a : quiver->arrows()) entries += static_cast<std::size_t>(d[a.head] * d[a.tail]);
  std::vector<FiniteField::Elem> flat(entries, 0);
  while (true) {
    std::vector<Matrix<FiniteField>> maps;
    std::size_t k = 0;
    for (const auto& a : quiver->arrows()) {
      Matrix<FiniteField> m(f, static_cast<std::size_t>(d[a.head]), static_cast<std::size_t>(d[a.tail]));
      for (auto& x : m.data()) x = flat[k++];
      maps.push_back(std::move(m));
    }
    fn(Representation<FiniteField>(quiver, f, d, std::move(maps)));
    std::size_t pos = 0;
    while (pos < entries && ++flat[pos] == f.order()) flat[pos++] = 0;
    if (pos == entries) break;
  }
}

/// Dimension vectors with the given number of vertices and 1 <= total <= max_total.
inline std::vector<DimVector> dim_vectors(std::size_t vertices, int max_total) {
  std::vector<DimVector> out;
  DimVector d(vertices, 0);
  while (true) {
    int t = total_dimension(d);
    if (t >= 1 && t <= max_total) out.push_back(d);
    std::size_t pos = 0;
    while (pos < vertices && ++d[pos] > max_total) d[pos++] = 0;
    if (pos == vertices) break;
  }
  return out;
}

}  // namespace build
