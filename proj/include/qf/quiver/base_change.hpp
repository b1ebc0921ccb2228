#pragma once

#include "qf/quiver/representation.hpp"
#include "qf/quiver/subrep.hpp"

#include <optional>

namespace qf {

/// L (x)_k W: the same matrices read in L.
template <class Pair>
Representation<typename Pair::ExtField> base_change(const Representation<typename Pair::BaseField>& w,
                                                    const Pair& pair) {
  return w.transform(pair.ext(), [&](const auto& x) { return pair.embed(x); });
}

template <class Pair>
SubrepWitness<typename Pair::ExtField> base_change(const SubrepWitness<typename Pair::BaseField>& s,
                                                   const Pair& pair) {
  SubrepWitness<typename Pair::ExtField> out;
  out.dims = s.dims;
  for (const auto& b : s.basis) out.basis.push_back(b.map(pair.ext(), [&](const auto& x) { return pair.embed(x); }));
  return out;
}

template <class Pair>
std::optional<Matrix<typename Pair::BaseField>> restrict_matrix(const Matrix<typename Pair::ExtField>& m,
                                                                const Pair& pair) {
  Matrix<typename Pair::BaseField> out(pair.base(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i) {
    auto r = pair.restrict(m.data()[i]);
    if (!r) return std::nullopt;
    out.data()[i] = *r;
  }
  return out;
}

/// W with every entry in k, read over k; nullopt if some entry is not fixed by sigma.
template <class Pair>
std::optional<Representation<typename Pair::BaseField>> restrict_to_base(
    const Representation<typename Pair::ExtField>& w, const Pair& pair) {
  std::vector<Matrix<typename Pair::BaseField>> maps;
  for (const auto& m : w.maps()) {
    auto r = restrict_matrix(m, pair);
    if (!r) return std::nullopt;
    maps.push_back(std::move(*r));
  }
  return Representation<typename Pair::BaseField>(w.quiver_ptr(), pair.base(), w.dims(), std::move(maps));
}

}  // namespace qf
