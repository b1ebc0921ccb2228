#pragma once

#include "qf/quiver/hom.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace qf {

struct IsoSearchOptions {
  int trials = 64;                            // random combinations tried first
  std::uint64_t exhaustive_budget = 1000000;  // max combinations in the deterministic fallback
};

/// An invertible element of span(basis), if one exists.
///
/// The single-generator case is exact. Otherwise random combinations are
/// tried, then a deterministic sweep: all of F_q^k over a finite field, or
/// the grid {0..N}^k over an infinite one, with N the total dimension. The
/// determinant of a combination is a polynomial of degree <= N in each
/// coefficient, so vanishing on that grid proves no invertible element
/// exists. If the sweep does not fit in the budget, throws InconclusiveError.
template <class F, class Rng>
std::optional<VertexMatrices<F>> find_invertible(const std::vector<VertexMatrices<F>>& basis, Rng& rng,
                                                 const IsoSearchOptions& opts, std::uint64_t seed_for_log = 0) {
  if (basis.empty()) return std::nullopt;
  const F& f = basis.front().front().field();
  if (basis.size() == 1) {
    if (all_invertible(basis.front())) return basis.front();
    return std::nullopt;
  }
  const std::size_t k = basis.size();
  std::vector<typename F::Elem> coeffs(k, f.zero());
  for (int t = 0; t < opts.trials; ++t) {
    for (auto& c : coeffs) c = f.random(rng);
    auto cand = combine(basis, coeffs);
    if (all_invertible(cand)) return cand;
  }

  std::size_t total = 0;
  for (const auto& m : basis.front()) total += m.rows();
  std::vector<typename F::Elem> values;
  if constexpr (F::is_finite) {
    for (typename F::Elem x = 0; x < f.order(); ++x) values.push_back(x);
  } else {
    for (std::size_t x = 0; x <= total; ++x) values.push_back(f.from_int(static_cast<std::int64_t>(x)));
  }
  double space = 1;
  for (std::size_t i = 0; i < k; ++i) space *= static_cast<double>(values.size());
  if (space > static_cast<double>(opts.exhaustive_budget))
    throw InconclusiveError("no invertible element found among " + std::to_string(opts.trials) +
                                " random combinations of a " + std::to_string(k) + "-dimensional Hom space",
                            seed_for_log);

  std::vector<std::size_t> idx(k, 0);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) coeffs[i] = values[idx[i]];
    auto cand = combine(basis, coeffs);
    if (all_invertible(cand)) return cand;
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == values.size()) idx[pos++] = 0;
    if (pos == k) break;
  }
  return std::nullopt;
}

/// An isomorphism W -> W', or nullopt when none exists.
template <class F, class Rng>
std::optional<VertexMatrices<F>> is_isomorphic(const Representation<F>& w, const Representation<F>& w2, Rng& rng,
                                               const IsoSearchOptions& opts = {}, std::uint64_t seed_for_log = 0) {
  if (!(w.quiver() == w2.quiver())) throw DomainError("is_isomorphic: different quivers");
  if (w.dims() != w2.dims()) return std::nullopt;
  if (w.total_dim() == 0) return identity_tuple(w.field(), w.dims());
  auto h12 = hom_space(w, w2);
  if (h12.empty()) return std::nullopt;
  // Isomorphic representations have equal Hom dimensions in all four directions.
  if (h12.size() != end_dim(w) || h12.size() != end_dim(w2) || h12.size() != hom_space(w2, w).size())
    return std::nullopt;
  return find_invertible(h12, rng, opts, seed_for_log);
}

}  // namespace qf
