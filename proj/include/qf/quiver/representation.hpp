#pragma once

#include "qf/linalg/echelon.hpp"
#include "qf/linalg/matrix.hpp"
#include "qf/quiver/quiver.hpp"

#include <string>
#include <vector>

namespace qf {

/// A representation of Q over F: one matrix per arrow, M_a of shape
/// d_{h(a)} x d_{t(a)}, acting on column vectors. Immutable once built.
template <class F>
class Representation {
 public:
  using Field = F;
  using Mat = Matrix<F>;

  Representation(QuiverPtr quiver, F field, DimVector dims, std::vector<Mat> maps)
      : quiver_(std::move(quiver)), field_(std::move(field)), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (dims_.size() != quiver_->num_vertices()) throw DomainError("dimension vector length mismatch");
    for (int d : dims_) {
      if (d < 0) throw DomainError("negative dimension");
    }
    if (maps_.size() != quiver_->num_arrows()) throw DomainError("one matrix per arrow is required");
    for (std::size_t a = 0; a < maps_.size(); ++a) {
      const auto& arr = quiver_->arrow(a);
      if (maps_[a].rows() != static_cast<std::size_t>(dims_[arr.head]) ||
          maps_[a].cols() != static_cast<std::size_t>(dims_[arr.tail]))
        throw DomainError("matrix for arrow '" + arr.id + "' has shape " + maps_[a].shape() + ", expected " +
                          std::to_string(dims_[arr.head]) + "x" + std::to_string(dims_[arr.tail]));
    }
  }

  static Representation zero(QuiverPtr quiver, const F& field, DimVector dims) {
    std::vector<Mat> maps;
    for (const auto& a : quiver->arrows())
      maps.emplace_back(field, static_cast<std::size_t>(dims[a.head]), static_cast<std::size_t>(dims[a.tail]));
    return Representation(std::move(quiver), field, std::move(dims), std::move(maps));
  }

  const QuiverPtr& quiver_ptr() const { return quiver_; }
  const Quiver& quiver() const { return *quiver_; }
  const F& field() const { return field_; }
  const DimVector& dims() const { return dims_; }
  int dim(std::size_t v) const { return dims_[v]; }
  const Mat& map(std::size_t a) const { return maps_[a]; }
  const std::vector<Mat>& maps() const { return maps_; }
  int total_dim() const { return total_dimension(dims_); }

  /// g . M = (g_{h(a)} M_a g_{t(a)}^{-1})_a
  Representation act(const std::vector<Mat>& g) const {
    std::vector<Mat> ginv;
    for (std::size_t v = 0; v < g.size(); ++v) {
      auto inv = inverse(g[v]);
      if (!inv) throw NotInvertible("group element at vertex " + quiver_->vertices()[v]);
      ginv.push_back(std::move(*inv));
    }
    return act(g, ginv);
  }
  /// Same as act(g) with the inverses supplied.
  Representation act(const std::vector<Mat>& g, const std::vector<Mat>& ginv) const {
    std::vector<Mat> maps;
    for (std::size_t a = 0; a < maps_.size(); ++a) {
      const auto& arr = quiver_->arrow(a);
      maps.push_back(g[arr.head] * maps_[a] * ginv[arr.tail]);
    }
    return Representation(quiver_, field_, dims_, std::move(maps));
  }

  /// Same quiver and dims, entries transformed into another ring.
  template <class G, class Fn>
  Representation<G> transform(const G& target, Fn&& fn) const {
    std::vector<Matrix<G>> maps;
    for (const auto& m : maps_) maps.push_back(m.map(target, fn));
    return Representation<G>(quiver_, target, dims_, std::move(maps));
  }

  Representation direct_sum(const Representation& other) const {
    DimVector d = dims_;
    for (std::size_t v = 0; v < d.size(); ++v) d[v] += other.dims_[v];
    std::vector<Mat> maps;
    for (std::size_t a = 0; a < maps_.size(); ++a) maps.push_back(block_diagonal(field_, {maps_[a], other.maps_[a]}));
    return Representation(quiver_, field_, std::move(d), std::move(maps));
  }

  friend bool operator==(const Representation& x, const Representation& y) {
    return *x.quiver_ == *y.quiver_ && x.dims_ == y.dims_ && x.maps_ == y.maps_;
  }

 private:
  QuiverPtr quiver_;
  F field_;
  DimVector dims_;
  std::vector<Mat> maps_;
};

/// Per-vertex tuple of matrices (intertwiners, group elements, bases).
template <class F>
using VertexMatrices = std::vector<Matrix<F>>;

template <class F>
VertexMatrices<F> identity_tuple(const F& field, const DimVector& d) {
  VertexMatrices<F> out;
  for (int n : d) out.push_back(Matrix<F>::identity(field, static_cast<std::size_t>(n)));
  return out;
}

template <class F>
bool all_invertible(const VertexMatrices<F>& g) {
  for (const auto& m : g) {
    if (!is_invertible(m)) return false;
  }
  return true;
}

}  // namespace qf
