#pragma once

#include "qf/arith/finite_field.hpp"
#include "qf/quiver/representation.hpp"

#include <cstdint>
#include <vector>

namespace qf::kernels {

/// Rep_{Q,d}(F_q) with every representation encoded as an integer:
/// entries listed arrow by arrow in row-major order, code = sum_k e_k q^k.
/// The group prod_v GL_{d_v}(F_q) acts through a generating set of diagonal
/// and elementary matrices.
class RepSpace {
 public:
  RepSpace(QuiverPtr quiver, FiniteField field, DimVector dims);

  const Quiver& quiver() const { return *quiver_; }
  const FiniteField& field() const { return field_; }
  const DimVector& dims() const { return dims_; }
  std::size_t entries() const { return entries_; }
  /// q^entries as a double (may exceed 2^64).
  double size() const;
  std::uint64_t count() const { return count_; }

  Representation<FiniteField> decode(std::uint64_t code) const;
  std::uint64_t encode(const Representation<FiniteField>& w) const;

  std::size_t num_generators() const { return gens_.size(); }
  /// g_k . W for the k-th generator.
  std::uint64_t act(std::uint64_t code, std::size_t k) const;

 private:
  struct Generator {
    std::size_t vertex;
    std::vector<FiniteField::Elem> g;     // d x d row-major
    std::vector<FiniteField::Elem> ginv;  // d x d row-major
  };
  QuiverPtr quiver_;
  FiniteField field_;
  DimVector dims_;
  std::size_t entries_ = 0;
  std::uint64_t count_ = 0;
  std::vector<std::size_t> offset_;  // start of each arrow's block in the entry list
  std::vector<Generator> gens_;
};

/// For every code, the smallest code of its orbit.
/// Serial reference: breadth-first traversal from each unvisited code in increasing order.
std::vector<std::uint32_t> orbit_labels_serial(const RepSpace& space);

/// Union-find over the action graph; generator images are computed in parallel.
/// Produces the same labels as the serial kernel.
std::vector<std::uint32_t> orbit_labels_parallel(const RepSpace& space);

}  // namespace qf::kernels
