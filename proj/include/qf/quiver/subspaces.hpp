#pragma once

#include "qf/arith/finite_field.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace qf {

/// A subspace of F_q^n stored as its reduced row echelon basis (dim x n, row-major).
struct Subspace {
  int dim = 0;
  int ambient = 0;
  std::vector<FiniteField::Elem> rows;
  std::vector<int> pivots;

  FiniteField::Elem at(int r, int c) const { return rows[static_cast<std::size_t>(r * ambient + c)]; }
};

/// Every subspace of F_q^n, each in canonical RREF, ordered by dimension.
std::vector<Subspace> enumerate_subspaces(const FiniteField& f, int n);

/// Number of subspaces of F_q^n (sum of Gaussian binomials), as a double.
double count_subspaces(std::uint32_t q, int n);

/// Whether vec (length n) lies in the span of s.
bool in_subspace(const FiniteField& f, const Subspace& s, std::span<const FiniteField::Elem> vec);

/// Subspace lists for F_q^n, n = 0..max_dim, built once and shared read-only.
class SubspaceCatalog {
 public:
  SubspaceCatalog(FiniteField field, int max_dim);
  const FiniteField& field() const { return field_; }
  int max_dim() const { return static_cast<int>(lists_.size()) - 1; }
  const std::vector<Subspace>& of(int n) const;

 private:
  FiniteField field_;
  std::vector<std::vector<Subspace>> lists_;
};

}  // namespace qf
