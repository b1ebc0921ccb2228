#include "qf/kernels/orbit_kernel.hpp"

#include "qf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <omp.h>

namespace qf::kernels {

namespace {

using Elem = FiniteField::Elem;
constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

std::vector<Elem> identity(std::size_t d) {
  std::vector<Elem> m(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) m[i * d + i] = 1;
  return m;
}

}  // namespace

RepSpace::RepSpace(QuiverPtr quiver, FiniteField field, DimVector dims)
    : quiver_(std::move(quiver)), field_(std::move(field)), dims_(std::move(dims)) {
  if (dims_.size() != quiver_->num_vertices()) throw DomainError("dimension vector length mismatch");
  for (const auto& a : quiver_->arrows()) {
    offset_.push_back(entries_);
    entries_ += static_cast<std::size_t>(dims_[a.head] * dims_[a.tail]);
  }
  if (size() > static_cast<double>(std::numeric_limits<std::uint32_t>::max() - 1))
    throw BudgetError("representation space has " + std::to_string(size()) + " points, more than 2^32", size());
  count_ = 1;
  for (std::size_t i = 0; i < entries_; ++i) count_ *= field_.order();

  const Elem zeta = field_.primitive_element();
  const Elem zeta_inv = field_.inv(zeta);
  for (std::size_t v = 0; v < dims_.size(); ++v) {
    const std::size_t d = static_cast<std::size_t>(dims_[v]);
    if (d == 0) continue;
    Generator diag{v, identity(d), identity(d)};
    diag.g[0] = zeta;
    diag.ginv[0] = zeta_inv;
    gens_.push_back(std::move(diag));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (i == j) continue;
        for (Elem c : field_.prime_basis()) {
          Generator t{v, identity(d), identity(d)};
          t.g[i * d + j] = c;
          t.ginv[i * d + j] = field_.neg(c);
          gens_.push_back(std::move(t));
        }
      }
    }
  }
}

double RepSpace::size() const { return std::pow(static_cast<double>(field_.order()), static_cast<double>(entries_)); }

Representation<FiniteField> RepSpace::decode(std::uint64_t code) const {
  const std::uint32_t q = field_.order();
  std::vector<Matrix<FiniteField>> maps;
  for (const auto& a : quiver_->arrows()) {
    Matrix<FiniteField> m(field_, static_cast<std::size_t>(dims_[a.head]), static_cast<std::size_t>(dims_[a.tail]));
    for (auto& x : m.data()) {
      x = static_cast<Elem>(code % q);
      code /= q;
    }
    maps.push_back(std::move(m));
  }
  return Representation<FiniteField>(quiver_, field_, dims_, std::move(maps));
}

std::uint64_t RepSpace::encode(const Representation<FiniteField>& w) const {
  const std::uint32_t q = field_.order();
  std::uint64_t code = 0;
  std::uint64_t scale = 1;
  for (const auto& m : w.maps()) {
    for (const auto& x : m.data()) {
      code += scale * x;
      scale *= q;
    }
  }
  return code;
}

std::uint64_t RepSpace::act(std::uint64_t code, std::size_t k) const {
  const Generator& gen = gens_[k];
  const std::uint32_t q = field_.order();
  const std::size_t d = static_cast<std::size_t>(dims_[gen.vertex]);
  Elem flat[64];
  Elem tmp[64];
  // entries beyond 64 are rejected by the budget long before this point
  for (std::size_t i = 0; i < entries_; ++i) {
    flat[i] = static_cast<Elem>(code % q);
    code /= q;
  }
  for (std::size_t ai = 0; ai < quiver_->num_arrows(); ++ai) {
    const auto& a = quiver_->arrow(ai);
    const std::size_t rows = static_cast<std::size_t>(dims_[a.head]);
    const std::size_t cols = static_cast<std::size_t>(dims_[a.tail]);
    Elem* m = flat + offset_[ai];
    if (a.head == gen.vertex) {
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
          Elem acc = 0;
          for (std::size_t k2 = 0; k2 < d; ++k2) acc = field_.add(acc, field_.mul(gen.g[r * d + k2], m[k2 * cols + c]));
          tmp[r * cols + c] = acc;
        }
      std::copy(tmp, tmp + rows * cols, m);
    }
    if (a.tail == gen.vertex) {
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
          Elem acc = 0;
          for (std::size_t k2 = 0; k2 < d; ++k2)
            acc = field_.add(acc, field_.mul(m[r * cols + k2], gen.ginv[k2 * d + c]));
          tmp[r * cols + c] = acc;
        }
      std::copy(tmp, tmp + rows * cols, m);
    }
  }
  std::uint64_t out = 0;
  for (std::size_t i = entries_; i-- > 0;) out = out * q + flat[i];
  return out;
}

std::vector<std::uint32_t> orbit_labels_serial(const RepSpace& space) {
  const std::uint64_t n = space.count();
  std::vector<std::uint32_t> label(n, kUnset);
  std::vector<std::uint32_t> queue;
  for (std::uint64_t c = 0; c < n; ++c) {
    if (label[c] != kUnset) continue;
    const auto root = static_cast<std::uint32_t>(c);
    label[c] = root;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::size_t k = 0; k < space.num_generators(); ++k) {
        auto next = static_cast<std::uint32_t>(space.act(queue[head], k));
        if (label[next] == kUnset) {
          label[next] = root;
          queue.push_back(next);
        }
      }
    }
  }
  return label;
}

std::vector<std::uint32_t> orbit_labels_parallel(const RepSpace& space) {
  const std::uint64_t n = space.count();
  const auto sn = static_cast<std::int64_t>(n);
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::uint32_t> image(n);
  for (std::size_t k = 0; k < space.num_generators(); ++k) {
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < sn; ++c) image[static_cast<std::size_t>(c)] = static_cast<std::uint32_t>(space.act(static_cast<std::uint64_t>(c), k));
    for (std::uint64_t c = 0; c < n; ++c) {
      // union by smaller root keeps every root the minimum of its component
      std::uint32_t a = find(static_cast<std::uint32_t>(c));
      std::uint32_t b = find(image[c]);
      if (a == b) continue;
      if (a < b)
        parent[b] = a;
      else
        parent[a] = b;
    }
  }
  std::vector<std::uint32_t> label(n);
  for (std::uint64_t c = 0; c < n; ++c) label[c] = find(static_cast<std::uint32_t>(c));
  return label;
}

}  // namespace qf::kernels
