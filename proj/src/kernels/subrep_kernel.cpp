#include "qf/kernels/subrep_kernel.hpp"

#include <algorithm>

#include <omp.h>

namespace qf::kernels {

namespace {

using Elem = FiniteField::Elem;

// Image of the RREF rows of `u` under the d_h x d_t matrix `m`, one vector per row.
bool image_inside(const FiniteField& f, const Matrix<FiniteField>& m, const Subspace& u, const Subspace& target,
                  std::vector<Elem>& scratch) {
  const std::size_t dh = m.rows();
  const std::size_t dt = m.cols();
  scratch.assign(dh, 0);
  for (int r = 0; r < u.dim; ++r) {
    std::fill(scratch.begin(), scratch.end(), 0);
    for (std::size_t i = 0; i < dh; ++i) {
      Elem acc = 0;
      for (std::size_t k = 0; k < dt; ++k) acc = f.add(acc, f.mul(m(i, k), u.at(r, static_cast<int>(k))));
      scratch[i] = acc;
    }
    if (!in_subspace(f, target, scratch)) return false;
  }
  return true;
}

struct Radix {
  std::vector<std::uint64_t> size;
  std::uint64_t total = 1;

  void decode(std::uint64_t idx, SubspaceTuple& out) const {
    for (std::size_t v = size.size(); v-- > 0;) {
      out[v] = static_cast<std::uint32_t>(idx % size[v]);
      idx /= size[v];
    }
  }
};

Radix make_radix(const Representation<FiniteField>& w, const SubspaceCatalog& catalog) {
  Radix r;
  for (int d : w.dims()) {
    r.size.push_back(catalog.of(d).size());
    r.total *= r.size.back();
  }
  return r;
}

}  // namespace

double subrep_search_size(const Representation<FiniteField>& w) {
  double total = 1;
  for (int d : w.dims()) total *= count_subspaces(w.field().order(), d);
  return total;
}

std::vector<SubspaceTuple> closed_tuples_serial(const Representation<FiniteField>& w, const SubspaceCatalog& catalog) {
  const FiniteField& f = w.field();
  const Quiver& q = w.quiver();
  const Radix radix = make_radix(w, catalog);
  std::vector<SubspaceTuple> out;
  SubspaceTuple tuple(q.num_vertices(), 0);
  std::vector<Elem> scratch;
  for (std::uint64_t idx = 0; idx < radix.total; ++idx) {
    radix.decode(idx, tuple);
    bool closed = true;
    for (std::size_t ai = 0; ai < q.num_arrows() && closed; ++ai) {
      const auto& a = q.arrow(ai);
      const auto& ut = catalog.of(w.dim(a.tail))[tuple[a.tail]];
      const auto& uh = catalog.of(w.dim(a.head))[tuple[a.head]];
      closed = image_inside(f, w.map(ai), ut, uh, scratch);
    }
    if (closed) out.push_back(tuple);
  }
  return out;
}

std::vector<SubspaceTuple> closed_tuples_parallel(const Representation<FiniteField>& w,
                                                  const SubspaceCatalog& catalog) {
  const FiniteField& f = w.field();
  const Quiver& q = w.quiver();
  const Radix radix = make_radix(w, catalog);

  // closed[a][i * |S_h| + j]: arrow a maps subspace i at t(a) into subspace j at h(a)
  std::vector<std::vector<std::uint8_t>> closed(q.num_arrows());
  for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
    const auto& a = q.arrow(ai);
    const auto& st = catalog.of(w.dim(a.tail));
    const auto& sh = catalog.of(w.dim(a.head));
    auto& table = closed[ai];
    table.assign(st.size() * sh.size(), 0);
    const auto nt = static_cast<std::int64_t>(st.size());
#pragma omp parallel
    {
      std::vector<Elem> scratch;
#pragma omp for schedule(dynamic, 8)
      for (std::int64_t i = 0; i < nt; ++i) {
        for (std::size_t j = 0; j < sh.size(); ++j) {
          table[static_cast<std::size_t>(i) * sh.size() + j] =
              image_inside(f, w.map(ai), st[static_cast<std::size_t>(i)], sh[j], scratch) ? 1 : 0;
        }
      }
    }
  }

  std::vector<std::uint64_t> hits;
  const auto total = static_cast<std::int64_t>(radix.total);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
    SubspaceTuple tuple(q.num_vertices(), 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t idx = 0; idx < total; ++idx) {
      radix.decode(static_cast<std::uint64_t>(idx), tuple);
      bool ok = true;
      for (std::size_t ai = 0; ai < q.num_arrows() && ok; ++ai) {
        const auto& a = q.arrow(ai);
        const std::size_t nh = radix.size[a.head];
        ok = closed[ai][tuple[a.tail] * nh + tuple[a.head]] != 0;
      }
      if (ok) local.push_back(static_cast<std::uint64_t>(idx));
    }
#pragma omp critical
    hits.insert(hits.end(), local.begin(), local.end());
  }
  std::sort(hits.begin(), hits.end());

  std::vector<SubspaceTuple> out;
  out.reserve(hits.size());
  SubspaceTuple tuple(q.num_vertices(), 0);
  for (auto idx : hits) {
    radix.decode(idx, tuple);
    out.push_back(tuple);
  }
  return out;
}

}  // namespace qf::kernels
