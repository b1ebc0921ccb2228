#include "qf/quiver/subspaces.hpp"

#include "qf/errors.hpp"

#include <cmath>

namespace qf {

namespace {

void choose_pivots(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int c = start; c < n; ++c) {
    cur.push_back(c);
    choose_pivots(n, k, c + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(const FiniteField& f, int n) {
  std::vector<Subspace> out;
  const std::uint32_t q = f.order();
  for (int k = 0; k <= n; ++k) {
    std::vector<std::vector<int>> pivot_sets;
    std::vector<int> cur;
    choose_pivots(n, k, 0, cur, pivot_sets);
    for (const auto& piv : pivot_sets) {
      // Free positions: row r, column c > piv[r], c not a pivot.
      std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
      for (int c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < k; ++r)
        for (int c = piv[static_cast<std::size_t>(r)] + 1; c < n; ++c)
          if (!is_pivot[static_cast<std::size_t>(c)]) free.emplace_back(r, c);
      std::vector<std::uint32_t> digits(free.size(), 0);
      while (true) {
        Subspace s;
        s.dim = k;
        s.ambient = n;
        s.pivots = piv;
        s.rows.assign(static_cast<std::size_t>(k * n), 0);
        for (int r = 0; r < k; ++r) s.rows[static_cast<std::size_t>(r * n + piv[static_cast<std::size_t>(r)])] = 1;
        for (std::size_t i = 0; i < free.size(); ++i)
          s.rows[static_cast<std::size_t>(free[i].first * n + free[i].second)] = digits[i];
        out.push_back(std::move(s));
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
        if (pos == digits.size()) break;
      }
    }
  }
  return out;
}

double count_subspaces(std::uint32_t q, int n) {
  double total = 0;
  for (int k = 0; k <= n; ++k) {
    double num = 1;
    double den = 1;
    for (int i = 0; i < k; ++i) {
      num *= std::pow(static_cast<double>(q), n - i) - 1;
      den *= std::pow(static_cast<double>(q), i + 1) - 1;
    }
    total += num / den;
  }
  return total;
}

bool in_subspace(const FiniteField& f, const Subspace& s, std::span<const FiniteField::Elem> vec) {
  std::vector<FiniteField::Elem> x(vec.begin(), vec.end());
  for (int r = 0; r < s.dim; ++r) {
    const int pc = s.pivots[static_cast<std::size_t>(r)];
    const auto c = x[static_cast<std::size_t>(pc)];
    if (c == 0) continue;
    for (int j = pc; j < s.ambient; ++j)
      x[static_cast<std::size_t>(j)] = f.sub(x[static_cast<std::size_t>(j)], f.mul(c, s.at(r, j)));
  }
  for (auto v : x) {
    if (v != 0) return false;
  }
  return true;
}

SubspaceCatalog::SubspaceCatalog(FiniteField field, int max_dim) : field_(std::move(field)) {
  if (max_dim < 0) throw DomainError("negative catalog dimension");
  for (int n = 0; n <= max_dim; ++n) lists_.push_back(enumerate_subspaces(field_, n));
}

const std::vector<Subspace>& SubspaceCatalog::of(int n) const {
  if (n < 0 || n > max_dim()) throw DomainError("subspace catalog does not cover dimension " + std::to_string(n));
  return lists_[static_cast<std::size_t>(n)];
}

}  // namespace qf
