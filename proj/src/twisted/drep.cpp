#include "qf/twisted/drep.hpp"

#include "qf/linalg/echelon.hpp"

namespace qf {

namespace {

std::int64_t squarefree_constant(const Rational& a) {
  if (a.get_den() != 1 || !a.get_num().fits_slong_p())
    throw DomainError("splitting needs an integer constant a, got " + to_string(a));
  const long m = a.get_num().get_si();
  if (m == 0 || m == 1 || Integer(squarefree_part(a)) != Integer(m))
    throw DomainError("splitting needs a squarefree constant a != 0, 1, got " + to_string(a));
  return m;
}

std::vector<Rational> flatten(const DTuple& t) {
  std::vector<Rational> out;
  for (const auto& m : t)
    for (const auto& x : m.data())
      for (const auto& c : x.c) out.push_back(c);
  return out;
}

}  // namespace

QuadraticPair splitting_pair(const QuaternionAlgebra& d) { return QuadraticPair(squarefree_constant(d.a())); }

Matrix<QuadraticField> split_element(const QuaternionAlgebra& d, const QuadraticField& l, const Quat& x) {
  if (Rational(l.m()) != d.a()) throw DomainError("splitting field does not match the algebra " + d.name());
  // [[alpha, b beta], [sigma(beta), sigma(alpha)]] with alpha = x0 + x1 s, beta = x2 + x3 s
  Matrix<QuadraticField> m(l, 2, 2);
  m(0, 0) = QuadElem{x.c[0], x.c[1]};
  m(0, 1) = QuadElem{d.b() * x.c[2], d.b() * x.c[3]};
  m(1, 0) = QuadElem{x.c[2], -x.c[3]};
  m(1, 1) = QuadElem{x.c[0], -x.c[1]};
  return m;
}

Matrix<QuadraticField> split_matrix(const Matrix<QuaternionAlgebra>& x, const QuadraticField& l) {
  Matrix<QuadraticField> out(l, 2 * x.rows(), 2 * x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) out.set_block(2 * r, 2 * c, split_element(x.field(), l, x(r, c)));
  return out;
}

LTuple standard_structure(const QuadraticField& l, const DimVector& dims, const Rational& lambda) {
  LTuple out;
  for (int d : dims) {
    if (d % 2 != 0) throw DomainError("standard quaternionic structure needs even dimensions");
    Matrix<QuadraticField> u(l, static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (std::size_t k = 0; k + 1 < u.rows(); k += 2) {
      u(k, k + 1) = l.embed(lambda);
      u(k + 1, k) = l.one();
    }
    out.push_back(std::move(u));
  }
  return out;
}

LRep morita_split(const DRep& r, const QuadraticPair& pair) {
  const QuadraticField& l = pair.ext();
  if (Rational(l.m()) != r.field().a())
    throw DomainError("morita_split: " + pair.label() + " does not split " + r.field().name() + " by i -> sqrt(m)");
  DimVector d;
  for (int x : r.dims()) d.push_back(2 * x);
  std::vector<Matrix<QuadraticField>> maps;
  for (const auto& m : r.maps()) maps.push_back(split_matrix(m, l));
  return LRep(r.quiver_ptr(), l, std::move(d), std::move(maps));
}

LRep morita_split(const DRep& r) { return morita_split(r, splitting_pair(r.field())); }

DRep morita_unsplit(const LRep& w, const QuaternionAlgebra& d) {
  const QuadraticField& l = w.field();
  if (Rational(l.m()) != d.a()) throw DomainError("morita_unsplit: field does not match the algebra " + d.name());
  DimVector dp;
  for (int x : w.dims()) {
    if (x % 2 != 0) throw DomainError("morita_unsplit: odd dimension " + std::to_string(x));
    dp.push_back(x / 2);
  }
  std::vector<Matrix<QuaternionAlgebra>> maps;
  for (std::size_t ai = 0; ai < w.maps().size(); ++ai) {
    const auto& m = w.map(ai);
    Matrix<QuaternionAlgebra> out(d, m.rows() / 2, m.cols() / 2);
    for (std::size_t r = 0; r < out.rows(); ++r) {
      for (std::size_t c = 0; c < out.cols(); ++c) {
        const auto& alpha = m(2 * r, 2 * c);
        const auto& sbeta = m(2 * r + 1, 2 * c);
        Quat x = d.make(alpha.a, alpha.b, sbeta.a, -sbeta.b);
        if (!(split_element(d, l, x) == m.block(2 * r, 2 * c, 2, 2)))
          throw DomainError("morita_unsplit: arrow '" + w.quiver().arrow(ai).id +
                            "' is not fixed by the standard quaternionic structure");
        out(r, c) = std::move(x);
      }
    }
    maps.push_back(std::move(out));
  }
  return DRep(w.quiver_ptr(), d, std::move(dp), std::move(maps));
}

bool drep_is_intertwiner(const DRep& r, const DRep& r2, const DTuple& f) {
  const Quiver& q = r.quiver();
  for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
    const auto& a = q.arrow(ai);
    if (!(f[a.head] * r.map(ai) == r2.map(ai) * f[a.tail])) return false;
  }
  return true;
}

std::vector<DTuple> drep_hom_space(const DRep& r, const DRep& r2) {
  if (!(r.quiver() == r2.quiver())) throw DomainError("drep_hom_space: different quivers");
  if (!(r.field() == r2.field())) throw DomainError("drep_hom_space: different algebras");
  const QuaternionAlgebra& d = r.field();
  const Quiver& q = r.quiver();
  const std::size_t nv = q.num_vertices();

  auto zero_tuple = [&] {
    DTuple t;
    for (std::size_t v = 0; v < nv; ++v)
      t.emplace_back(d, static_cast<std::size_t>(r2.dim(v)), static_cast<std::size_t>(r.dim(v)));
    return t;
  };
  // residual(f)_a = f_h M_a - M'_a f_t is Q-linear in the 4 coordinates of each entry of f
  auto residual = [&](const DTuple& f) {
    DTuple res;
    for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
      const auto& a = q.arrow(ai);
      res.push_back(f[a.head] * r.map(ai) - r2.map(ai) * f[a.tail]);
    }
    return flatten(res);
  };

  std::vector<DTuple> units;
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t e = 0; e < static_cast<std::size_t>(r2.dim(v) * r.dim(v)); ++e) {
      for (int k = 0; k < 4; ++k) {
        DTuple t = zero_tuple();
        t[v].data()[e].c[static_cast<std::size_t>(k)] = 1;
        units.push_back(std::move(t));
      }
    }
  }
  RationalField qq;
  std::size_t neq = 0;
  if (!units.empty()) neq = residual(units.front()).size();
  Matrix<RationalField> sys(qq, neq, units.size());
  for (std::size_t c = 0; c < units.size(); ++c) {
    auto col = residual(units[c]);
    for (std::size_t i = 0; i < neq; ++i) sys(i, c) = col[i];
  }
  std::vector<DTuple> basis;
  for (const auto& vec : kernel(sys)) {
    DTuple t = zero_tuple();
    for (std::size_t c = 0; c < units.size(); ++c) {
      if (sgn(vec[c]) == 0) continue;
      for (std::size_t v = 0; v < nv; ++v) t[v] = t[v] + d.scalar(vec[c]) * units[c][v];
    }
    basis.push_back(std::move(t));
  }
  return basis;
}

bool drep_all_invertible(const DTuple& g) {
  for (const auto& m : g) {
    if (m.rows() != m.cols()) return false;
    if (m.rows() == 0) continue;
    const QuadraticField l = splitting_pair(m.field()).ext();
    if (!is_invertible(split_matrix(m, l))) return false;
  }
  return true;
}

std::optional<DTuple> drep_find_isomorphism(const DRep& r, const DRep& r2, std::mt19937_64& rng,
                                            const IsoSearchOptions& opts, std::uint64_t seed) {
  if (r.dims() != r2.dims()) return std::nullopt;
  const QuaternionAlgebra& d = r.field();
  if (r.total_dim() == 0) return identity_tuple(d, r.dims());
  auto basis = drep_hom_space(r, r2);
  if (basis.empty()) return std::nullopt;
  if (basis.size() != drep_hom_space(r2, r).size() || basis.size() != drep_hom_space(r, r).size()) return std::nullopt;

  auto combine_q = [&](const std::vector<Rational>& coeffs) {
    DTuple t;
    for (const auto& m : basis.front()) t.emplace_back(d, m.rows(), m.cols());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (sgn(coeffs[i]) == 0) continue;
      for (std::size_t v = 0; v < t.size(); ++v) t[v] = t[v] + d.scalar(coeffs[i]) * basis[i][v];
    }
    return t;
  };
  const std::size_t k = basis.size();
  std::vector<Rational> coeffs(k);
  std::uniform_int_distribution<int> dist(-3, 3);
  if (k == 1) {
    coeffs[0] = 1;
    auto c = combine_q(coeffs);
    if (drep_all_invertible(c)) return c;
    return std::nullopt;
  }
  for (int t = 0; t < opts.trials; ++t) {
    for (auto& c : coeffs) c = dist(rng);
    auto cand = combine_q(coeffs);
    if (drep_all_invertible(cand)) return cand;
  }
  // det of the split combination has degree <= N in each coefficient
  const std::size_t n = 2 * static_cast<std::size_t>(r.total_dim());
  double space = 1;
  for (std::size_t i = 0; i < k; ++i) space *= static_cast<double>(n + 1);
  if (space > static_cast<double>(opts.exhaustive_budget))
    throw InconclusiveError("no invertible D-linear map found among " + std::to_string(opts.trials) +
                                " random combinations",
                            seed);
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) coeffs[i] = static_cast<long>(idx[i]);
    auto cand = combine_q(coeffs);
    if (drep_all_invertible(cand)) return cand;
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == n + 1) idx[pos++] = 0;
    if (pos == k) break;
  }
  return std::nullopt;
}

}  // namespace qf
