#include "qf/quiver/certificate.hpp"

#include "qf/quiver/hom.hpp"

#include <string>

namespace qf {

namespace {

std::optional<FiniteField::Elem> reduce(const Rational& x, std::uint32_t p) {
  mpz_class pz(p);
  mpz_class den = x.get_den();
  if (den % pz == 0) return std::nullopt;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  mpz_class r = (x.get_num() * inv) % pz;
  if (r < 0) r += pz;
  return static_cast<FiniteField::Elem>(r.get_ui());
}

template <class F, class Fn>
std::optional<FFRep> reduce_rep(const Representation<F>& w, std::uint32_t p, Fn&& entry) {
  FiniteField fp = FiniteField::prime(p);
  std::vector<Matrix<FiniteField>> maps;
  for (const auto& m : w.maps()) {
    Matrix<FiniteField> out(fp, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.data().size(); ++i) {
      auto r = entry(m.data()[i]);
      if (!r) return std::nullopt;
      out.data()[i] = *r;
    }
    maps.push_back(std::move(out));
  }
  return FFRep(w.quiver_ptr(), fp, w.dims(), std::move(maps));
}

Rational lift(const RationalField&, FiniteField::Elem x, std::uint32_t p) {
  long v = static_cast<long>(x);
  if (2 * v > static_cast<long>(p)) v -= static_cast<long>(p);
  return Rational(v);
}

QuadElem lift(const QuadraticField& f, FiniteField::Elem x, std::uint32_t p) {
  return f.embed(lift(RationalField{}, x, p));
}

template <class F>
Matrix<F> empty_columns(const F& f, int rows) {
  return Matrix<F>(f, static_cast<std::size_t>(rows), 0);
}

template <class F>
Matrix<F> columns_of(const F& f, std::size_t rows, const std::vector<std::vector<typename F::Elem>>& vecs) {
  Matrix<F> m(f, rows, vecs.size());
  for (std::size_t c = 0; c < vecs.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = vecs[c][r];
  return m;
}

/// Exact generator tuples whose generated subrepresentations are the candidates.
template <class F>
std::vector<VertexMatrices<F>> candidate_generators(const Representation<F>& w) {
  const F& f = w.field();
  const Quiver& q = w.quiver();
  const std::size_t nv = q.num_vertices();
  std::vector<VertexMatrices<F>> out;
  auto blank = [&] {
    VertexMatrices<F> g;
    for (std::size_t v = 0; v < nv; ++v) g.push_back(empty_columns(f, w.dim(v)));
    return g;
  };
  auto add_vectors = [&](std::size_t v, const std::vector<std::vector<typename F::Elem>>& vecs) {
    if (vecs.empty()) return;
    for (const auto& x : vecs) {
      auto g = blank();
      g[v] = columns_of(f, static_cast<std::size_t>(w.dim(v)), {x});
      out.push_back(std::move(g));
    }
    auto g = blank();
    g[v] = columns_of(f, static_cast<std::size_t>(w.dim(v)), vecs);
    out.push_back(std::move(g));
  };

  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t d = static_cast<std::size_t>(w.dim(v));
    std::vector<std::vector<typename F::Elem>> unit;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<typename F::Elem> e(d, f.zero());
      e[i] = f.one();
      unit.push_back(std::move(e));
    }
    add_vectors(v, unit);

    // joint kernel of the arrows leaving v
    std::size_t rows = 0;
    for (std::size_t ai = 0; ai < q.num_arrows(); ++ai)
      if (q.arrow(ai).tail == v) rows += w.map(ai).rows();
    if (rows > 0 && d > 0) {
      Matrix<F> stacked(f, rows, d);
      std::size_t r0 = 0;
      for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
        if (q.arrow(ai).tail != v) continue;
        stacked.set_block(r0, 0, w.map(ai));
        r0 += w.map(ai).rows();
      }
      add_vectors(v, kernel(stacked));
    }
  }

  for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
    const auto& a = q.arrow(ai);
    const auto& m = w.map(ai);
    if (m.cols() == 0 || m.rows() == 0) continue;
    add_vectors(a.tail, kernel(m));
    std::vector<std::vector<typename F::Elem>> cols;
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
    add_vectors(a.head, cols);
    if (a.tail == a.head) {
      std::vector<typename F::Elem> eig{f.zero()};
      for (std::size_t i = 0; i < m.rows(); ++i) eig.push_back(m(i, i));
      for (const auto& c : eig) add_vectors(a.tail, kernel(m - Matrix<F>::scalar(f, m.rows(), c)));
    }
  }
  return out;
}

template <class F>
std::string field_note(const F&, std::uint32_t p) {
  return "reduction mod " + std::to_string(p);
}

std::string field_note(const QuadraticField& f, std::uint32_t p) {
  auto r = root_of_m_mod_p(f.m(), p);
  std::string s = f.m() == -1 ? "i" : "sqrt(" + std::to_string(f.m()) + ")";
  return "reduction mod " + std::to_string(p) + " with " + s + " -> " + std::to_string(r.value_or(0));
}

template <class F, class Reduce>
StabilityVerdict<F> certify(const Representation<F>& w, const Theta& theta, const CertificateConfig& cfg,
                            Reduce&& reduce_fn) {
  StabilityVerdict<F> out;
  const F& f = w.field();
  if (w.total_dim() == 0) throw DomainError("stability of the zero representation");
  if (w.total_dim() == 1) {
    out.verdict = Verdict::Stable;
    out.note = "no proper nonzero subrepresentations";
    return out;
  }
  const mpq_class mu = slope(w.dims(), theta);

  std::vector<VertexMatrices<F>> gens = candidate_generators(w);
  std::optional<std::uint32_t> semistable_prime;
  std::optional<BudgetError> budget;
  std::vector<std::uint32_t> skipped;
  for (std::uint32_t p : cfg.primes) {
    std::optional<FFRep> red = reduce_fn(w, p);
    if (!red) {
      skipped.push_back(p);
      continue;
    }
    StabilityVerdict<FiniteField> v;
    try {
      v = stability_verdict(*red, theta, cfg.stability);
    } catch (const BudgetError& e) {
      budget = e;
      continue;
    }
    if (v.verdict == Verdict::Stable && is_schur(*red)) {
      out.verdict = Verdict::Stable;
      out.certificate_prime = p;
      out.note = field_note(f, p) + " is geometrically stable";
      return out;
    }
    if (v.verdict != Verdict::Unstable && !semistable_prime) semistable_prime = p;
    if (v.witness) {
      VertexMatrices<F> g;
      for (const auto& b : v.witness->basis) g.push_back(b.map(f, [&](FiniteField::Elem x) { return lift(f, x, p); }));
      gens.push_back(std::move(g));
    }
  }

  std::optional<SubrepWitness<F>> best;
  mpq_class best_slope;
  for (const auto& g : gens) {
    auto s = generated_subrep(w, g);
    if (s.is_zero() || s.dims == w.dims()) continue;
    mpq_class m = slope(s.dims, theta);
    if (!best || m > best_slope || (m == best_slope && total_dimension(s.dims) > total_dimension(best->dims))) {
      best = std::move(s);
      best_slope = m;
    }
  }
  if (best && !is_closed(w, *best)) throw InternalInvariantError("generated subrepresentation is not closed");

  if (best && best_slope > mu) {
    out.verdict = Verdict::Unstable;
    out.witness = best;
    out.note = "exact destabilizing subrepresentation";
    return out;
  }
  if (best && best_slope == mu && semistable_prime) {
    out.verdict = Verdict::StrictlySemistable;
    out.witness = best;
    out.certificate_prime = semistable_prime;
    out.note = field_note(f, *semistable_prime) + " is semistable; exact subrepresentation of equal slope";
    return out;
  }
  if (budget) throw *budget;
  out.verdict = Verdict::Unknown;
  if (skipped.size() == cfg.primes.size()) {
    out.note = "no usable prime among the candidates";
  } else if (best && best_slope == mu) {
    out.note = "not stable (exact subrepresentation of equal slope); semistability not certified";
    out.witness = best;
  } else {
    out.note = "no reduction is geometrically stable and no exact destabilizing subrepresentation was found";
  }
  return out;
}

}  // namespace

std::optional<std::uint32_t> root_of_m_mod_p(std::int64_t m, std::uint32_t p) {
  const std::int64_t mm = ((m % static_cast<std::int64_t>(p)) + p) % p;
  for (std::uint64_t r = 0; r < p; ++r)
    if (static_cast<std::int64_t>((r * r) % p) == mm) return static_cast<std::uint32_t>(r);
  return std::nullopt;
}

std::optional<FFRep> reduce_mod_p(const Representation<RationalField>& w, std::uint32_t p) {
  if (!is_prime(Integer(p))) throw DomainError("reduce_mod_p: " + std::to_string(p) + " is not prime");
  return reduce_rep(w, p, [&](const Rational& x) { return reduce(x, p); });
}

std::optional<FFRep> reduce_mod_p(const Representation<QuadraticField>& w, std::uint32_t p) {
  if (!is_prime(Integer(p))) throw DomainError("reduce_mod_p: " + std::to_string(p) + " is not prime");
  auto root = root_of_m_mod_p(w.field().m(), p);
  if (!root) return std::nullopt;
  FiniteField fp = FiniteField::prime(p);
  return reduce_rep(w, p, [&](const QuadElem& x) -> std::optional<FiniteField::Elem> {
    auto a = reduce(x.a, p);
    auto b = reduce(x.b, p);
    if (!a || !b) return std::nullopt;
    return fp.add(*a, fp.mul(*b, *root));
  });
}

StabilityVerdict<RationalField> geom_stability_certificate(const Representation<RationalField>& w, const Theta& theta,
                                                           const CertificateConfig& cfg) {
  return certify(w, theta, cfg, [](const auto& r, std::uint32_t p) { return reduce_mod_p(r, p); });
}

StabilityVerdict<QuadraticField> geom_stability_certificate(const Representation<QuadraticField>& w,
                                                            const Theta& theta, const CertificateConfig& cfg) {
  return certify(w, theta, cfg, [](const auto& r, std::uint32_t p) { return reduce_mod_p(r, p); });
}

}  // namespace qf
