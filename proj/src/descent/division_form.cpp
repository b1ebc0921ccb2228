#include "qf/descent/division_form.hpp"

#include "qf/arith/hilbert.hpp"

namespace qf {

Matrix<QuadraticField> standardizing_change(const Matrix<QuadraticField>& u, const Rational& lambda,
                                            const QuadraticPair& pair, std::mt19937_64& rng, int& attempts,
                                            int max_attempts, std::uint64_t seed) {
  const QuadraticField& l = pair.ext();
  const std::size_t d = u.rows();
  auto ustd = standard_structure(l, {static_cast<int>(d)}, lambda).front();
  attempts = 0;
  if (u == ustd) return Matrix<QuadraticField>::identity(l, d);

  // h = H0 + sqrt(m) H1; residual h u - u_std sigma(h) is Q-linear in (H0, H1)
  const std::size_t nunk = 2 * d * d;
  auto unit = [&](std::size_t k) {
    Matrix<QuadraticField> h(l, d, d);
    auto& e = h.data()[k % (d * d)];
    if (k < d * d)
      e.a = 1;
    else
      e.b = 1;
    return h;
  };
  RationalField qq;
  Matrix<RationalField> sys(qq, 2 * d * d, nunk);
  std::vector<Matrix<QuadraticField>> units;
  for (std::size_t k = 0; k < nunk; ++k) {
    units.push_back(unit(k));
    auto res = units.back() * u - ustd * twist(units.back(), pair, 1);
    for (std::size_t i = 0; i < d * d; ++i) {
      sys(2 * i, k) = res.data()[i].a;
      sys(2 * i + 1, k) = res.data()[i].b;
    }
  }
  std::vector<Matrix<QuadraticField>> basis;
  for (const auto& vec : kernel(sys)) {
    Matrix<QuadraticField> h(l, d, d);
    for (std::size_t k = 0; k < nunk; ++k)
      if (sgn(vec[k]) != 0) h = h + l.embed(vec[k]) * units[k];
    basis.push_back(std::move(h));
  }
  if (basis.empty()) throw InternalInvariantError("no change of basis to the standard quaternionic structure");
  std::uniform_int_distribution<int> dist(-2, 2);
  for (attempts = 1; attempts <= max_attempts; ++attempts) {
    Matrix<QuadraticField> h(l, d, d);
    for (const auto& b : basis) {
      int c = dist(rng);
      if (c != 0) h = h + l.from_int(c) * b;
    }
    if (is_invertible(h)) return h;
  }
  throw InconclusiveError("no invertible change of basis to the standard quaternionic structure in " +
                              std::to_string(max_attempts) + " attempts",
                          seed);
}

DivisionForm division_form(const DescentDatum<QuadraticPair>& dd, std::mt19937_64& rng, int max_attempts,
                           std::uint64_t seed) {
  const QuadraticPair& pair = dd.pair;
  const QuadraticField& l = pair.ext();
  if (!is_valid(dd)) throw DomainError("division_form: invalid descent datum");
  const Rational m(pair.m());
  if (!quat_is_division(m, dd.lambda))
    throw DomainError("division_form: (" + std::to_string(pair.m()) + "," + to_string(dd.lambda) +
                      ")_Q is split, the class is trivial (use hilbert90_descend)");
  for (std::size_t v = 0; v < dd.rep.dims().size(); ++v) {
    if (dd.rep.dim(v) % 2 != 0)
      throw DomainError("division_form: dimension " + std::to_string(dd.rep.dim(v)) + " at vertex '" +
                        dd.rep.quiver().vertices()[v] + "' is odd, but the index 2 of the class must divide it");
  }

  // lambda = lambda_n s^2; u / s has cocycle lambda_n
  const Rational lambda_n(squarefree_part(dd.lambda));
  const Rational s = square_cofactor(dd.lambda);
  LTuple u;
  for (const auto& x : dd.u) u.push_back(l.embed(1 / s) * x);

  DivisionForm out{DRep::zero(dd.rep.quiver_ptr(), QuaternionAlgebra(m, lambda_n), DimVector(dd.rep.dims().size(), 0)),
                   {}, dd.rep, lambda_n, 0};
  for (const auto& x : u) {
    int attempts = 0;
    out.h.push_back(standardizing_change(x, lambda_n, pair, rng, attempts, max_attempts, seed));
    out.attempts += attempts;
  }
  out.standardized = dd.rep.act(out.h);
  auto ustd = standard_structure(l, dd.rep.dims(), lambda_n);
  if (!verify_modified_action_fixed(out.standardized, ustd, pair))
    throw InternalInvariantError("standardized representation is not fixed by the standard structure");
  out.form = morita_unsplit(out.standardized, QuaternionAlgebra(m, lambda_n));
  if (!(morita_split(out.form, pair) == out.standardized))
    throw InternalInvariantError("division form does not split back to the standardized representation");
  return out;
}

}  // namespace qf
