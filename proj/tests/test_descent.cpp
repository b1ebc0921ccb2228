#include "builders.hpp"
#include "doctest.h"
#include "ff_oracles.hpp"

#include "qf/descent/descent.hpp"
#include "qf/descent/division_form.hpp"
#include "qf/descent/type_map.hpp"
#include "qf/quiver/base_change.hpp"

#include <random>

using namespace qf;
using build::gi;
using build::mat;
using build::q;

namespace {

Matrix<QuadraticField> jmat() {
  QuadraticField qi(-1);
  return mat(qi, {{gi(0, 0), gi(-1, 0)}, {gi(1, 0), gi(0, 0)}});
}

TypeMapOptions kronecker_opts() {
  TypeMapOptions o;
  o.theta = {1, -1};
  o.certificate.primes = {5, 13};
  return o;
}

}  // namespace

TEST_CASE("twist") {
  QuadraticPair qp(-1);
  QuadraticField qi(-1);
  auto w = build::loop(qi, mat(qi, {{gi(0, 1)}}));
  CHECK(twist(w, qp, 1).map(0)(0, 0) == gi(0, -1));
  CHECK(twist(w, qp, 0) == w);
  auto r = base_change(build::loop(RationalField{}, mat(RationalField{}, {{q(3, 4)}})), qp);
  CHECK(twist(r, qp, 1) == r);

  FinitePair fp(2, 2);
  const auto& f4 = fp.ext();
  auto omega = f4.adjoined_root();
  auto l = build::loop(f4, mat(f4, {{omega}}));
  CHECK(twist(l, fp, 1).map(0)(0, 0) == f4.mul(omega, omega));

  // Z/n action on F_8 and F_9 loops
  for (auto [p, n] : {std::pair{2u, 3}, std::pair{3u, 2}}) {
    FinitePair pair(p, n);
    std::mt19937_64 rng(p);
    auto x = build::random_rep(Quiver::jordan(), pair.ext(), {2}, rng);
    CHECK(twist(x, pair, n) == x);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(twist(twist(x, pair, i), pair, j) == twist(x, pair, (i + j) % n));
  }
}

TEST_CASE("verify_modified_action_fixed") {
  QuadraticPair qp(-1);
  auto w = build::quaternionic_kronecker();
  CHECK(verify_modified_action_fixed(w, LTuple{jmat(), jmat()}, qp));
  auto id = identity_tuple(qp.ext(), w.dims());
  CHECK_FALSE(verify_modified_action_fixed(w, id, qp));
  auto r = base_change(build::kronecker11(RationalField{}, {q(1), q(2)}), qp);
  CHECK(verify_modified_action_fixed(r, identity_tuple(qp.ext(), r.dims()), qp));
}

TEST_CASE("solve_modifying_u on the quaternionic Kronecker example") {
  QuadraticPair qp(-1);
  std::mt19937_64 rng(1);
  auto w = build::quaternionic_kronecker();
  auto dd = solve_modifying_u(w, qp, rng);
  REQUIRE(dd.has_value());
  CHECK(dd->lambda == -1);
  CHECK(is_valid(*dd));
  // u is unique up to a scalar: compare with (J, J)
  auto c = dd->u[0](1, 0);
  QuadraticField qi(-1);
  CHECK(dd->u[0] == c * jmat());
  CHECK(dd->u[1] == c * jmat());

  auto tm = type_map(w, qp, kronecker_opts(), rng);
  REQUIRE(tm.has_value());
  CHECK(tm->cls.describe() == "(-1,-1)_Q");
  CHECK(tm->cls.index == 2);
}

TEST_CASE("solve_modifying_u trivial and non-fixed cases") {
  QuadraticPair qp(-1);
  std::mt19937_64 rng(2);
  auto r = base_change(build::kronecker11(RationalField{}, {q(1), q(2)}), qp);
  auto dd = solve_modifying_u(r, qp, rng);
  REQUIRE(dd.has_value());
  CHECK(dd->lambda > 0);
  CHECK(qp.is_norm(dd->lambda));
  CHECK(type_class(*dd).is_trivial());

  auto nf = build::kronecker11(qp.ext(), {gi(1, 0), gi(0, 1)});
  CHECK_FALSE(solve_modifying_u(nf, qp, rng).has_value());
  CHECK_FALSE(type_map(nf, qp, kronecker_opts(), rng).has_value());

  auto k = r.direct_sum(r);
  CHECK_THROWS_AS(solve_modifying_u(k, qp, rng), DomainError);
}

TEST_CASE("hilbert90_descend over F_4/F_2") {
  FinitePair fp(2, 2);
  const auto& f4 = fp.ext();
  auto omega = f4.adjoined_root();
  std::mt19937_64 rng(3);

  // W = [1] with u = omega: omega * sigma(1) * omega^{-1} = 1 and omega * omega^2 = 1
  auto w = build::loop(f4, mat(f4, {{1}}));
  DescentDatum<FinitePair> dd{fp, w, {mat(f4, {{omega}})}, 1};
  REQUIRE(is_valid(dd));
  auto res = hilbert90_descend(dd, rng);
  CHECK(res.form.map(0)(0, 0) == 1);
  auto gs = twist(res.g, fp, 1);
  CHECK(res.g[0] * *inverse(gs[0]) == dd.u[0]);

  DescentDatum<FinitePair> ident{fp, w, {mat(f4, {{1}})}, 1};
  auto same = hilbert90_descend(ident, rng);
  CHECK(base_change(same.form, fp) == w);

  // A Galois-fixed orbit given by a non-rational representative.
  auto base = build::kronecker11(fp.base(), {1, 1});
  std::vector<Matrix<FiniteField>> g0{mat(f4, {{omega}}), mat(f4, {{1}})};
  auto moved = base_change(base, fp).act(g0);
  auto dd2 = solve_modifying_u(moved, fp, rng);
  REQUIRE(dd2.has_value());
  auto res2 = hilbert90_descend(*dd2, rng);
  CHECK(is_isomorphic(base_change(res2.form, fp), moved, rng).has_value());
  CHECK(oracle::same_orbit(res2.form, base));
}

TEST_CASE("hilbert90_descend over Q(i)/Q round trip") {
  QuadraticPair qp(-1);
  QuadraticField qi(-1);
  RationalField qq;
  std::mt19937_64 rng(4);
  auto base = build::kronecker11(qq, {q(2), q(-1)});
  std::vector<Matrix<QuadraticField>> g0{mat(qi, {{gi(1, 1)}}), mat(qi, {{gi(1, 0)}})};
  auto w = base_change(base, qp).act(g0);
  auto dd = solve_modifying_u(w, qp, rng);
  REQUIRE(dd.has_value());
  auto res = hilbert90_descend(*dd, rng);
  CHECK(is_isomorphic(base_change(res.form, qp), w, rng).has_value());
  CHECK(is_isomorphic(res.form, base, rng).has_value());

  // A 2x2 twist at one vertex.
  QuadraticField& f = qi;
  Representation<RationalField> b2(Quiver::kronecker(2), qq, {1, 2},
                                   {mat(qq, {{q(1)}, {q(0)}}), mat(qq, {{q(1, 2)}, {q(1)}})});
  std::vector<Matrix<QuadraticField>> g1{mat(f, {{gi(1, 1)}}), mat(f, {{gi(0, 1), gi(1, 0)}, {gi(2, 0), gi(0, 0)}})};
  auto w2 = base_change(b2, qp).act(g1);
  auto dd2 = solve_modifying_u(w2, qp, rng);
  REQUIRE(dd2.has_value());
  CHECK(type_class(*dd2).is_trivial());
  auto res2 = hilbert90_descend(*dd2, rng);
  CHECK(is_isomorphic(base_change(res2.form, qp), w2, rng).has_value());
  CHECK(is_isomorphic(res2.form, b2, rng).has_value());

  DescentDatum<QuadraticPair> bad{qp, build::quaternionic_kronecker(), {jmat(), jmat()}, -1};
  CHECK_THROWS_AS(hilbert90_descend(bad, rng), DomainError);
}

TEST_CASE("type map is well defined") {
  QuadraticPair qp(-1);
  QuadraticField qi(-1);
  std::mt19937_64 rng(5);
  auto w = build::quaternionic_kronecker();
  for (int t = 0; t < 10; ++t) {
    auto g = build::random_group_element(qi, w.dims(), rng);
    auto dd = solve_modifying_u(w.act(g), qp, rng);
    REQUIRE(dd.has_value());
    CHECK(qp.same_class(type_class(*dd), BrauerClass{BrauerClass::Kind::Cyclic, qp.label(), -1, -1, 2}));
    QuadElem a = qi.random(rng);
    if (qi.is_zero(a)) a = qi.one();
    auto scaled = rescale(*dd, a);
    CHECK(is_valid(scaled));
    CHECK(qp.same_class(type_class(scaled), type_class(*dd)));
  }

  FinitePair fp(2, 2);
  auto base = build::kronecker11(fp.base(), {0, 1});
  for (int t = 0; t < 10; ++t) {
    auto g = build::random_group_element(fp.ext(), {1, 1}, rng);
    auto dd = solve_modifying_u(base_change(base, fp).act(g), fp, rng);
    REQUIRE(dd.has_value());
    CHECK(type_class(*dd).is_trivial());
  }
}

TEST_CASE("division_form of the quaternionic example") {
  QuadraticPair qp(-1);
  std::mt19937_64 rng(6);
  auto w = build::quaternionic_kronecker();
  DescentDatum<QuadraticPair> dd{qp, w, {jmat(), jmat()}, -1};
  auto df = division_form(dd, rng);
  const QuaternionAlgebra& d = df.form.field();
  CHECK(d.a() == -1);
  CHECK(d.b() == -1);
  CHECK(df.attempts == 0);
  CHECK(df.form.dims() == DimVector{1, 1});
  CHECK(df.form.map(0)(0, 0) == d.one());
  CHECK(df.form.map(1)(0, 0) == d.i());
  CHECK(df.form.map(2)(0, 0) == d.j());

  // Starting from a moved representative and a solved u.
  QuadraticField qi(-1);
  for (int t = 0; t < 5; ++t) {
    auto g = build::random_group_element(qi, w.dims(), rng);
    auto moved = w.act(g);
    auto solved = solve_modifying_u(moved, qp, rng);
    REQUIRE(solved.has_value());
    auto f2 = division_form(*solved, rng);
    CHECK(f2.form.dims() == DimVector{1, 1});
    CHECK(is_isomorphic(morita_split(f2.form, qp), moved, rng).has_value());
  }

  DescentDatum<QuadraticPair> odd{qp, build::kronecker11(qi, {gi(1, 0), gi(2, 0)}),
                                  identity_tuple(qi, {1, 1}), 1};
  CHECK_THROWS_AS(division_form(odd, rng), DomainError);
}

TEST_CASE("division_form with a non-normalized scalar") {
  QuadraticPair qp(-1);
  QuadraticField qi(-1);
  std::mt19937_64 rng(7);
  auto w = build::quaternionic_kronecker();
  // u = 3 J gives lambda = -9, same class as -1
  auto u3 = qi.from_int(3) * jmat();
  DescentDatum<QuadraticPair> dd{qp, w, {u3, u3}, -9};
  REQUIRE(is_valid(dd));
  auto df = division_form(dd, rng);
  CHECK(df.lambda == -1);
  CHECK(is_isomorphic(morita_split(df.form, qp), w, rng).has_value());

  // (3, -1)_Q over Q(i): -3 is not a norm, so (-1,-3) is division
  auto c = qp.brauer_class(Rational(-3));
  CHECK(c.describe() == "(-1,-3)_Q");
}
