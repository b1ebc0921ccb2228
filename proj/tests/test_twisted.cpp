#include "builders.hpp"
#include "doctest.h"

#include "qf/descent/descent.hpp"
#include "qf/quiver/base_change.hpp"
#include "qf/twisted/drep.hpp"
#include "qf/twisted/twisted.hpp"

#include <random>

using namespace qf;
using build::gi;
using build::mat;
using build::q;

namespace {

QuaternionAlgebra hamilton() { return QuaternionAlgebra(Rational(-1), Rational(-1)); }

DRep one_i_j() {
  auto d = hamilton();
  return DRep(Quiver::kronecker(3), d, {1, 1}, {mat(d, {{d.one()}}), mat(d, {{d.i()}}), mat(d, {{d.j()}})});
}

DRep random_drep(const QuaternionAlgebra& d, QuiverPtr quiver, DimVector dims, std::mt19937_64& rng) {
  std::vector<Matrix<QuaternionAlgebra>> maps;
  for (const auto& a : quiver->arrows()) {
    Matrix<QuaternionAlgebra> m(d, static_cast<std::size_t>(dims[a.head]), static_cast<std::size_t>(dims[a.tail]));
    for (auto& x : m.data()) x = d.random(rng, 2);
    maps.push_back(std::move(m));
  }
  return DRep(std::move(quiver), d, std::move(dims), std::move(maps));
}

}  // namespace

TEST_CASE("split_element is a ring homomorphism") {
  std::mt19937_64 rng(1);
  for (auto [a, b] : {std::pair{-1, -1}, std::pair{-1, -3}, std::pair{2, 5}, std::pair{-7, 3}}) {
    QuaternionAlgebra d{Rational(a), Rational(b)};
    QuadraticField l(a);
    CHECK(split_element(d, l, d.one()) == Matrix<QuadraticField>::identity(l, 2));
    for (int t = 0; t < 50; ++t) {
      auto x = d.random(rng);
      auto y = d.random(rng);
      CHECK(split_element(d, l, d.mul(x, y)) == split_element(d, l, x) * split_element(d, l, y));
      CHECK(split_element(d, l, d.add(x, y)) == split_element(d, l, x) + split_element(d, l, y));
    }
  }
}

TEST_CASE("morita_split examples") {
  auto r = one_i_j();
  auto w = morita_split(r);
  CHECK(w == build::quaternionic_kronecker());

  auto d = hamilton();
  QuadraticField qi(-1);
  CHECK(split_matrix(Matrix<QuaternionAlgebra>(d, 1, 1), qi).is_zero());
  CHECK(split_matrix(Matrix<QuaternionAlgebra>::identity(d, 3), qi) == Matrix<QuadraticField>::identity(qi, 6));
  CHECK_THROWS_AS(morita_split(r, QuadraticPair(2)), DomainError);
}

TEST_CASE("morita_unsplit round trips") {
  auto r = one_i_j();
  CHECK(morita_unsplit(morita_split(r), r.field()) == r);

  std::mt19937_64 rng(2);
  for (auto [a, b] : {std::pair{-1, -1}, std::pair{-1, 3}, std::pair{5, -2}}) {
    QuaternionAlgebra d{Rational(a), Rational(b)};
    for (int t = 0; t < 10; ++t) {
      auto x = random_drep(d, Quiver::kronecker(2), {1, 2}, rng);
      CHECK(morita_unsplit(morita_split(x), d) == x);
    }
  }
  // Not fixed by the standard structure
  QuadraticField qi(-1);
  auto bad = build::kronecker11(qi, {gi(1, 0), gi(0, 1)}).direct_sum(build::kronecker11(qi, {gi(1, 0), gi(0, 0)}));
  CHECK_THROWS_AS(morita_unsplit(bad, hamilton()), DomainError);
}

TEST_CASE("twisted_dim and validate_twisted") {
  QuadraticPair qp(-1);
  QuadraticField qi(-1);
  auto w = build::quaternionic_kronecker();
  auto jm = mat(qi, {{gi(0, 0), gi(-1, 0)}, {gi(1, 0), gi(0, 0)}});
  TwistedRep<QuadraticPair> t{{qp, w, {jm, jm}, -1}, 2};
  CHECK(twisted_dim(t) == DimVector{1, 1});
  CHECK(validate_twisted(t).empty());

  auto r = base_change(build::loop(RationalField{}, mat(RationalField{}, {{q(1), q(2), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(3)}})), qp);
  TwistedRep<QuadraticPair> triv{{qp, r, identity_tuple(qi, r.dims()), 1}, 1};
  CHECK(twisted_dim(triv) == DimVector{3});
  CHECK(validate_twisted(triv).empty());

  TwistedRep<QuadraticPair> wrong{{qp, r, identity_tuple(qi, r.dims()), -1}, 1};
  auto problems = validate_twisted(wrong);
  REQUIRE_FALSE(problems.empty());
  CHECK(problems.front().find("lambda") != std::string::npos);

  auto z = Representation<QuadraticField>::zero(Quiver::kronecker(2), qi, {4, 2});
  TwistedRep<QuadraticPair> big{{qp, z, standard_structure(qi, {4, 2}, Rational(-1)), -1}, 2};
  CHECK(twisted_dim(big) == DimVector{2, 1});
  TwistedRep<QuadraticPair> odd{{qp, Representation<QuadraticField>::zero(Quiver::kronecker(2), qi, {3, 2}),
                                 identity_tuple(qi, {3, 2}), 1},
                                2};
  CHECK_THROWS_AS(twisted_dim(odd), DomainError);

  // u -> a u with lambda -> N(a) lambda stays valid
  std::mt19937_64 rng(3);
  for (int k = 0; k < 10; ++k) {
    QuadElem a = qi.random(rng);
    if (qi.is_zero(a)) continue;
    TwistedRep<QuadraticPair> s{rescale(t.datum, a), 2};
    CHECK(validate_twisted(s).empty());
  }
}

TEST_CASE("twisted and D-representations") {
  std::mt19937_64 rng(4);
  auto t = drep_to_twisted(one_i_j());
  CHECK(t.index == 2);
  CHECK(validate_twisted(t).empty());
  CHECK(twisted_dim(t) == DimVector{1, 1});
  CHECK(twisted_to_drep(t, rng) == one_i_j());

  auto d = hamilton();
  for (int k = 0; k < 8; ++k) {
    auto r = random_drep(d, Quiver::kronecker(2), {1, 1}, rng);
    auto tw = drep_to_twisted(r);
    CHECK(twisted_dim(tw) == r.dims());
    // move the L-representative, re-solve u, and come back
    auto g = build::random_group_element(tw.datum.pair.ext(), tw.datum.rep.dims(), rng);
    auto moved = tw.datum.rep.act(g);
    LTuple ug;
    for (std::size_t v = 0; v < g.size(); ++v)
      ug.push_back(g[v] * tw.datum.u[v] * *inverse(twist(g[v], tw.datum.pair, 1)));
    TwistedRep<QuadraticPair> t2{{tw.datum.pair, moved, ug, tw.datum.lambda}, 2};
    REQUIRE(validate_twisted(t2).empty());
    auto back = twisted_to_drep(t2, rng);
    CHECK(drep_find_isomorphism(back, r, rng).has_value());
  }
}

TEST_CASE("drep_hom_space") {
  auto r = one_i_j();
  auto end = drep_hom_space(r, r);
  // D-linear endomorphisms commute with 1, i, j: only the centre Q
  CHECK(end.size() == 1);
  for (const auto& f : end) CHECK(drep_is_intertwiner(r, r, f));
  CHECK(end_dim(morita_split(r)) == end.size());

  auto d = hamilton();
  auto z1 = DRep::zero(Quiver::discrete(1), d, {1});
  auto z2 = DRep::zero(Quiver::discrete(1), d, {2});
  CHECK(drep_hom_space(z1, z2).size() == 8);

  std::mt19937_64 rng(5);
  auto g = d.make(1, 1, 1, 0);
  auto gi_ = d.inv(g);
  std::vector<Matrix<QuaternionAlgebra>> gg{mat(d, {{g}}), mat(d, {{g}})};
  std::vector<Matrix<QuaternionAlgebra>> ginv{mat(d, {{gi_}}), mat(d, {{gi_}})};
  auto conj = r.act(gg, ginv);
  CHECK(drep_hom_space(conj, conj).size() == end.size());
  CHECK(drep_find_isomorphism(r, conj, rng).has_value());

  auto ones = DRep(Quiver::kronecker(3), d, {1, 1}, {mat(d, {{d.one()}}), mat(d, {{d.one()}}), mat(d, {{d.one()}})});
  CHECK_FALSE(drep_find_isomorphism(r, ones, rng).has_value());
  // End of (1,1,1) is D itself
  CHECK(drep_hom_space(ones, ones).size() == 4);
}

TEST_CASE("drep_is_geom_stable") {
  CertificateConfig cfg;
  cfg.primes = {5, 13};
  auto v = drep_is_geom_stable(one_i_j(), {1, -1}, cfg);
  CHECK(v.verdict == Verdict::Stable);
  CHECK(v.certificate_prime == 5u);

  auto d = hamilton();
  auto ones = DRep(Quiver::kronecker(3), d, {1, 1}, {mat(d, {{d.one()}}), mat(d, {{d.one()}}), mat(d, {{d.one()}})});
  auto u = drep_is_geom_stable(ones, {1, -1}, cfg);
  CHECK(u.verdict == Verdict::StrictlySemistable);
  REQUIRE(u.witness.has_value());
  CHECK(u.witness->dims == DimVector{1, 1});
  CHECK(is_closed(morita_split(ones), *u.witness));

  // D itself at one vertex: simple as a D-module, but its split form D (x) L
  // has equal-slope lines, so it is not geometrically stable.
  auto point = DRep::zero(Quiver::discrete(1), d, {1});
  CHECK(drep_is_geom_stable(point, {0}, cfg).verdict == Verdict::StrictlySemistable);
}
