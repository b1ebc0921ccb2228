#include "builders.hpp"
#include "ff_oracles.hpp"

#include "qf/arith/galois_pair.hpp"
#include "qf/kernels/subrep_kernel.hpp"
#include "qf/quiver/base_change.hpp"
#include "qf/quiver/certificate.hpp"
#include "qf/quiver/hom.hpp"
#include "qf/quiver/isomorphism.hpp"
#include "qf/quiver/stability.hpp"

#include "doctest.h"

#include <random>

using namespace qf;
using build::mat;

namespace {

FFRep companion_x2_x_1() {
  FiniteField f2 = FiniteField::prime(2);
  return build::loop(f2, mat(f2, {{0, 1}, {1, 1}}));
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_hn(const FFRep& w, const Theta& theta) {
  auto hn = hn_filtration(w, theta);
  REQUIRE(!hn.steps.empty());
  CHECK(hn.steps.back().dims == w.dims());
  DimVector sum(w.dims().size(), 0);
  SubrepWitness<FiniteField> prev{DimVector(w.dims().size(), 0), {}};
  for (int d : w.dims()) prev.basis.emplace_back(w.field(), static_cast<std::size_t>(d), 0);
  for (std::size_t i = 0; i < hn.steps.size(); ++i) {
    const auto& step = hn.steps[i];
    CHECK(is_closed(w, step));
    CHECK(contained_in(prev, step));
    auto sq = subquotient(w, prev, step);
    CHECK(sq.total_dim() > 0);
    CHECK(slope(sq.dims(), theta) == hn.slopes[i]);
    CHECK(oracle::verdict(sq, theta) != oracle::BruteVerdict::Unstable);
    if (i > 0) CHECK(hn.slopes[i] < hn.slopes[i - 1]);
    for (std::size_t v = 0; v < sum.size(); ++v) sum[v] += sq.dims()[v];
    prev = step;
  }
  CHECK(sum == w.dims());
}

}  // namespace

TEST_CASE("quiver and slope basics") {
  auto k2 = Quiver::kronecker(2);
  CHECK(k2->num_vertices() == 2);
  CHECK(k2->num_arrows() == 2);
  CHECK(k2->arrow(0).tail == 0);
  CHECK(k2->arrow(0).head == 1);
  CHECK(slope({1, 1}, {1, -1}) == 0);
  CHECK(slope({1, 0}, {1, -1}) == 1);
  CHECK(slope({2, 1}, {1, -1}) == mpq_class(1, 3));
  CHECK_THROWS_AS(slope({0, 0}, {1, -1}), DomainError);
  CHECK(divisible_by({4, 2}, 2));
  CHECK_FALSE(divisible_by({3, 2}, 2));

  FiniteField f2 = FiniteField::prime(2);
  CHECK_THROWS_AS(Representation<FiniteField>(k2, f2, {1, 1}, {mat(f2, {{1}})}), DomainError);
  CHECK_THROWS_AS(Representation<FiniteField>(k2, f2, {1, 1}, {mat(f2, {{1}}), mat(f2, {{1, 0}})}), DomainError);
}

TEST_CASE("hom_space examples") {
  FiniteField f2 = FiniteField::prime(2);
  auto w = build::kronecker11(f2, {1, 0});
  auto h = hom_space(w, w);
  REQUIRE(h.size() == 1);
  CHECK(h[0][0] == h[0][1]);
  CHECK(is_intertwiner(w, w, h[0]));

  auto z = build::kronecker11(f2, {0, 0});
  CHECK(hom_space(z, z).size() == 2);

  auto c = companion_x2_x_1();
  CHECK(end_dim(c) == 2);
  CHECK(oracle::hom_count(c, c) == 4);
  CHECK_FALSE(is_schur(c));

  FiniteField f3 = FiniteField::prime(3);
  auto k = build::kronecker11(f3, {1, 1});
  CHECK(end_dim(k) == 1);
  CHECK(is_schur(k));
  CHECK(end_dim(k.direct_sum(k)) >= 4);
  CHECK_FALSE(is_schur(k.direct_sum(k)));
}

TEST_CASE("hom_space dimension agrees with brute-force count") {
  std::mt19937_64 rng(11);
  for (std::uint32_t q : {2u, 3u}) {
    FiniteField f = FiniteField::prime(q);
    for (auto quiver : {Quiver::kronecker(2), Quiver::jordan(), Quiver::a2()}) {
      for (const auto& d : build::dim_vectors(quiver->num_vertices(), 3)) {
        for (int t = 0; t < 4; ++t) {
          auto w = build::random_rep(quiver, f, d, rng);
          auto w2 = build::random_rep(quiver, f, d, rng);
          if (q == 3 && total_dimension(d) == 3 && quiver->num_vertices() == 1) continue;
          auto basis = hom_space(w, w2);
          for (const auto& b : basis) CHECK(is_intertwiner(w, w2, b));
          CHECK(ipow(q, basis.size()) == oracle::hom_count(w, w2));
        }
      }
    }
  }
}

TEST_CASE("hom_space dimension is invariant under the group action") {
  std::mt19937_64 rng(12);
  FiniteField f3 = FiniteField::prime(3);
  FiniteField f4 = FiniteField::extension(2, 2);
  for (int t = 0; t < 30; ++t) {
    auto quiver = (t % 2 == 0) ? Quiver::kronecker(2) : Quiver::jordan();
    DimVector d = quiver->num_vertices() == 2 ? DimVector{2, 2} : DimVector{3};
    const FiniteField& f = (t % 3 == 0) ? f4 : f3;
    auto w = build::random_rep(quiver, f, d, rng);
    auto w2 = build::random_rep(quiver, f, d, rng);
    auto g = build::random_group_element(f, d, rng);
    CHECK(hom_space(w, w2).size() == hom_space(w.act(g), w2).size());
    CHECK(hom_space(w2, w).size() == hom_space(w2, w.act(g)).size());
  }
}

TEST_CASE("is_isomorphic examples and orbit oracle") {
  std::mt19937_64 rng(3);
  FiniteField f3 = FiniteField::prime(3);
  auto a = build::kronecker11(f3, {1, 0});
  auto b = build::kronecker11(f3, {2, 0});
  auto iso = is_isomorphic(a, b, rng);
  REQUIRE(iso.has_value());
  CHECK(is_intertwiner(a, b, *iso));
  CHECK(all_invertible(*iso));
  CHECK(is_isomorphic(a, a, rng).has_value());

  FiniteField f2 = FiniteField::prime(2);
  CHECK_FALSE(is_isomorphic(build::kronecker11(f2, {1, 0}), build::kronecker11(f2, {0, 1}), rng).has_value());

  // Exhaustive agreement with orbit enumeration on Jordan d=2 over F_2.
  std::vector<FFRep> all;
  build::for_each_rep(Quiver::jordan(), f2, {2}, [&](FFRep w) { all.push_back(std::move(w)); });
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); j += 3)
      CHECK(is_isomorphic(all[i], all[j], rng).has_value() == oracle::same_orbit(all[i], all[j]));
}

TEST_CASE("is_isomorphic over Q(i) and Q") {
  std::mt19937_64 rng(5);
  QuadraticField qi(-1);
  auto w = build::quaternionic_kronecker();
  std::vector<Matrix<QuadraticField>> g{mat(qi, {{build::gi(1, 1), build::gi(0, 0)}, {build::gi(2, 0), build::gi(1, 0)}}),
                                        mat(qi, {{build::gi(0, 1), build::gi(1, 0)}, {build::gi(1, 0), build::gi(0, 0)}})};
  auto w2 = w.act(g);
  auto iso = is_isomorphic(w, w2, rng);
  REQUIRE(iso.has_value());
  CHECK(is_intertwiner(w, w2, *iso));

  RationalField qq;
  auto r1 = build::kronecker11(qq, {build::q(1), build::q(2)});
  auto r2 = build::kronecker11(qq, {build::q(3), build::q(6)});
  auto r3 = build::kronecker11(qq, {build::q(1), build::q(3)});
  CHECK(is_isomorphic(r1, r2, rng).has_value());
  CHECK_FALSE(is_isomorphic(r1, r3, rng).has_value());

  // Zero maps: Hom is everything but the search must still find an isomorphism.
  auto z = Representation<RationalField>::zero(Quiver::kronecker(2), qq, {2, 1});
  CHECK(is_isomorphic(z, z, rng).has_value());
}

TEST_CASE("enumerate_subreps examples") {
  FiniteField f2 = FiniteField::prime(2);
  auto w = build::kronecker11(f2, {1, 1});
  auto subs = enumerate_subreps(w);
  REQUIRE(subs.size() == 3);
  std::vector<DimVector> dims;
  for (const auto& s : subs) {
    CHECK(is_closed(w, s));
    dims.push_back(s.dims);
  }
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<DimVector>{{0, 0}, {0, 1}, {1, 1}});

  CHECK(enumerate_subreps(build::kronecker11(f2, {0, 0})).size() == 4);

  FiniteField f3 = FiniteField::prime(3);
  CHECK(enumerate_subreps(build::loop(f3, mat(f3, {{2}}))).size() == 2);
}

TEST_CASE("enumerate_subreps matches the vector-set oracle") {
  std::mt19937_64 rng(21);
  for (std::uint32_t q : {2u, 3u}) {
    FiniteField f = FiniteField::prime(q);
    for (auto quiver : {Quiver::kronecker(2), Quiver::jordan(), Quiver::a2()}) {
      for (const auto& d : build::dim_vectors(quiver->num_vertices(), q == 2 ? 4 : 3)) {
        for (int t = 0; t < 3; ++t) {
          auto w = build::random_rep(quiver, f, d, rng);
          auto subs = enumerate_subreps(w);
          auto brute = oracle::all_subreps(w);
          CHECK(subs.size() == brute.size());
          std::multiset<DimVector> a, b;
          for (const auto& s : subs) {
            CHECK(is_closed(w, s));
            a.insert(s.dims);
          }
          for (const auto& s : brute) b.insert(s.dims);
          CHECK(a == b);
        }
      }
    }
  }
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937_64 rng(31);
  FiniteField f2 = FiniteField::prime(2);
  FiniteField f4 = FiniteField::extension(2, 2);
  SubspaceCatalog c2(f2, 4);
  SubspaceCatalog c4(f4, 3);
  for (int t = 0; t < 20; ++t) {
    auto quiver = (t % 2 == 0) ? Quiver::kronecker(2) : Quiver::jordan();
    bool big = t % 3 == 0;
    DimVector d = quiver->num_vertices() == 2 ? (big ? DimVector{1, 2} : DimVector{2, 2}) : DimVector{big ? 3 : 4};
    const FiniteField& f = big ? f4 : f2;
    const SubspaceCatalog& c = big ? c4 : c2;
    auto w = build::random_rep(quiver, f, d, rng);
    CHECK(kernels::closed_tuples_serial(w, c) == kernels::closed_tuples_parallel(w, c));
  }
}

TEST_CASE("stability_verdict examples") {
  FiniteField f2 = FiniteField::prime(2);
  Theta theta{1, -1};
  CHECK(stability_verdict(build::kronecker11(f2, {1, 1}), theta).verdict == Verdict::Stable);

  auto z = build::kronecker11(f2, {0, 0});
  auto v = stability_verdict(z, theta);
  CHECK(v.verdict == Verdict::Unstable);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->dims == DimVector{1, 0});
  CHECK(slope(v.witness->dims, theta) > slope(z.dims(), theta));
  CHECK(is_closed(z, *v.witness));

  FiniteField f3 = FiniteField::prime(3);
  CHECK(stability_verdict(build::loop(f3, mat(f3, {{2}})), {0}).verdict == Verdict::Stable);

  auto big = Representation<FiniteField>::zero(Quiver::kronecker(2), f2, {6, 6});
  StabilityConfig tight;
  tight.max_subspace_checks = 1000;
  CHECK_THROWS_AS(stability_verdict(big, theta, tight), BudgetError);
}

TEST_CASE("stability_verdict matches the brute-force verdict") {
  std::mt19937_64 rng(41);
  for (std::uint32_t q : {2u, 3u}) {
    FiniteField f = FiniteField::prime(q);
    for (auto quiver : {Quiver::kronecker(2), Quiver::jordan(), Quiver::a2()}) {
      Theta theta = quiver->num_vertices() == 2 ? Theta{1, -1} : Theta{0};
      for (const auto& d : build::dim_vectors(quiver->num_vertices(), 3)) {
        for (int t = 0; t < 4; ++t) {
          auto w = build::random_rep(quiver, f, d, rng);
          auto v = stability_verdict(w, theta);
          auto o = oracle::verdict(w, theta);
          switch (o) {
            case oracle::BruteVerdict::Stable:
              CHECK(v.verdict == Verdict::Stable);
              break;
            case oracle::BruteVerdict::StrictlySemistable:
              CHECK(v.verdict == Verdict::StrictlySemistable);
              break;
            case oracle::BruteVerdict::Unstable:
              CHECK(v.verdict == Verdict::Unstable);
              break;
          }
          if (v.witness) {
            CHECK(is_closed(w, *v.witness));
            if (v.verdict == Verdict::Unstable) CHECK(slope(v.witness->dims, theta) > slope(d, theta));
          }
        }
      }
    }
  }
}

TEST_CASE("geometric stability examples") {
  FiniteField f2 = FiniteField::prime(2);
  CHECK(is_geometrically_stable(build::kronecker11(f2, {1, 1}), {1, -1}));
  auto c = companion_x2_x_1();
  CHECK(stability_verdict(c, {0}).verdict == Verdict::Stable);
  CHECK_FALSE(is_geometrically_stable(c, {0}));
  auto k = build::kronecker11(f2, {1, 1});
  CHECK_FALSE(is_geometrically_stable(k.direct_sum(k), {1, -1}));
}

TEST_CASE("geometric stability agrees with stability over F_{q^m}, m = 1..3") {
  std::mt19937_64 rng(51);
  FiniteField f2 = FiniteField::prime(2);
  FinitePair p2(2, 2), p3(2, 3);
  for (auto quiver : {Quiver::kronecker(2), Quiver::jordan()}) {
    Theta theta = quiver->num_vertices() == 2 ? Theta{1, -1} : Theta{0};
    std::vector<DimVector> dims = quiver->num_vertices() == 2 ? std::vector<DimVector>{{1, 1}, {1, 2}, {2, 2}}
                                                              : std::vector<DimVector>{{1}, {2}, {3}};
    for (const auto& d : dims) {
      for (int t = 0; t < 6; ++t) {
        auto w = build::random_rep(quiver, f2, d, rng);
        bool geo = is_geometrically_stable(w, theta);
        bool all = stability_verdict(w, theta).verdict == Verdict::Stable &&
                   stability_verdict(base_change(w, p2), theta).verdict == Verdict::Stable &&
                   stability_verdict(base_change(w, p3), theta).verdict == Verdict::Stable;
        CHECK(geo == all);
      }
    }
  }
}

TEST_CASE("scss examples and uniqueness") {
  FiniteField f2 = FiniteField::prime(2);
  Theta theta{1, -1};
  CHECK(scss(build::kronecker11(f2, {0, 0}), theta).dims == DimVector{1, 0});
  auto k = build::kronecker11(f2, {1, 1});
  CHECK(scss(k, theta).dims == k.dims());

  std::mt19937_64 rng(61);
  for (std::uint32_t q : {2u, 3u}) {
    FiniteField f = FiniteField::prime(q);
    for (auto quiver : {Quiver::kronecker(2), Quiver::a2()}) {
      for (const auto& d : build::dim_vectors(2, q == 2 ? 4 : 3)) {
        auto w = build::random_rep(quiver, f, d, rng);
        auto s = scss(w, theta);
        CHECK(is_closed(w, s));
        auto subs = enumerate_subreps(w);
        mpq_class best;
        bool first = true;
        for (const auto& u : subs) {
          if (u.is_zero()) continue;
          mpq_class m = slope(u.dims, theta);
          if (first || m > best) best = m;
          first = false;
        }
        CHECK(slope(s.dims, theta) == best);
        for (const auto& u : subs)
          if (!u.is_zero() && slope(u.dims, theta) == best) CHECK(contained_in(u, s));
        CHECK((s.dims == w.dims()) == is_semistable(w, theta));
      }
    }
  }
}

TEST_CASE("hn_filtration examples") {
  FiniteField f2 = FiniteField::prime(2);
  Theta theta{1, -1};
  auto hn = hn_filtration(build::kronecker11(f2, {0, 0}), theta);
  REQUIRE(hn.steps.size() == 2);
  CHECK(hn.steps[0].dims == DimVector{1, 0});
  CHECK(hn.steps[1].dims == DimVector{1, 1});
  CHECK(hn.slopes[0] == 1);
  CHECK(hn.slopes[1] == -1);

  CHECK(hn_filtration(build::kronecker11(f2, {1, 1}), theta).steps.size() == 1);

  // S1 + S2 with S1 the simple at the source (slope 1) and S2 a stable (1,1) (slope 0).
  FiniteField f3 = FiniteField::prime(3);
  auto s1 = Representation<FiniteField>::zero(Quiver::kronecker(2), f3, {1, 0});
  auto s2 = build::kronecker11(f3, {1, 2});
  auto sum = s1.direct_sum(s2);
  auto h = hn_filtration(sum, theta);
  REQUIRE(h.steps.size() == 2);
  CHECK(h.steps[0].dims == DimVector{1, 0});
  CHECK(h.slopes[0] == 1);
  CHECK(h.slopes[1] == 0);
  check_hn(sum, theta);
}

TEST_CASE("hn_filtration invariants on random representations") {
  std::mt19937_64 rng(71);
  for (std::uint32_t q : {2u, 3u}) {
    FiniteField f = FiniteField::prime(q);
    for (auto quiver : {Quiver::kronecker(2), Quiver::a2()}) {
      for (const auto& d : build::dim_vectors(2, q == 2 ? 4 : 3)) {
        for (int t = 0; t < 2; ++t) check_hn(build::random_rep(quiver, f, d, rng), {1, -1});
      }
    }
  }
}

TEST_CASE("base_change") {
  FiniteField f2 = FiniteField::prime(2);
  FinitePair p(2, 2);
  auto w = build::kronecker11(f2, {1, 0});
  auto wl = base_change(w, p);
  CHECK(wl.field().order() == 4);
  CHECK(wl.map(0)(0, 0) == 1);
  CHECK(wl.map(1)(0, 0) == 0);
  auto back = restrict_to_base(wl, p);
  REQUIRE(back.has_value());
  CHECK(*back == w);

  QuadraticPair qp(-1);
  RationalField qq;
  auto r = build::kronecker11(qq, {build::q(1, 2), build::q(-3)});
  auto rl = base_change(r, qp);
  CHECK(rl.map(0)(0, 0) == QuadElem{build::q(1, 2), build::q(0)});
  CHECK(rl.map(1)(0, 0).b == 0);
  CHECK_FALSE(restrict_to_base(build::kronecker11(qp.ext(), {build::gi(1, 0), build::gi(0, 1)}), qp).has_value());
}

TEST_CASE("semistability and HN commute with quadratic base change") {
  std::mt19937_64 rng(81);
  for (std::uint32_t q : {2u, 3u}) {
    FinitePair pair(q, 2);
    const FiniteField& f = pair.base();
    for (auto quiver : {Quiver::kronecker(2), Quiver::jordan()}) {
      Theta theta = quiver->num_vertices() == 2 ? Theta{1, -1} : Theta{0};
      for (const auto& d : build::dim_vectors(quiver->num_vertices(), 3)) {
        for (int t = 0; t < 2; ++t) {
          auto w = build::random_rep(quiver, f, d, rng);
          auto wl = base_change(w, pair);
          CHECK(is_semistable(w, theta) == is_semistable(wl, theta));
          auto hn = hn_filtration(w, theta);
          auto hnl = hn_filtration(wl, theta);
          REQUIRE(hn.steps.size() == hnl.steps.size());
          for (std::size_t i = 0; i < hn.steps.size(); ++i) {
            CHECK(hn.slopes[i] == hnl.slopes[i]);
            CHECK(same_subrep(normalize(base_change(hn.steps[i], pair)), normalize(hnl.steps[i])));
          }
        }
      }
    }
  }
}

TEST_CASE("geom_stability_certificate over Q") {
  RationalField qq;
  Theta theta{1, -1};
  CertificateConfig only2;
  only2.primes = {2};
  auto v = geom_stability_certificate(build::kronecker11(qq, {build::q(1), build::q(1)}), theta, only2);
  CHECK(v.verdict == Verdict::Stable);
  CHECK(v.certificate_prime == 2u);

  auto z = build::kronecker11(qq, {build::q(0), build::q(0)});
  auto u = geom_stability_certificate(z, theta);
  CHECK(u.verdict == Verdict::Unstable);
  REQUIRE(u.witness.has_value());
  CHECK(u.witness->dims == DimVector{1, 0});
  CHECK(is_closed(z, *u.witness));

  // Denominator 2 makes p = 2 unusable; the next prime certifies.
  auto h = build::kronecker11(qq, {build::q(1, 2), build::q(3)});
  CertificateConfig two_three;
  two_three.primes = {2, 3};
  auto w = geom_stability_certificate(h, theta, two_three);
  CHECK(w.verdict == Verdict::Stable);
  CHECK(w.certificate_prime == 3u);
  CHECK(geom_stability_certificate(h, theta, only2).verdict == Verdict::Unknown);

  // (1,1)-subrepresentation of slope 0 inside (I, I) of dimension (2,2).
  auto eye = mat(qq, {{build::q(1), build::q(0)}, {build::q(0), build::q(1)}});
  Representation<RationalField> ii(Quiver::kronecker(2), qq, {2, 2}, {eye, eye});
  auto s = geom_stability_certificate(ii, theta);
  CHECK(s.verdict == Verdict::StrictlySemistable);
  REQUIRE(s.witness.has_value());
  CHECK(s.witness->dims == DimVector{1, 1});

  // A rational loop whose eigenvalues are irrational: stable over Q, not geometrically.
  auto rot = build::loop(qq, mat(qq, {{build::q(0), build::q(-1)}, {build::q(1), build::q(0)}}));
  CHECK(geom_stability_certificate(rot, {0}).verdict != Verdict::Stable);
}

TEST_CASE("geom_stability_certificate over Q(i)") {
  auto w = build::quaternionic_kronecker();
  CertificateConfig five;
  five.primes = {5};
  auto red = reduce_mod_p(w, 5);
  REQUIRE(red.has_value());
  CHECK(red->map(1)(0, 0) == 2);
  CHECK(red->map(1)(1, 1) == 3);
  auto v = geom_stability_certificate(w, {1, -1}, five);
  CHECK(v.verdict == Verdict::Stable);
  CHECK(v.certificate_prime == 5u);
  CHECK(v.note.find("i -> 2") != std::string::npos);

  CertificateConfig three;
  three.primes = {3, 7};
  CHECK_FALSE(reduce_mod_p(w, 3).has_value());
  CHECK(geom_stability_certificate(w, {1, -1}, three).verdict == Verdict::Unknown);

  QuadraticField qi(-1);
  auto k = build::kronecker11(qi, {build::gi(0, 0), build::gi(0, 0)});
  CHECK(geom_stability_certificate(k, {1, -1}).verdict == Verdict::Unstable);
}

TEST_CASE("Stable certificates agree with exhaustive decisions on reductions") {
  // For random integer reps, a Stable certificate must never coexist with an
  // exact destabilizing subrepresentation found by the candidate search.
  std::mt19937_64 rng(91);
  RationalField qq;
  for (int t = 0; t < 40; ++t) {
    DimVector d = (t % 2 == 0) ? DimVector{1, 2} : DimVector{2, 2};
    auto w = build::random_rep(Quiver::kronecker(2), qq, d, rng);
    auto v = geom_stability_certificate(w, {1, -1});
    if (v.verdict == Verdict::Stable) {
      auto red = reduce_mod_p(w, *v.certificate_prime);
      REQUIRE(red.has_value());
      CHECK(is_geometrically_stable(*red, {1, -1}));
    }
    if (v.witness) CHECK(is_closed(w, *v.witness));
  }
}
