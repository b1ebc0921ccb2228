#include "builders.hpp"
#include "doctest.h"

#include "qf/census/census.hpp"
#include "qf/io/config.hpp"
#include "qf/io/json_io.hpp"
#include "qf/quiver/stability.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace qf;
using build::gi;
using build::mat;
using build::q;

namespace {

template <class F>
void check_round_trip(const Representation<F>& w) {
  auto j = io::to_json(w);
  auto text = io::dump(j);
  auto back = io::rep_as<F>(io::parse(text));
  CHECK(back.dims() == w.dims());
  CHECK(back.quiver() == w.quiver());
  CHECK(back.field() == w.field());
  for (std::size_t a = 0; a < w.maps().size(); ++a) CHECK(back.map(a) == w.map(a));
  CHECK(io::dump(io::to_json(back)) == text);
}

std::string parse_message(const std::string& text) {
  try {
    io::rep_from_json(io::parse(text, "in.json"));
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("representation round trips over every ring") {
  std::mt19937_64 rng(5);
  check_round_trip(build::random_rep(Quiver::kronecker(2), FiniteField::prime(5), {2, 3}, rng));
  check_round_trip(build::random_rep(Quiver::jordan(), FiniteField::extension(2, 3), {3}, rng));
  check_round_trip(build::random_rep(Quiver::jordan(), FiniteField::extension(3, 2, {2, 2, 1}), {2}, rng));
  check_round_trip(build::random_rep(Quiver::a2(), RationalField{}, {2, 1}, rng));
  check_round_trip(build::quaternionic_kronecker());
  QuaternionAlgebra h(q(-1), q(-3));
  check_round_trip(build::random_rep(Quiver::kronecker(3), h, {1, 2}, rng));
  check_round_trip(Representation<FiniteField>::zero(Quiver::kronecker(2), FiniteField::prime(2), {0, 2}));
}

TEST_CASE("element encodings") {
  CHECK(io::elem_to_json(RationalField{}, q(-3, 4)) == "-3/4");
  CHECK(io::elem_to_json(FiniteField::prime(7), 5u) == 5);
  auto f9 = FiniteField::extension(3, 2);
  CHECK(io::elem_to_json(f9, f9.adjoined_root()) == io::Json::array({0, 1}));
  CHECK(io::elem_to_json(QuadraticField(-1), gi(1, -2)) == io::Json::array({"1", "-2"}));
  CHECK(io::elem_from_json(FiniteField::prime(7), io::Json(-1), "x") == 6u);
  CHECK(io::elem_from_json(RationalField{}, io::Json("6/8"), "x") == q(3, 4));
  CHECK_THROWS_AS(io::elem_from_json(RationalField{}, io::Json("1/0"), "x"), ParseError);
  CHECK_THROWS_AS(io::elem_from_json(f9, io::Json(2), "x"), ParseError);
}

TEST_CASE("parse diagnostics name the line or field") {
  auto m = parse_message("{\n  \"ring\": {\"type\": \"prime\", \"p\": 2},\n  \"dims\": [1 1]\n}");
  CHECK(m.find("in.json:3:") == 0);

  const std::string base = R"({"quiver": {"vertices": ["1", "2"], "arrows": [{"id": "a", "from": "1", "to": "2"}]},
    "ring": {"type": "prime", "p": 3}, "dims": {"1": 1, "2": 2}, "matrices": )";
  CHECK(parse_message(base + R"({"a": [[1], [2]]}})").empty());
  CHECK(parse_message(base + R"({"a": [[1, 0], [2]]}})").find("rep.matrices.a[0]") != std::string::npos);
  CHECK(parse_message(base + R"({"b": [[1], [2]]}})").find("rep.matrices.b") != std::string::npos);
  CHECK(parse_message(base + R"({"a": [[1], ["x"]]}})").find("rep.matrices.a[1][0]") != std::string::npos);
  CHECK(parse_message(base + R"({}})").find("missing matrix") != std::string::npos);
  CHECK(parse_message(R"({"ring": {"type": "prime", "p": 4}})").find("rep.ring.p") != std::string::npos);
  CHECK(parse_message(R"({"ring": {"type": "octonion"}})").find("unknown ring type") != std::string::npos);
  CHECK(parse_message(R"({"quiver": "jordan", "ring": "rational", "dims": {"x": 1}, "matrices": {"a": [["1"]]}})")
            .find("rep.dims.x") != std::string::npos);
}

TEST_CASE("descent data and twisted representations round trip") {
  QuadraticField qi(-1);
  auto J = mat(qi, {{gi(0, 0), gi(-1, 0)}, {gi(1, 0), gi(0, 0)}});
  DescentDatum<QuadraticPair> dd{QuadraticPair(-1), build::quaternionic_kronecker(), {J, J}, q(-1)};
  auto j = io::to_json(TwistedRep<QuadraticPair>{dd, 2});
  auto any = io::twisted_from_json(io::parse(io::dump(j)));
  auto* t = std::get_if<TwistedRep<QuadraticPair>>(&any);
  REQUIRE(t);
  CHECK(t->index == 2);
  CHECK(t->datum.lambda == q(-1));
  CHECK(t->datum.u[1] == J);
  CHECK(validate_twisted(*t).empty());

  FinitePair fp(2, 2);
  auto w = build::kronecker11(fp.ext(), {1, 1});
  DescentDatum<FinitePair> fd{fp, w, {Matrix<FiniteField>::identity(fp.ext(), 1), Matrix<FiniteField>::identity(fp.ext(), 1)}, 1};
  auto fj = io::datum_from_json(io::parse(io::dump(io::to_json(fd))));
  auto* back = std::get_if<DescentDatum<FinitePair>>(&fj);
  REQUIRE(back);
  CHECK(back->pair.ext() == fp.ext());
  CHECK(is_valid(*back));
}

TEST_CASE("job configuration") {
  auto c = io::config_from_json(io::parse(R"({"seed": 9, "primes": [5, 13], "format": "json", "max_points": 100})"));
  CHECK(c.seed == 9);
  CHECK(c.primes == std::vector<std::uint32_t>{5, 13});
  CHECK(c.format == "json");
  CHECK(c.census().max_points == 100);
  CHECK(io::config_from_json(io::to_json(c)).seed == 9);
  CHECK_THROWS_AS(io::config_from_json(io::parse(R"({"max_points": 0})")), ParseError);
  CHECK_THROWS_AS(io::config_from_json(io::parse(R"({"primes": [4]})")), ParseError);
  CHECK_THROWS_AS(io::config_from_json(io::parse(R"({"colour": "red"})")), ParseError);

  auto path = std::filesystem::temp_directory_path() / "qf_test_config.json";
  {
    std::ofstream out(path);
    out << R"({"seed": 41})";
  }
  setenv(io::kConfigEnv, path.c_str(), 1);
  CHECK(io::load_config(std::nullopt).seed == 41);
  unsetenv(io::kConfigEnv);
  CHECK(io::load_config(std::nullopt).seed == 0);
  std::filesystem::remove(path);
}

TEST_CASE("census reports match golden files") {
  struct Case {
    QuiverPtr quiver;
    DimVector d;
    Theta theta;
    std::uint32_t q;
  };
  std::vector<Case> cases = {{Quiver::kronecker(2), {1, 1}, {1, -1}, 2}, {Quiver::kronecker(2), {1, 1}, {1, -1}, 3},
                             {Quiver::kronecker(2), {1, 1}, {1, -1}, 5}, {Quiver::jordan(), {2}, {0}, 2},
                             {Quiver::jordan(), {2}, {0}, 3},           {Quiver::kronecker(2), {1, 2}, {2, -1}, 2},
                             {Quiver::a2(), {1, 1}, {1, -1}, 3},        {Quiver::discrete(1), {1}, {0}, 2}};
  const bool update = std::getenv("QF_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : cases) {
    auto res = orbit_census(c.quiver, c.d, c.theta, field_of_order(c.q));
    const auto text = io::dump(io::to_json(res));
    // repeated runs and the serial kernel give identical bytes
    CensusConfig serial;
    serial.parallel = false;
    CHECK(io::dump(io::to_json(orbit_census(c.quiver, c.d, c.theta, field_of_order(c.q), serial))) == text);
    auto path = std::filesystem::path(QF_FIXTURE_DIR) /
                (io::census_key(*c.quiver, c.d, c.theta, c.q) + ".json");
    CAPTURE(path.string());
    if (update) {
      std::ofstream(path) << text;
      continue;
    }
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == text);
  }
}
