#pragma once

#include "qf/arith/finite_field.hpp"
#include "qf/arith/galois_pair.hpp"
#include "qf/arith/quadratic_field.hpp"
#include "qf/arith/quaternion.hpp"
#include "qf/arith/rational_field.hpp"
#include "qf/census/census.hpp"
#include "qf/descent/descent.hpp"
#include "qf/errors.hpp"
#include "qf/quiver/representation.hpp"
#include "qf/quiver/subrep.hpp"
#include "qf/twisted/drep.hpp"
#include "qf/twisted/twisted.hpp"

#include "json.hpp"

#include <string>
#include <variant>

namespace qf::io {

using Json = nlohmann::ordered_json;

/// Parses text; syntax errors become ParseError "source:line:column: ...".
Json parse(const std::string& text, const std::string& source = "<input>");
Json read_file(const std::string& path);
/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

/// Raised with the JSON path of the offending field.
[[noreturn]] void fail(const std::string& path, const std::string& what);
const Json& field(const Json& j, const std::string& key, const std::string& path);
std::int64_t as_int(const Json& j, const std::string& path);
Rational as_rational(const Json& j, const std::string& path);

// ---- elements and rings

Json elem_to_json(const RationalField& f, const Rational& x);
Json elem_to_json(const FiniteField& f, FiniteField::Elem x);
Json elem_to_json(const QuadraticField& f, const QuadElem& x);
Json elem_to_json(const QuaternionAlgebra& f, const Quat& x);

Rational elem_from_json(const RationalField& f, const Json& j, const std::string& path);
FiniteField::Elem elem_from_json(const FiniteField& f, const Json& j, const std::string& path);
QuadElem elem_from_json(const QuadraticField& f, const Json& j, const std::string& path);
Quat elem_from_json(const QuaternionAlgebra& f, const Json& j, const std::string& path);

using AnyField = std::variant<RationalField, FiniteField, QuadraticField, QuaternionAlgebra>;

AnyField ring_from_json(const Json& j, const std::string& path = "ring");
Json ring_to_json(const RationalField& f);
Json ring_to_json(const FiniteField& f);
Json ring_to_json(const QuadraticField& f);
Json ring_to_json(const QuaternionAlgebra& f);

// ---- quivers, matrices, representations

QuiverPtr quiver_from_json(const Json& j, const std::string& path = "quiver");
Json to_json(const Quiver& q);

template <class F>
Json to_json(const Matrix<F>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(elem_to_json(m.field(), m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
Matrix<F> matrix_from_json(const F& f, const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  Matrix<F> m(f, rows, cols);
  if (!j.is_array()) fail(path, "expected an array of rows");
  if (j.size() != rows && rows != 0 && cols != 0)
    fail(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  if (rows == 0 || cols == 0) return m;
  for (std::size_t r = 0; r < rows; ++r) {
    const auto rp = path + "[" + std::to_string(r) + "]";
    const Json& row = j[r];
    if (!row.is_array() || row.size() != cols) fail(rp, "expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = elem_from_json(f, row[c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

DimVector dims_from_json(const Quiver& q, const Json& j, const std::string& path);
Json dims_to_json(const Quiver& q, const DimVector& d);
Theta theta_from_json(const Quiver& q, const Json& j, const std::string& path);

template <class F>
VertexMatrices<F> tuple_from_json(const F& f, const Quiver& q, const DimVector& rows, const DimVector& cols,
                                  const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object keyed by vertex");
  VertexMatrices<F> out;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    const auto& name = q.vertices()[v];
    const auto r = static_cast<std::size_t>(rows[v]);
    const auto c = static_cast<std::size_t>(cols[v]);
    if (!j.contains(name)) {
      if (r == 0 || c == 0) {
        out.emplace_back(f, r, c);
        continue;
      }
      fail(path + "." + name, "missing matrix");
    }
    out.push_back(matrix_from_json(f, j.at(name), r, c, path + "." + name));
  }
  return out;
}

template <class F>
Json tuple_to_json(const Quiver& q, const VertexMatrices<F>& g) {
  Json out = Json::object();
  for (std::size_t v = 0; v < q.num_vertices(); ++v) out[q.vertices()[v]] = to_json(g[v]);
  return out;
}

template <class F>
Json to_json(const Representation<F>& w) {
  Json out = Json::object();
  out["quiver"] = to_json(w.quiver());
  out["ring"] = ring_to_json(w.field());
  out["dims"] = dims_to_json(w.quiver(), w.dims());
  Json mats = Json::object();
  for (std::size_t a = 0; a < w.quiver().num_arrows(); ++a) mats[w.quiver().arrow(a).id] = to_json(w.map(a));
  out["matrices"] = std::move(mats);
  return out;
}

template <class F>
Representation<F> rep_over(const F& f, const Json& j, const std::string& path) {
  auto q = quiver_from_json(field(j, "quiver", path), path + ".quiver");
  auto dims = dims_from_json(*q, field(j, "dims", path), path + ".dims");
  const Json empty = Json::object();
  const Json& mats = j.contains("matrices") ? j.at("matrices") : empty;
  if (!mats.is_object()) fail(path + ".matrices", "expected an object keyed by arrow id");
  for (const auto& [key, _] : mats.items()) {
    bool known = false;
    for (const auto& a : q->arrows()) known = known || a.id == key;
    if (!known) fail(path + ".matrices." + key, "no arrow with this id");
  }
  std::vector<Matrix<F>> maps;
  for (const auto& a : q->arrows()) {
    const auto r = static_cast<std::size_t>(dims[a.head]);
    const auto c = static_cast<std::size_t>(dims[a.tail]);
    const auto mp = path + ".matrices." + a.id;
    if (!mats.contains(a.id)) {
      if (r == 0 || c == 0) {
        maps.emplace_back(f, r, c);
        continue;
      }
      fail(mp, "missing matrix");
    }
    maps.push_back(matrix_from_json(f, mats.at(a.id), r, c, mp));
  }
  return Representation<F>(q, f, dims, std::move(maps));
}

using AnyRep = std::variant<Representation<RationalField>, Representation<FiniteField>,
                            Representation<QuadraticField>, Representation<QuaternionAlgebra>>;

AnyRep rep_from_json(const Json& j, const std::string& path = "rep");

/// The representation, which must be over a ring of type F.
template <class F>
Representation<F> rep_as(const Json& j, const std::string& path = "rep") {
  auto any = rep_from_json(j, path);
  if (auto* w = std::get_if<Representation<F>>(&any)) return *w;
  fail(path + ".ring", "representation is over the wrong kind of ring for this command");
}

// ---- subrepresentations, verdicts, filtrations

template <class F>
Json to_json(const SubrepWitness<F>& s, const Quiver& q) {
  Json out = Json::object();
  out["dims"] = dims_to_json(q, s.dims);
  out["basis"] = tuple_to_json(q, s.basis);
  return out;
}

template <class F>
Json to_json(const StabilityVerdict<F>& v, const Quiver& q) {
  Json out = Json::object();
  out["verdict"] = to_string(v.verdict);
  if (v.witness) out["witness"] = to_json(*v.witness, q);
  if (v.certificate_prime) out["certificate_prime"] = *v.certificate_prime;
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

template <class F>
Json to_json(const HNFiltration<F>& h, const Quiver& q) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < h.steps.size(); ++i) {
    Json s = to_json(h.steps[i], q);
    s["slope"] = to_string(mpq_class(h.slopes[i]));
    steps.push_back(std::move(s));
  }
  return Json{{"steps", std::move(steps)}};
}

// ---- Galois pairs, descent data, twisted representations

using AnyPair = std::variant<FinitePair, QuadraticPair>;

AnyPair pair_from_json(const Json& j, const std::string& path = "pair");
Json to_json(const FinitePair& p);
Json to_json(const QuadraticPair& p);

template <class Pair>
Json to_json(const DescentDatum<Pair>& dd) {
  Json out = Json::object();
  out["rep"] = to_json(dd.rep);
  out["u"] = tuple_to_json(dd.rep.quiver(), dd.u);
  out["lambda"] = elem_to_json(dd.pair.base(), dd.lambda);
  out["pair"] = to_json(dd.pair);
  return out;
}

template <class Pair>
DescentDatum<Pair> datum_from_json(const Pair& pair, const Json& j, const std::string& path) {
  auto rep = rep_over(pair.ext(), field(j, "rep", path), path + ".rep");
  auto u = tuple_from_json(pair.ext(), rep.quiver(), rep.dims(), rep.dims(), field(j, "u", path), path + ".u");
  auto lambda = elem_from_json(pair.base(), field(j, "lambda", path), path + ".lambda");
  return DescentDatum<Pair>{pair, std::move(rep), std::move(u), std::move(lambda)};
}

using AnyDatum = std::variant<DescentDatum<FinitePair>, DescentDatum<QuadraticPair>>;
AnyDatum datum_from_json(const Json& j, const std::string& path = "datum");

template <class Pair>
Json to_json(const TwistedRep<Pair>& t) {
  Json out = to_json(t.datum);
  out["index"] = t.index;
  return out;
}

using AnyTwisted = std::variant<TwistedRep<FinitePair>, TwistedRep<QuadraticPair>>;
AnyTwisted twisted_from_json(const Json& j, const std::string& path = "twisted");

// ---- reports

Json to_json(const BrauerClass& c);
Json to_json(const CensusResult& c);
Json to_json(const PolynomialFit& f);
Json to_json(const DescentCensusReport& r);
Json to_json(const ClassificationRecord& r);

/// Comma-separated integers, e.g. "1,-1".
std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what);

}  // namespace qf::io

namespace qf::io {

/// FNV-1a of the quiver fingerprint, 16 hex digits.
std::string quiver_hash(const Quiver& q);
/// File stem identifying a census: "<quiver hash>_d<d>_t<theta>_q<q>".
std::string census_key(const Quiver& q, const DimVector& d, const Theta& theta, std::uint32_t order);

}  // namespace qf::io
