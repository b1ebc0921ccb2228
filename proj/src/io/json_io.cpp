#include "qf/io/json_io.hpp"

#include <fstream>
#include <sstream>

namespace qf::io {

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    auto pos = msg.find("syntax error");
    if (pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  if (!j.contains(key)) fail(path, "missing field '" + key + "'");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    try {
      std::size_t used = 0;
      auto v = std::stoll(j.get<std::string>(), &used);
      if (used == j.get<std::string>().size()) return v;
    } catch (const std::exception&) {
    }
  }
  fail(path, "expected an integer");
}

Rational as_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected a rational as \"p/q\" or an integer");
}

// ---- elements

Json elem_to_json(const RationalField&, const Rational& x) { return to_string(x); }

Json elem_to_json(const FiniteField& f, FiniteField::Elem x) {
  if (f.is_prime_field()) return x;
  return f.coefficients(x);
}

Json elem_to_json(const QuadraticField&, const QuadElem& x) { return Json::array({to_string(x.a), to_string(x.b)}); }

Json elem_to_json(const QuaternionAlgebra&, const Quat& x) {
  Json out = Json::array();
  for (const auto& c : x.c) out.push_back(to_string(c));
  return out;
}

Rational elem_from_json(const RationalField&, const Json& j, const std::string& path) { return as_rational(j, path); }

FiniteField::Elem elem_from_json(const FiniteField& f, const Json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.size() != static_cast<std::size_t>(f.degree()))
      fail(path, "expected " + std::to_string(f.degree()) + " coefficients");
    std::vector<std::uint32_t> cs;
    for (std::size_t i = 0; i < j.size(); ++i) {
      auto v = as_int(j[i], path + "[" + std::to_string(i) + "]");
      const auto p = static_cast<std::int64_t>(f.characteristic());
      cs.push_back(static_cast<std::uint32_t>(((v % p) + p) % p));
    }
    return f.from_coefficients(cs);
  }
  if (!f.is_prime_field()) fail(path, "extension field elements are coefficient arrays");
  return f.from_int(as_int(j, path));
}

QuadElem elem_from_json(const QuadraticField&, const Json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.size() != 2) fail(path, "expected [\"a\", \"b\"] for a + b sqrt(m)");
    return {as_rational(j[0], path + "[0]"), as_rational(j[1], path + "[1]")};
  }
  return {as_rational(j, path), Rational(0)};
}

Quat elem_from_json(const QuaternionAlgebra& f, const Json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.size() != 4) fail(path, "expected 4 coefficients x0 + x1 i + x2 j + x3 ij");
    return f.make(as_rational(j[0], path + "[0]"), as_rational(j[1], path + "[1]"), as_rational(j[2], path + "[2]"),
                  as_rational(j[3], path + "[3]"));
  }
  return f.scalar(as_rational(j, path));
}

// ---- rings

AnyField ring_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() == "rational") return RationalField{};
    fail(path, "unknown ring '" + j.get<std::string>() + "'");
  }
  const Json& t = field(j, "type", path);
  if (!t.is_string()) fail(path + ".type", "expected a string");
  const auto type = t.get<std::string>();
  try {
    if (type == "rational") return RationalField{};
    if (type == "prime") {
      auto p = as_int(field(j, "p", path), path + ".p");
      if (p < 2 || p > 65536 || !is_prime(Integer(std::to_string(p)))) fail(path + ".p", "expected a prime below 2^16");
      return FiniteField::prime(static_cast<std::uint32_t>(p));
    }
    if (type == "extension") {
      auto p = as_int(field(j, "p", path), path + ".p");
      auto n = as_int(field(j, "n", path), path + ".n");
      if (p < 2 || !is_prime(Integer(std::to_string(p)))) fail(path + ".p", "expected a prime");
      if (n < 1 || n > 16) fail(path + ".n", "expected a degree between 1 and 16");
      std::vector<std::uint32_t> modulus;
      if (j.contains("modulus")) {
        const Json& m = j.at("modulus");
        if (!m.is_array()) fail(path + ".modulus", "expected a coefficient array, low degree first");
        for (std::size_t i = 0; i < m.size(); ++i) {
          auto c = as_int(m[i], path + ".modulus[" + std::to_string(i) + "]");
          if (c < 0 || c >= p) fail(path + ".modulus[" + std::to_string(i) + "]", "coefficient out of range");
          modulus.push_back(static_cast<std::uint32_t>(c));
        }
      }
      return FiniteField::extension(static_cast<std::uint32_t>(p), static_cast<int>(n), modulus);
    }
    if (type == "quadratic") return QuadraticField(as_int(field(j, "m", path), path + ".m"));
    if (type == "quaternion")
      return QuaternionAlgebra(as_rational(field(j, "a", path), path + ".a"),
                               as_rational(field(j, "b", path), path + ".b"));
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
  fail(path + ".type", "unknown ring type '" + type + "'");
}

Json ring_to_json(const RationalField&) { return Json{{"type", "rational"}}; }

Json ring_to_json(const FiniteField& f) {
  if (f.is_prime_field()) return Json{{"type", "prime"}, {"p", f.characteristic()}};
  return Json{{"type", "extension"}, {"p", f.characteristic()}, {"n", f.degree()}, {"modulus", f.modulus()}};
}

Json ring_to_json(const QuadraticField& f) { return Json{{"type", "quadratic"}, {"m", f.m()}}; }

Json ring_to_json(const QuaternionAlgebra& f) {
  return Json{{"type", "quaternion"}, {"a", to_string(f.a())}, {"b", to_string(f.b())}};
}

// ---- quivers

QuiverPtr quiver_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "kronecker2") return Quiver::kronecker(2);
    if (name == "kronecker3") return Quiver::kronecker(3);
    if (name == "jordan") return Quiver::jordan();
    if (name == "a2") return Quiver::a2();
    fail(path, "unknown named quiver '" + name + "'");
  }
  const Json& vs = field(j, "vertices", path);
  if (!vs.is_array()) fail(path + ".vertices", "expected an array of names");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_string()) fail(path + ".vertices[" + std::to_string(i) + "]", "expected a string");
    vertices.push_back(vs[i].get<std::string>());
  }
  auto vertex = [&](const Json& x, const std::string& p) -> std::size_t {
    if (x.is_string()) {
      for (std::size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v] == x.get<std::string>()) return v;
      fail(p, "unknown vertex '" + x.get<std::string>() + "'");
    }
    auto v = as_int(x, p);
    if (v < 0 || static_cast<std::size_t>(v) >= vertices.size()) fail(p, "vertex index out of range");
    return static_cast<std::size_t>(v);
  };
  std::vector<Arrow> arrows;
  const Json empty = Json::array();
  const Json& as = j.contains("arrows") ? j.at("arrows") : empty;
  if (!as.is_array()) fail(path + ".arrows", "expected an array");
  for (std::size_t i = 0; i < as.size(); ++i) {
    const auto ap = path + ".arrows[" + std::to_string(i) + "]";
    const Json& id = field(as[i], "id", ap);
    if (!id.is_string()) fail(ap + ".id", "expected a string");
    arrows.push_back({id.get<std::string>(), vertex(field(as[i], "from", ap), ap + ".from"),
                      vertex(field(as[i], "to", ap), ap + ".to")});
  }
  try {
    return std::make_shared<const Quiver>(std::move(vertices), std::move(arrows));
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
}

Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows())
    arrows.push_back(Json{{"id", a.id}, {"from", q.vertices()[a.tail]}, {"to", q.vertices()[a.head]}});
  return Json{{"vertices", q.vertices()}, {"arrows", std::move(arrows)}};
}

DimVector dims_from_json(const Quiver& q, const Json& j, const std::string& path) {
  DimVector d(q.num_vertices(), 0);
  if (j.is_array()) {
    if (j.size() != q.num_vertices()) fail(path, "expected one entry per vertex");
    for (std::size_t v = 0; v < d.size(); ++v) d[v] = static_cast<int>(as_int(j[v], path + "[" + std::to_string(v) + "]"));
  } else if (j.is_object()) {
    for (const auto& [key, val] : j.items()) {
      std::size_t v = 0;
      try {
        v = q.vertex_index(key);
      } catch (const DomainError&) {
        fail(path + "." + key, "no vertex with this name");
      }
      d[v] = static_cast<int>(as_int(val, path + "." + key));
    }
  } else {
    fail(path, "expected an object keyed by vertex or an array");
  }
  for (std::size_t v = 0; v < d.size(); ++v)
    if (d[v] < 0) fail(path, "negative dimension at vertex '" + q.vertices()[v] + "'");
  return d;
}

Json dims_to_json(const Quiver& q, const DimVector& d) {
  Json out = Json::object();
  for (std::size_t v = 0; v < d.size(); ++v) out[q.vertices()[v]] = d[v];
  return out;
}

Theta theta_from_json(const Quiver& q, const Json& j, const std::string& path) {
  Theta t(q.num_vertices(), 0);
  if (j.is_array()) {
    if (j.size() != q.num_vertices()) fail(path, "expected one entry per vertex");
    for (std::size_t v = 0; v < t.size(); ++v) t[v] = as_int(j[v], path + "[" + std::to_string(v) + "]");
    return t;
  }
  if (!j.is_object()) fail(path, "expected an object keyed by vertex or an array");
  for (const auto& [key, val] : j.items()) {
    std::size_t v = 0;
    try {
      v = q.vertex_index(key);
    } catch (const DomainError&) {
      fail(path + "." + key, "no vertex with this name");
    }
    t[v] = as_int(val, path + "." + key);
  }
  return t;
}

AnyRep rep_from_json(const Json& j, const std::string& path) {
  auto ring = ring_from_json(field(j, "ring", path), path + ".ring");
  return std::visit([&](const auto& f) -> AnyRep { return rep_over(f, j, path); }, ring);
}

// ---- pairs and data

AnyPair pair_from_json(const Json& j, const std::string& path) {
  const Json& k = field(j, "kind", path);
  if (!k.is_string()) fail(path + ".kind", "expected \"finite\" or \"quadratic\"");
  try {
    if (k.get<std::string>() == "finite") {
      auto p = as_int(field(j, "p", path), path + ".p");
      auto n = as_int(field(j, "n", path), path + ".n");
      if (p < 2 || !is_prime(Integer(std::to_string(p)))) fail(path + ".p", "expected a prime");
      if (n < 1 || n > 16) fail(path + ".n", "expected a degree between 1 and 16");
      std::vector<std::uint32_t> modulus;
      if (j.contains("modulus"))
        for (std::size_t i = 0; i < j.at("modulus").size(); ++i)
          modulus.push_back(
              static_cast<std::uint32_t>(as_int(j.at("modulus")[i], path + ".modulus[" + std::to_string(i) + "]")));
      return FinitePair(static_cast<std::uint32_t>(p), static_cast<int>(n), modulus);
    }
    if (k.get<std::string>() == "quadratic") return QuadraticPair(as_int(field(j, "m", path), path + ".m"));
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
  fail(path + ".kind", "expected \"finite\" or \"quadratic\"");
}

Json to_json(const FinitePair& p) {
  return Json{{"kind", "finite"},
              {"p", p.ext().characteristic()},
              {"n", p.degree()},
              {"modulus", p.ext().modulus()}};
}

Json to_json(const QuadraticPair& p) { return Json{{"kind", "quadratic"}, {"m", p.m()}}; }

AnyDatum datum_from_json(const Json& j, const std::string& path) {
  auto pair = pair_from_json(field(j, "pair", path), path + ".pair");
  return std::visit([&](const auto& p) -> AnyDatum { return datum_from_json(p, j, path); }, pair);
}

AnyTwisted twisted_from_json(const Json& j, const std::string& path) {
  auto idx = static_cast<int>(as_int(field(j, "index", path), path + ".index"));
  auto dd = datum_from_json(j, path);
  return std::visit([&](auto& d) -> AnyTwisted { return TwistedRep<std::decay_t<decltype(d.pair)>>{d, idx}; },
                    dd);
}

// ---- reports

Json to_json(const BrauerClass& c) {
  Json out = Json::object();
  out["class"] = c.describe();
  out["trivial"] = c.is_trivial();
  out["index"] = c.index;
  if (!c.is_trivial()) {
    out["m"] = c.m;
    out["lambda"] = to_string(c.lambda);
  }
  return out;
}

Json to_json(const CensusResult& c) {
  Json out = Json::object();
  out["quiver"] = to_json(*c.quiver);
  out["dims"] = dims_to_json(*c.quiver, c.dims);
  out["theta"] = dims_to_json(*c.quiver, DimVector(c.theta.begin(), c.theta.end()));
  out["field"] = ring_to_json(c.field);
  out["q"] = c.field.order();
  out["method"] = to_string(c.method);
  out["points"] = c.points;
  out["orbits"] = c.orbits;
  out["stable"] = c.stable;
  out["geom_stable"] = c.geom_stable;
  out["stable_not_geom"] = c.stable_not_geom();
  Json reps = Json::array();
  for (const auto& r : c.stable_orbits) {
    Json m = Json::object();
    for (std::size_t a = 0; a < c.quiver->num_arrows(); ++a) m[c.quiver->arrow(a).id] = to_json(r.rep.map(a));
    Json rec{{"matrices", std::move(m)}, {"geom_stable", r.geom_stable}};
    if (r.size) rec["orbit_size"] = r.size;
    reps.push_back(std::move(rec));
  }
  out["stable_orbits"] = std::move(reps);
  return out;
}

Json to_json(const PolynomialFit& f) {
  Json out = Json::object();
  out["q"] = f.qs;
  out["counts"] = f.counts;
  Json cs = Json::array();
  for (const auto& c : f.coefficients) cs.push_back(to_string(c));
  out["coefficients"] = std::move(cs);
  out["polynomial"] = f.describe();
  out["integral"] = f.integral;
  Json rs = Json::array();
  for (const auto& r : f.residuals) rs.push_back(to_string(r));
  out["residuals"] = std::move(rs);
  return out;
}

Json to_json(const DescentCensusReport& r) {
  Json out = Json::object();
  out["q"] = r.q;
  out["n"] = r.n;
  out["ext_geom_stable"] = r.ext_geom_stable;
  out["fixed"] = r.fixed;
  out["base_geom_stable"] = r.base_geom_stable;
  Json forms = Json::array();
  for (const auto& o : r.orbits) {
    if (!o.form) continue;
    Json m = Json::object();
    for (std::size_t a = 0; a < o.form->quiver().num_arrows(); ++a)
      m[o.form->quiver().arrow(a).id] = to_json(o.form->map(a));
    forms.push_back(std::move(m));
  }
  out["forms"] = std::move(forms);
  out["violations"] = r.violations;
  out["ok"] = r.ok();
  return out;
}

Json to_json(const ClassificationRecord& r) {
  Json out = Json::object();
  if (!r.label.empty()) out["label"] = r.label;
  out["class"] = to_json(r.cls);
  out["index"] = r.index;
  out["lambda"] = r.lambda;
  if (r.finite_form) out["k_form"] = to_json(*r.finite_form);
  if (r.rational_form) out["k_form"] = to_json(*r.rational_form);
  if (r.division_form) {
    out["d_form"] = to_json(*r.division_form);
    out["d_dims"] = dims_to_json(r.division_form->quiver(), r.division_dims);
  }
  if (r.twisted) out["twisted"] = to_json(*r.twisted);
  out["notes"] = r.notes;
  return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError(what + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw DomainError(what + ": empty list");
  return out;
}

}  // namespace qf::io

namespace qf::io {

std::string quiver_hash(const Quiver& q) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : q.fingerprint()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string census_key(const Quiver& q, const DimVector& d, const Theta& theta, std::uint32_t order) {
  auto join = [](const auto& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
  };
  return quiver_hash(q) + "_d" + join(d) + "_t" + join(theta) + "_q" + std::to_string(order);
}

}  // namespace qf::io
