// quiverforms: command-line front end.

#include "qf/census/census.hpp"
#include "qf/descent/descent.hpp"
#include "qf/descent/division_form.hpp"
#include "qf/descent/type_map.hpp"
#include "qf/io/config.hpp"
#include "qf/io/json_io.hpp"
#include "qf/quiver/certificate.hpp"
#include "qf/quiver/hom.hpp"
#include "qf/quiver/stability.hpp"
#include "qf/twisted/twisted.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

using namespace qf;
using io::Json;

namespace {

struct Common {
  std::optional<std::string> config_path;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
};

struct Context {
  io::JobConfig cfg;
  bool json = false;
  std::mt19937_64 rng;
};

Context make_context(const Common& c) {
  Context ctx{io::load_config(c.config_path), false, {}};
  if (c.format) ctx.cfg.format = *c.format;
  if (c.seed) ctx.cfg.seed = *c.seed;
  ctx.json = ctx.cfg.format == "json";
  ctx.rng.seed(ctx.cfg.seed);
  return ctx;
}

Json envelope(const std::string& command, const Context& ctx) {
  Json out = Json::object();
  out["command"] = command;
  out["config"] = io::to_json(ctx.cfg);
  out["seed"] = ctx.cfg.seed;
  return out;
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << io::dump(j);
}

Theta theta_for(const Quiver& q, const std::optional<std::string>& text) {
  if (!text) return Theta(q.num_vertices(), 0);
  auto xs = io::parse_int_list(*text, "--theta");
  if (xs.size() != q.num_vertices())
    throw DomainError("--theta needs " + std::to_string(q.num_vertices()) + " entries, got " +
                      std::to_string(xs.size()));
  return Theta(xs.begin(), xs.end());
}

std::string slope_text(const DimVector& e, const Theta& theta) { return to_string(slope(e, theta)); }

std::string compact(const Json& j) { return j.dump(); }

// ---- stability and hn

template <class F>
std::string witness_text(const StabilityVerdict<F>& v, const Theta& theta) {
  if (!v.witness) return "";
  return "; witness e=" + to_string(v.witness->dims) + ", slope " + slope_text(v.witness->dims, theta);
}

int cmd_stability(const std::string& file, const std::optional<std::string>& theta_text, bool with_hn,
                  const Common& common) {
  auto ctx = make_context(common);
  auto rep = io::rep_from_json(io::read_file(file));
  Json out = envelope("stability", ctx);
  std::string line;
  std::visit(
      [&](const auto& w) {
        using F = std::decay_t<decltype(w.field())>;
        const Theta theta = theta_for(w.quiver(), theta_text);
        out["theta"] = io::dims_to_json(w.quiver(), DimVector(theta.begin(), theta.end()));
        if constexpr (std::is_same_v<F, FiniteField>) {
          auto v = stability_verdict(w, theta, ctx.cfg.stability());
          const auto e = end_dim(w);
          const bool geom = v.verdict == Verdict::Stable && e == 1;
          out["verdict"] = io::to_json(v, w.quiver());
          out["end_dim"] = e;
          out["geometrically_stable"] = geom;
          line = to_string(v.verdict) + witness_text(v, theta);
          if (v.verdict == Verdict::Stable)
            line += std::string(geom ? "; geometrically stable" : "; not geometrically stable") + " (End dim " +
                    std::to_string(e) + ")";
          if (with_hn) {
            auto h = hn_filtration(w, theta, ctx.cfg.stability());
            out["hn"] = io::to_json(h, w.quiver());
            for (std::size_t i = 0; i < h.steps.size(); ++i)
              line += "\nHN W^" + std::to_string(i + 1) + " e=" + to_string(h.steps[i].dims) + " slope " +
                      to_string(mpq_class(h.slopes[i]));
          }
        } else {
          if (with_hn) throw DomainError("HN filtrations are computed over finite fields only");
          StabilityVerdict<std::conditional_t<std::is_same_v<F, RationalField>, RationalField, QuadraticField>> v;
          if constexpr (std::is_same_v<F, QuaternionAlgebra>) {
            v = drep_is_geom_stable(w, theta, ctx.cfg.certificate());
            out["verdict"] = io::to_json(v, w.quiver());
          } else {
            v = geom_stability_certificate(w, theta, ctx.cfg.certificate());
            out["verdict"] = io::to_json(v, w.quiver());
          }
          out["geometrically_stable"] = v.verdict == Verdict::Stable;
          line = to_string(v.verdict) + witness_text(v, theta);
          if (v.verdict == Verdict::Stable)
            line += "; geometrically stable (certificate prime " + std::to_string(*v.certificate_prime) + ")";
          else if (!v.note.empty())
            line += " (" + v.note + ")";
        }
      },
      rep);
  if (ctx.json)
    std::cout << io::dump(out);
  else
    std::cout << line << "\n";
  return 0;
}

int cmd_hn(const std::string& file, const std::optional<std::string>& theta_text, const Common& common) {
  auto ctx = make_context(common);
  auto w = io::rep_as<FiniteField>(io::read_file(file));
  const Theta theta = theta_for(w.quiver(), theta_text);
  auto h = hn_filtration(w, theta, ctx.cfg.stability());
  Json out = envelope("hn", ctx);
  out["theta"] = io::dims_to_json(w.quiver(), DimVector(theta.begin(), theta.end()));
  out["hn"] = io::to_json(h, w.quiver());
  if (ctx.json) {
    std::cout << io::dump(out);
    return 0;
  }
  std::cout << std::left << std::setw(6) << "step" << std::setw(16) << "e" << "slope\n";
  for (std::size_t i = 0; i < h.steps.size(); ++i)
    std::cout << std::setw(6) << ("W^" + std::to_string(i + 1)) << std::setw(16) << to_string(h.steps[i].dims)
              << to_string(mpq_class(h.slopes[i])) << "\n";
  return 0;
}

// ---- typemap, descend, divform

template <class Pair>
void describe_datum(const DescentDatum<Pair>& dd, Json& out, std::ostream& text) {
  out["u"] = io::tuple_to_json(dd.rep.quiver(), dd.u);
  out["lambda"] = io::elem_to_json(dd.pair.base(), dd.lambda);
  text << "u: " << compact(out["u"]) << "\nlambda: " << compact(out["lambda"]) << "\n";
}

template <class Pair>
int run_typemap(const ExtRep<Pair>& w, const Pair& pair, const Theta& theta, Context& ctx,
                const std::optional<std::string>& descend_out, const std::optional<std::string>& datum_out) {
  TypeMapOptions opts{theta, ctx.cfg.certificate(), ctx.cfg.iso(), ctx.cfg.seed};
  Json out = envelope("typemap", ctx);
  out["pair"] = io::to_json(pair);
  std::ostringstream text;
  auto tm = type_map(w, pair, opts, ctx.rng);
  if (!tm) {
    out["status"] = "not-fixed";
    out["message"] = "orbit not Galois-fixed";
    text << "orbit not Galois-fixed\n";
  } else {
    out["status"] = "fixed";
    out["evidence"] = tm->log;
    out["class"] = io::to_json(tm->cls);
    text << "Galois-fixed (" << tm->log.front() << ")\n";
    describe_datum(tm->datum, out, text);
    text << "class " << tm->cls.describe();
    if (datum_out) write_file(*datum_out, io::to_json(tm->datum));
    if (descend_out) {
      if (tm->cls.is_trivial()) {
        auto h = hilbert90_descend(tm->datum, ctx.rng, 64, ctx.cfg.seed);
        write_file(*descend_out, io::to_json(h.form));
        out["form"] = {{"kind", "k-form"}, {"path", *descend_out}};
        text << "; " << pair.base().name() << "-form written";
      } else {
        if constexpr (std::is_same_v<Pair, QuadraticPair>) {
          auto d = division_form(tm->datum, ctx.rng, 256, ctx.cfg.seed);
          write_file(*descend_out, io::to_json(d.form));
          out["form"] = {{"kind", "d-form"}, {"path", *descend_out}, {"d_dims", io::dims_to_json(d.form.quiver(), d.form.dims())}};
          text << "; D-form written";
        } else {
          throw InternalInvariantError("nontrivial class over a finite field");
        }
      }
    }
    text << "\n";
  }
  std::cout << (ctx.json ? io::dump(out) : text.str());
  return 0;
}

int cmd_typemap(const std::string& file, const std::optional<std::string>& theta_text,
                const std::optional<std::string>& pair_file, const std::optional<std::string>& descend_out,
                const std::optional<std::string>& datum_out, const Common& common) {
  auto ctx = make_context(common);
  auto rep = io::rep_from_json(io::read_file(file));
  std::optional<io::AnyPair> pair;
  if (pair_file) pair = io::pair_from_json(io::read_file(*pair_file), *pair_file);
  if (auto* w = std::get_if<Representation<QuadraticField>>(&rep)) {
    QuadraticPair p(w->field().m());
    if (pair) {
      auto* given = std::get_if<QuadraticPair>(&*pair);
      if (!given || given->m() != p.m()) throw DomainError("pair does not match the ring of the representation");
    }
    return run_typemap(*w, p, theta_for(w->quiver(), theta_text), ctx, descend_out, datum_out);
  }
  if (auto* w = std::get_if<Representation<FiniteField>>(&rep)) {
    FinitePair p(FiniteField::prime(w->field().characteristic()), w->field());
    if (pair) {
      auto* given = std::get_if<FinitePair>(&*pair);
      if (!given || !(given->ext() == w->field())) throw DomainError("pair does not match the ring of the representation");
      p = *given;
    }
    return run_typemap(*w, p, theta_for(w->quiver(), theta_text), ctx, descend_out, datum_out);
  }
  throw DomainError("typemap needs a representation over Q(sqrt m) or a finite extension field");
}

int cmd_descend(const std::string& file, const std::optional<std::string>& out_path, const Common& common) {
  auto ctx = make_context(common);
  auto any = io::datum_from_json(io::read_file(file));
  Json out = envelope("descend", ctx);
  std::ostringstream text;
  std::visit(
      [&](const auto& dd) {
        auto problems = datum_problems(dd);
        if (!problems.empty()) throw DomainError("invalid descent datum: " + problems.front());
        auto h = hilbert90_descend(dd, ctx.rng, 64, ctx.cfg.seed);
        out["form"] = io::to_json(h.form);
        out["g"] = io::tuple_to_json(dd.rep.quiver(), h.g);
        out["attempts"] = h.attempts;
        text << dd.pair.base().name() << "-form after " << h.attempts << " attempt(s)\n";
        for (std::size_t a = 0; a < h.form.quiver().num_arrows(); ++a)
          text << h.form.quiver().arrow(a).id << ": " << compact(io::to_json(h.form.map(a))) << "\n";
        if (out_path) write_file(*out_path, io::to_json(h.form));
      },
      any);
  std::cout << (ctx.json ? io::dump(out) : text.str());
  return 0;
}

int cmd_divform(const std::string& file, const std::optional<std::string>& out_path, const Common& common) {
  auto ctx = make_context(common);
  auto any = io::datum_from_json(io::read_file(file));
  auto* dd = std::get_if<DescentDatum<QuadraticPair>>(&any);
  if (!dd) throw DomainError("divform needs a datum over a quadratic pair");
  auto problems = datum_problems(*dd);
  if (!problems.empty()) throw DomainError("invalid descent datum: " + problems.front());
  auto d = division_form(*dd, ctx.rng, 256, ctx.cfg.seed);
  Json out = envelope("divform", ctx);
  out["class"] = io::to_json(type_class(*dd));
  out["d_dims"] = io::dims_to_json(d.form.quiver(), d.form.dims());
  out["form"] = io::to_json(d.form);
  out["h"] = io::tuple_to_json(dd->rep.quiver(), d.h);
  if (out_path) write_file(*out_path, io::to_json(d.form));
  if (ctx.json) {
    std::cout << io::dump(out);
    return 0;
  }
  std::cout << "D = " << type_class(*dd).describe() << ", d' = " << to_string(d.form.dims()) << "\n";
  for (std::size_t a = 0; a < d.form.quiver().num_arrows(); ++a)
    std::cout << d.form.quiver().arrow(a).id << ": " << compact(io::to_json(d.form.map(a))) << "\n";
  return 0;
}

int cmd_twisted_validate(const std::string& file, const Common& common) {
  auto ctx = make_context(common);
  auto any = io::twisted_from_json(io::read_file(file));
  auto problems = std::visit([](const auto& t) { return validate_twisted(t); }, any);
  Json out = envelope("twisted-validate", ctx);
  out["valid"] = problems.empty();
  out["problems"] = problems;
  if (ctx.json) {
    std::cout << io::dump(out);
    return 0;
  }
  if (problems.empty()) std::cout << "valid twisted representation\n";
  for (const auto& p : problems) std::cout << "invalid: " << p << "\n";
  return 0;
}

// ---- census

QuiverPtr quiver_arg(const std::string& text) {
  if (text == "kronecker2" || text == "kronecker3" || text == "jordan" || text == "a2")
    return io::quiver_from_json(Json(text));
  if (text.rfind("discrete", 0) == 0) {
    try {
      return Quiver::discrete(std::stoi(text.substr(8)));
    } catch (const std::exception&) {
      throw DomainError("bad quiver name '" + text + "'");
    }
  }
  auto j = io::read_file(text);
  return io::quiver_from_json(j.contains("quiver") ? j.at("quiver") : j);
}

int cmd_census(const std::string& quiver_text, const std::string& dims_text, const std::optional<std::string>& theta_text,
               const std::string& q_text, std::optional<int> verify_n, bool serial, const Common& common) {
  auto ctx = make_context(common);
  auto quiver = quiver_arg(quiver_text);
  auto dl = io::parse_int_list(dims_text, "--dims");
  if (dl.size() != quiver->num_vertices()) throw DomainError("--dims needs one entry per vertex");
  DimVector dims(dl.begin(), dl.end());
  const Theta theta = theta_for(*quiver, theta_text);
  std::vector<std::uint32_t> qs;
  for (auto v : io::parse_int_list(q_text, "--q")) {
    if (v < 2 || v > 65536) throw DomainError("--q: " + std::to_string(v) + " is out of range");
    qs.push_back(static_cast<std::uint32_t>(v));
  }
  CensusConfig cc = ctx.cfg.census();
  cc.parallel = !serial;

  Json out = envelope("census", ctx);
  out["quiver"] = io::to_json(*quiver);
  out["dims"] = io::dims_to_json(*quiver, dims);
  out["theta"] = io::dims_to_json(*quiver, DimVector(theta.begin(), theta.end()));
  Json rows = Json::array();
  std::vector<std::uint64_t> counts;
  std::ostringstream text;
  text << std::left << std::setw(6) << "q" << std::setw(20) << "method" << std::setw(10) << "orbits" << std::setw(10)
       << "stable" << std::setw(13) << "geom_stable" << "stable_not_geom\n";
  for (auto q : qs) {
    auto r = orbit_census(quiver, dims, theta, field_of_order(q), cc);
    counts.push_back(r.geom_stable);
    rows.push_back({{"q", q},
                    {"method", to_string(r.method)},
                    {"orbits", r.orbits},
                    {"stable", r.stable},
                    {"geom_stable", r.geom_stable},
                    {"stable_not_geom", r.stable_not_geom()}});
    text << std::setw(6) << q << std::setw(20) << to_string(r.method) << std::setw(10) << r.orbits << std::setw(10)
         << r.stable << std::setw(13) << r.geom_stable << r.stable_not_geom() << "\n";
  }
  out["counts"] = std::move(rows);
  auto fit = fit_polynomial(qs, counts);
  out["fit"] = io::to_json(fit);
  text << "fit: " << fit.describe() << (fit.integral ? "" : " (non-integral)") << "; residuals";
  for (const auto& r : fit.residuals) text << " " << to_string(r);
  text << "\n";

  int rc = 0;
  if (verify_n) {
    Json reports = Json::array();
    for (auto q : qs) {
      if (!is_prime(Integer(q))) {
        text << "descent over F_" << q << ": skipped (q is not prime)\n";
        continue;
      }
      auto rep = verify_descent_census(quiver, dims, theta, q, *verify_n, cc, ctx.cfg.seed);
      Json rj = io::to_json(rep);
      reports.push_back(std::move(rj));
      text << "descent F_" << q << " in F_" << q << "^" << *verify_n << ": " << rep.fixed << " fixed of "
           << rep.ext_geom_stable << ", " << rep.base_geom_stable << " over F_" << q << ", "
           << (rep.ok() ? "all descend" : std::to_string(rep.violations.size()) + " violation(s)") << "\n";
      for (const auto& v : rep.violations) text << "  violation: " << v << "\n";
      if (!rep.ok()) rc = 5;
    }
    out["descent"] = std::move(reports);
  }
  std::cout << (ctx.json ? io::dump(out) : text.str());
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quiverforms: stability, descent and forms of quiver representations"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config_path, std::string("configuration file (default: $") + io::kConfigEnv + ")");
    sub->add_option("--format", common.format, "output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--seed", common.seed, "random seed");
  };

  std::string file;
  std::optional<std::string> theta, pair_file, descend_out, datum_out, out_path;
  bool with_hn = false;

  auto* st = app.add_subcommand("stability", "stability verdict and geometric stability");
  st->add_option("rep", file, "representation JSON")->required();
  st->add_option("--theta", theta, "stability parameter, e.g. 1,-1");
  st->add_flag("--hn", with_hn, "also print the HN filtration");
  add_common(st);

  auto* hn = app.add_subcommand("hn", "Harder-Narasimhan filtration over a finite field");
  hn->add_option("rep", file, "representation JSON")->required();
  hn->add_option("--theta", theta, "stability parameter");
  add_common(hn);

  auto* tm = app.add_subcommand("typemap", "Galois-fixedness, cocycle and Brauer class");
  tm->add_option("rep", file, "representation JSON over L")->required();
  tm->add_option("--theta", theta, "stability parameter");
  tm->add_option("--pair", pair_file, "Galois pair JSON (default: from the ring)");
  tm->add_option("--descend", descend_out, "write the k-form or D-form here");
  tm->add_option("--datum-out", datum_out, "write the descent datum here");
  add_common(tm);

  auto* de = app.add_subcommand("descend", "Hilbert 90 descent of a datum with trivial class");
  de->add_option("datum", file, "descent datum JSON")->required();
  de->add_option("--out", out_path, "write the form here");
  add_common(de);

  auto* dv = app.add_subcommand("divform", "division-algebra form of a datum with nontrivial class");
  dv->add_option("datum", file, "descent datum JSON")->required();
  dv->add_option("--out", out_path, "write the D-representation here");
  add_common(dv);

  auto* tv = app.add_subcommand("twisted-validate", "check a twisted representation");
  tv->add_option("twisted", file, "twisted representation JSON")->required();
  add_common(tv);

  std::string quiver_text, dims_text, q_text;
  std::optional<int> verify_n;
  bool serial = false;
  auto* ce = app.add_subcommand("census", "geometrically stable orbit counts over finite fields");
  ce->add_option("--quiver", quiver_text, "kronecker2 | kronecker3 | jordan | a2 | discreteN | quiver JSON file")
      ->required();
  ce->add_option("--dims", dims_text, "dimension vector, e.g. 1,1")->required();
  ce->add_option("--theta", theta, "stability parameter");
  ce->add_option("--q", q_text, "field orders, e.g. 2,3,5")->required();
  ce->add_option("--verify-descent", verify_n, "verify descent from F_{q^n} for prime q")->check(CLI::PositiveNumber);
  ce->add_flag("--serial", serial, "use the serial reference kernels");
  add_common(ce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ErrorClass::Argument);
  }

  try {
    if (*st) return cmd_stability(file, theta, with_hn, common);
    if (*hn) return cmd_hn(file, theta, common);
    if (*tm) return cmd_typemap(file, theta, pair_file, descend_out, datum_out, common);
    if (*de) return cmd_descend(file, out_path, common);
    if (*dv) return cmd_divform(file, out_path, common);
    if (*tv) return cmd_twisted_validate(file, common);
    if (*ce) return cmd_census(quiver_text, dims_text, theta, q_text, verify_n, serial, common);
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << " (estimate " << e.estimate() << ")\n";
    return e.exit_code();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(ErrorClass::Internal);
  }
  return static_cast<int>(ErrorClass::Internal);
}
