#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "darboux/cfrac.hpp"
#include "darboux/darboux.hpp"
#include "darboux/errors.hpp"
#include "darboux/jacobi.hpp"
#include "darboux/moments.hpp"
#include "darboux/polynomial.hpp"
#include "darboux/rational.hpp"
#include "darboux/verify.hpp"

namespace darboux {

using json = nlohmann::json;

// Rationals travel as strings "p/q" (or "p" when q = 1), sign on the
// numerator. Complex values as {"re": "...", "im": "..."}.

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw ParseFailure("rational must be a string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

inline json to_json(const ComplexRational& z) {
  return json{{"re", z.re.str()}, {"im", z.im.str()}};
}

inline ComplexRational complex_from_json(const json& j) {
  if (j.is_string()) return ComplexRational(Rational::parse(j.get<std::string>()));
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw ParseFailure("complex value must be {\"re\",\"im\"}, got " + j.dump());
  return {rational_from_json(j.at("re")), rational_from_json(j.at("im"))};
}

inline json to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const Rational& r : v) out.push_back(r.str());
  return out;
}

inline std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) throw ParseFailure("expected an array of rationals, got " + j.dump());
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const json& e : j) out.push_back(rational_from_json(e));
  return out;
}

// Polynomials: coefficient arrays of rational strings, ascending degree.

inline json to_json(const RationalPoly& p) { return to_json(p.coeffs()); }

inline RationalPoly poly_from_json(const json& j) { return RationalPoly(rationals_from_json(j)); }

inline json to_json(const ComplexPoly& p) {
  json out = json::array();
  for (const ComplexRational& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

// MeasureSpec:
//   {"type":"discrete","atoms":[["1","1/2"],["4","1/2"]]}
//   {"type":"laguerre","alpha":"-1/2"}
//   {"type":"moments","values":["1","5/2","17/2"]}

inline json to_json(const MeasureSpec& spec) {
  if (const auto* d = std::get_if<DiscreteMeasure>(&spec)) {
    json atoms = json::array();
    for (const Atom& a : d->atoms) atoms.push_back(json::array({a.point.str(), a.weight.str()}));
    return json{{"type", "discrete"}, {"atoms", std::move(atoms)}};
  }
  if (const auto* lag = std::get_if<LaguerreMeasure>(&spec))
    return json{{"type", "laguerre"}, {"alpha", lag->alpha.str()}};
  return json{{"type", "moments"}, {"values", to_json(std::get<RawMoments>(spec).values)}};
}

inline MeasureSpec measure_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw ParseFailure("measure spec must be an object with a \"type\" field");
  const std::string type = j.at("type").get<std::string>();
  if (type == "discrete") {
    if (!j.contains("atoms") || !j.at("atoms").is_array())
      throw ParseFailure("discrete spec needs an \"atoms\" array");
    DiscreteMeasure m;
    for (const json& a : j.at("atoms")) {
      if (!a.is_array() || a.size() != 2)
        throw ParseFailure("each atom must be a [point, weight] pair");
      m.atoms.push_back({rational_from_json(a.at(0)), rational_from_json(a.at(1))});
    }
    detail::validate(m);
    return m;
  }
  if (type == "laguerre") {
    if (!j.contains("alpha")) throw ParseFailure("laguerre spec needs \"alpha\"");
    LaguerreMeasure m{rational_from_json(j.at("alpha"))};
    detail::validate(m);
    return m;
  }
  if (type == "moments") {
    if (!j.contains("values")) throw ParseFailure("moments spec needs \"values\"");
    RawMoments m{rationals_from_json(j.at("values"))};
    detail::validate(m);
    return m;
  }
  throw ParseFailure("unknown measure type \"" + type + "\"");
}

// MonicJacobi: {"b":[...],"c":[...]}

inline json to_json(const MonicJacobi& J) {
  return json{{"b", to_json(J.b)}, {"c", to_json(J.c)}};
}

inline MonicJacobi jacobi_from_json(const json& j) {
  if (!j.is_object() || !(j.contains("b") || j.contains("diag")) || !j.contains("c"))
    throw ParseFailure("jacobi matrix needs \"b\" (or \"diag\") and \"c\" arrays");
  const json& diag = j.contains("b") ? j.at("b") : j.at("diag");
  MonicJacobi J{rationals_from_json(diag), rationals_from_json(j.at("c"))};
  if (!J.b.empty() && J.c.size() + 1 != J.b.size())
    throw ParseFailure("chain length must be one less than the diagonal length");
  return J;
}

// DenseMatrix: {"n": 4, "entries": [...]} row-major.

inline json to_json(const RationalMatrix& m) {
  json entries = json::array();
  for (const Rational& e : m.entries()) entries.push_back(e.str());
  return json{{"n", m.order()}, {"entries", std::move(entries)}};
}

// LU factors and shifts.

inline json to_json(const Shift& s) { return s.str(); }

inline Shift shift_from_string(const std::string& text) {
  if (text == "none" || text.empty()) return Shift::none();
  if (text.rfind("i:", 0) == 0) return Shift::imaginary(Rational::parse(text.substr(2)));
  if (text.front() == 'i') return Shift::imaginary(Rational::parse(text.substr(1)));
  return Shift::real(Rational::parse(text));
}

inline json to_json(const LUFactors& f) {
  return json{{"u", to_json(f.u)}, {"l", to_json(f.l)}, {"shift", f.shift.str()}};
}

// DarbouxResult: {"matrix":{...},"polys":[...],"provenance":"..."}

inline json to_json(const DarbouxResult& r) {
  json polys = json::array();
  for (const RationalPoly& p : r.polys) polys.push_back(to_json(p));
  return json{{"matrix", to_json(r.matrix)},
              {"polys", std::move(polys)},
              {"provenance", provenance_name(r.provenance)}};
}

inline json to_json(const ComplexDarbouxResult& r) {
  json diag = json::array();
  for (const ComplexRational& z : r.diag) diag.push_back(to_json(z));
  json polys = json::array();
  for (const ComplexPoly& p : r.polys) polys.push_back(to_json(p));
  return json{{"matrix", json{{"b", std::move(diag)}, {"c", to_json(r.chain)}}},
              {"polys", std::move(polys)},
              {"provenance", provenance_name(r.provenance)}};
}

// ContinuedFraction: {"kind":"J","b":[...],"c":[...]} or {"kind":"S","d":[...]}

inline json to_json(const ContinuedFraction& cf) {
  switch (cf.kind) {
    case ContinuedFraction::Kind::S:
      return json{{"kind", "S"}, {"d", to_json(cf.d)}, {"mass", cf.mass.str()}};
    case ContinuedFraction::Kind::P:
      return json{{"kind", "P"}, {"b", to_json(cf.b)}, {"c", to_json(cf.c)},
                  {"mass", cf.mass.str()}};
    case ContinuedFraction::Kind::J:
    default:
      return json{{"kind", "J"}, {"b", to_json(cf.b)}, {"c", to_json(cf.c)},
                  {"mass", cf.mass.str()}};
  }
}

inline ContinuedFraction cfrac_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseFailure("continued fraction needs \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  ContinuedFraction cf;
  if (j.contains("mass")) cf.mass = rational_from_json(j.at("mass"));
  if (kind == "S") {
    cf.kind = ContinuedFraction::Kind::S;
    cf.d = rationals_from_json(j.at("d"));
    return cf;
  }
  if (kind == "J" || kind == "P") {
    cf.kind = kind == "J" ? ContinuedFraction::Kind::J : ContinuedFraction::Kind::P;
    cf.b = rationals_from_json(j.at("b"));
    cf.c = rationals_from_json(j.at("c"));
    return cf;
  }
  throw ParseFailure("unknown continued-fraction kind \"" + kind + "\"");
}

// VerificationReport.

inline json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const CheckResult& c : r.checks) {
    json e{{"name", c.name}, {"status", status_name(c.status)}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  return json{{"input", r.fingerprint},
              {"depth_requested", r.depth_requested},
              {"depth_effective", r.depth_effective},
              {"checks", std::move(checks)}};
}

inline VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.fingerprint = j.at("input").get<std::string>();
  r.depth_requested = j.at("depth_requested").get<int>();
  r.depth_effective = j.at("depth_effective").get<int>();
  for (const json& e : j.at("checks")) {
    CheckResult c;
    c.name = e.at("name").get<std::string>();
    const std::string st = e.at("status").get<std::string>();
    c.status = st == "passed"   ? CheckStatus::passed
               : st == "failed" ? CheckStatus::failed
                                : CheckStatus::skipped;
    if (e.contains("witness")) c.witness = e.at("witness").get<std::string>();
    r.checks.push_back(std::move(c));
  }
  return r;
}

}  // namespace darboux
