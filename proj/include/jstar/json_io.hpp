#pragma once

// JSON encoding of exact values, operators and Jordan algebra tables.
// Rationals are strings ("3", "-1/2") so no precision is ever lost.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "jstar/jordan.hpp"
#include "jstar/kkt.hpp"
#include "jstar/weyl.hpp"

namespace jstar {

using nlohmann::json;

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("rational must be a string or an integer: " + j.dump());
  return Rational::parse(j.get<std::string>());
}

/// [{"nu": k, "re": "p/q", "im": "p/q"}, ...] in increasing powers of nu.
inline json to_json(const Scalar& s) {
  json arr = json::array();
  for (const auto& [k, c] : s.terms()) arr.push_back({{"nu", k}, {"re", c.re().str()}, {"im", c.im().str()}});
  return arr;
}

inline Scalar scalar_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("scalar must be an array of terms");
  Scalar s;
  for (const auto& t : j)
    s.add_term(t.at("nu").get<int>(), GaussianRational(rational_from_json(t.at("re")), rational_from_json(t.at("im"))));
  return s;
}

inline json exponents_json(const Exponents& e) {
  json arr = json::array();
  for (auto x : e) arr.push_back(static_cast<int>(x));
  return arr;
}

inline Exponents exponents_from_json(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw ParseError("exponent vector has the wrong length");
  Exponents e;
  for (const auto& x : j) {
    const int v = x.get<int>();
    if (v < 0 || v > 255) throw ParseError("exponent out of range");
    e.push_back(static_cast<std::uint8_t>(v));
  }
  return e;
}

inline json to_json(const Poly& p) {
  json j;
  j["vars"] = p.varset() ? json(p.varset()->names()) : json::array();
  j["terms"] = json::array();
  for (const auto& [e, c] : p.terms()) j["terms"].push_back({{"exponents", exponents_json(e)}, {"coefficient", to_json(c)}});
  return j;
}

inline Poly poly_from_json(const json& j) {
  const auto names = j.at("vars").get<std::vector<std::string>>();
  Poly p = names.empty() ? Poly() : Poly(make_varset(names));
  for (const auto& t : j.at("terms")) p.add_term(exponents_from_json(t.at("exponents"), names.size()), scalar_from_json(t.at("coefficient")));
  return p;
}

inline json to_json(const WeylOperator& D) {
  json j;
  j["vars"] = D.varset() ? json(D.varset()->names()) : json::array();
  j["terms"] = json::array();
  for (const auto& [beta, C] : D.terms())
    for (const auto& [alpha, c] : C.terms())
      j["terms"].push_back({{"mult_exponents", exponents_json(alpha)},
                            {"deriv_exponents", exponents_json(beta)},
                            {"coefficient", to_json(c)}});
  return j;
}

inline WeylOperator weyl_from_json(const json& j) {
  const auto names = j.at("vars").get<std::vector<std::string>>();
  const VarSetPtr vs = make_varset(names);
  WeylOperator D(vs);
  for (const auto& t : j.at("terms")) {
    const Exponents alpha = exponents_from_json(t.at("mult_exponents"), names.size());
    const Exponents beta = exponents_from_json(t.at("deriv_exponents"), names.size());
    D.add(beta, Poly::monomial(vs, alpha, scalar_from_json(t.at("coefficient"))));
  }
  return D;
}

// ---------------------------------------------------------------------------
// Jordan algebra tables: {name, dim, rank, unit, structure[a][b][c], basis_names?}

inline json to_json(const JordanAlgebra& A) {
  json j;
  j["name"] = A.name;
  j["dim"] = A.dim;
  j["rank"] = A.rank;
  j["basis_names"] = A.basis_names;
  json unit = json::array();
  for (const auto& u : A.unit) unit.push_back(to_json(u));
  j["unit"] = unit;
  json s = json::array();
  for (const auto& row : A.structure) {
    json r = json::array();
    for (const auto& col : row) {
      json c = json::array();
      for (const auto& x : col) c.push_back(to_json(x));
      r.push_back(c);
    }
    s.push_back(r);
  }
  j["structure"] = s;
  return j;
}

/// Parses a table; does not validate the axioms.
inline JordanAlgebra jordan_from_json(const json& j) {
  try {
    JordanAlgebra A;
    A.name = j.value("name", std::string("custom"));
    A.dim = j.at("dim").get<std::size_t>();
    A.rank = j.at("rank").get<std::size_t>();
    if (j.contains("basis_names")) A.basis_names = j.at("basis_names").get<std::vector<std::string>>();
    for (const auto& u : j.at("unit")) A.unit.push_back(rational_from_json(u));
    for (const auto& row : j.at("structure")) {
      std::vector<std::vector<Rational>> r;
      for (const auto& col : row) {
        std::vector<Rational> c;
        for (const auto& x : col) c.push_back(rational_from_json(x));
        r.push_back(std::move(c));
      }
      A.structure.push_back(std::move(r));
    }
    return A;
  } catch (const json::exception& e) {
    throw ParseError(std::string("algebra table: ") + e.what());
  }
}

inline JordanAlgebra jordan_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return jordan_from_json(j);
}

// ---------------------------------------------------------------------------
// Lie algebra goldens

inline json bracket_table_json(const GradedLieAlgebra& g) {
  json j;
  json names = json::array();
  for (std::size_t i = 0; i < g.dim; ++i) names.push_back(g.basis_name(i));
  j["basis"] = names;
  json entries = json::array();
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t k = i + 1; k < g.dim; ++k) {
      const auto& s = g.structure(i, k);
      if (s.empty()) continue;
      json terms = json::object();
      for (const auto& [m, c] : s) terms[g.basis_name(m)] = c.str();
      entries.push_back({{"a", g.basis_name(i)}, {"b", g.basis_name(k)}, {"bracket", terms}});
    }
  j["brackets"] = entries;
  json kill = json::array();
  for (std::size_t i = 0; i < g.dim; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < g.dim; ++k) row.push_back(g.killing(i, k).str());
    kill.push_back(row);
  }
  j["killing"] = kill;
  return j;
}

}  // namespace jstar
