#pragma once

// End-to-end verification run over one Jordan algebra and base point.

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jstar/hds.hpp"
#include "jstar/json_io.hpp"

namespace jstar {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"jordan", "lie", "chart", "star", "fourier", "theorem"};
  return names;
}

struct RunConfig {
  std::string algebra = "rank1";  // rank1 | spin:k | sym:p | file:path
  Rational mu{1};
  std::set<std::string> suites;   // empty means all
  std::string format = "text";    // text | json
  std::string out;                // empty: stdout
};

inline std::set<std::string> parse_suites(const std::string& list) {
  std::set<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      out.insert(suite_names().begin(), suite_names().end());
      continue;
    }
    if (std::find(suite_names().begin(), suite_names().end(), item) == suite_names().end())
      throw ParseError("unknown suite '" + item + "'");
    out.insert(item);
  }
  return out;
}

inline JordanAlgebra algebra_from_selector(const std::string& sel) {
  auto number = [&](const std::string& text) {
    try {
      std::size_t used = 0;
      const long v = std::stol(text, &used);
      if (used != text.size()) throw ParseError("bad number in '" + sel + "'");
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("bad number in '" + sel + "'");
    }
  };
  if (sel == "rank1") return make_rank_one();
  if (sel.rfind("spin:", 0) == 0) return make_spin_factor(number(sel.substr(5)));
  if (sel.rfind("sym:", 0) == 0) return make_sym_matrices(number(sel.substr(4)));
  if (sel.rfind("file:", 0) == 0) return jordan_from_file(sel.substr(5));
  throw ParseError("unknown algebra '" + sel + "' (expected rank1, spin:k, sym:p or file:path)");
}

inline void validate_config(const RunConfig& c) {
  if (c.mu.is_zero()) throw InvalidDimension("mu must be nonzero");
  if (c.format != "text" && c.format != "json") throw ParseError("format must be text or json");
}

// ---------------------------------------------------------------------------
// Construction cache keyed by the structure-constant table and mu

class ConstructionCache {
public:
  static ConstructionCache& instance() {
    static ConstructionCache cache;
    return cache;
  }

  std::shared_ptr<const GradedLieAlgebra> lie(const JordanAlgebra& A, const Rational& mu) {
    const std::string key = to_json(A).dump() + "|" + mu.str();
    std::lock_guard lock(mutex_);
    auto it = lie_.find(key);
    if (it != lie_.end()) return it->second;
    auto g = std::make_shared<const GradedLieAlgebra>(build_kkt(A, mu));
    lie_.emplace(key, g);
    return g;
  }

  void clear() {
    std::lock_guard lock(mutex_);
    lie_.clear();
  }

private:
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const GradedLieAlgebra>> lie_;
};

// ---------------------------------------------------------------------------
// Report

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::vector<Check> checks;
  double seconds = 0;
};

struct VerificationReport {
  std::string algebra;
  std::string mu;
  std::vector<SuiteResult> suites;
  std::map<std::string, std::string> constants;  // sorted keys
  std::string error;                             // construction failure, if any

  bool passed() const {
    if (!error.empty()) return false;
    for (const auto& s : suites)
      if (!s.passed) return false;
    return true;
  }
};

inline json to_json(const VerificationReport& r) {
  json j;
  j["algebra"] = r.algebra;
  j["mu"] = r.mu;
  j["passed"] = r.passed();
  if (!r.error.empty()) j["error"] = r.error;
  j["constants"] = r.constants;
  json suites = json::array();
  for (const auto& s : r.suites) {
    json checks = json::array();
    for (const auto& c : s.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    suites.push_back({{"name", s.name}, {"passed", s.passed}, {"seconds", s.seconds}, {"checks", checks}});
  }
  j["suites"] = suites;
  return j;
}

inline VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.algebra = j.at("algebra").get<std::string>();
  r.mu = j.at("mu").get<std::string>();
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  r.constants = j.at("constants").get<std::map<std::string, std::string>>();
  for (const auto& s : j.at("suites")) {
    SuiteResult sr;
    sr.name = s.at("name").get<std::string>();
    sr.passed = s.at("passed").get<bool>();
    sr.seconds = s.at("seconds").get<double>();
    for (const auto& c : s.at("checks"))
      sr.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
    r.suites.push_back(std::move(sr));
  }
  return r;
}

inline std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "algebra " << r.algebra << ", mu = " << r.mu << "\n";
  if (!r.error.empty()) os << "error: " << r.error << "\n";
  for (const auto& s : r.suites) {
    os << (s.passed ? "[pass] " : "[FAIL] ") << s.name << " (" << s.seconds << " s)\n";
    for (const auto& c : s.checks) {
      os << "    " << (c.passed ? "ok   " : "FAIL ") << c.name;
      if (!c.detail.empty()) os << ": " << c.detail;
      os << "\n";
    }
  }
  os << "constants:\n";
  for (const auto& [k, v] : r.constants) os << "    " << k << " = " << v << "\n";
  os << (r.passed() ? "all selected suites passed\n" : "some suites failed\n");
  return os.str();
}

// ---------------------------------------------------------------------------
// Run

namespace detail {

inline SuiteResult make_suite(const std::string& name, const CheckList& checks, double seconds) {
  return {name, checks.passed(), checks.checks, seconds};
}

inline double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

/// Runs the selected suites in dependency order. Configuration errors throw;
/// verification failures are recorded in the report.
inline VerificationReport run(const RunConfig& config) {
  validate_config(config);
  const std::set<std::string> selected = config.suites.empty()
                                             ? std::set<std::string>(suite_names().begin(), suite_names().end())
                                             : config.suites;
  auto want = [&](const char* s) { return selected.count(s) > 0; };
  const bool need_lie = want("lie") || want("chart") || want("star") || want("fourier") || want("theorem");
  const bool need_chart = want("chart") || want("star") || want("fourier");
  const bool need_rep = want("star") || want("fourier") || want("theorem");

  VerificationReport rep;
  rep.algebra = config.algebra;
  rep.mu = config.mu.str();
  const JordanAlgebra raw = algebra_from_selector(config.algebra);
  using clock = std::chrono::steady_clock;

  // jordan
  {
    const auto t0 = clock::now();
    const CheckList jc = validate_jordan(raw);
    rep.constants["jordan_dim"] = std::to_string(raw.dim);
    rep.constants["jordan_rank"] = std::to_string(raw.rank);
    if (want("jordan")) rep.suites.push_back(detail::make_suite("jordan", jc, detail::since(t0)));
    if (!jc.passed()) {
      rep.error = "Jordan algebra failed validation";
      return rep;
    }
  }
  if (!need_lie) return rep;

  std::shared_ptr<const GradedLieAlgebra> g;
  try {
    g = ConstructionCache::instance().lie(raw, config.mu);
  } catch (const Error& e) {
    rep.error = e.what();
    return rep;
  }
  const Rational boo = killing_intrinsic(*g, g->o, g->o);
  rep.constants["dim_g"] = std::to_string(g->dim);
  rep.constants["dim_g0"] = std::to_string(g->d0);
  rep.constants["c"] = g->c.str();
  rep.constants["beta_oo"] = boo.str();

  if (want("lie")) {
    const auto t0 = clock::now();
    const KktReport k = verify_kkt(*g);
    rep.constants["kappa_g"] = k.kappa_g_defined && k.checks.find("killing_closed_form_proportional")->passed
                                   ? k.kappa_g.str()
                                   : "undefined";
    rep.constants["kappa_g0_variant"] = k.g0_variant_exact ? "1" : "undefined";
    rep.constants["identification_sign"] = std::to_string(k.identification_sign);
    rep.suites.push_back(detail::make_suite("lie", k.checks, detail::since(t0)));
  }

  SymplecticChartBasis basis;
  try {
    basis = symplectic_basis(*g);
  } catch (const Error& e) {
    rep.error = e.what();
    return rep;
  }

  std::optional<ChartContext> ctx;
  if (need_chart) {
    const auto t0 = clock::now();
    ctx = build_chart(g, basis);
    if (want("chart")) {
      const ChartReport c = verify_strongly_hamiltonian(*ctx);
      rep.constants["moment_map_max_degree"] = std::to_string(c.max_degree);
      rep.suites.push_back(detail::make_suite("chart", c.checks, detail::since(t0)));
    }
  }

  std::optional<StarRepresentation> srep;
  if (need_rep) srep = build_star_representation(g, basis);

  if (want("star")) {
    const auto t0 = clock::now();
    StarReport s = verify_star_suite(*ctx);
    const HomomorphismResult h = verify_rho_homomorphism(*srep);
    s.checks.add("rho_homomorphism", h.sign != 0, h.detail.empty() ? "sign " + std::to_string(h.sign) : h.detail);
    rep.constants["N"] = std::to_string(s.N);
    rep.constants["rho_sign"] = std::to_string(h.sign);
    rep.suites.push_back(detail::make_suite("star", s.checks, detail::since(t0)));
  }

  if (want("fourier")) {
    const auto t0 = clock::now();
    const FourierIdentityReport p = verify_fourier_identity(*ctx, *srep);
    rep.constants["fourier_relation"] = p.literal_relation;
    rep.constants["right_star_route"] = p.right_route_exact && p.right_route_holomorphic ? "exact" : "fails";
    rep.suites.push_back(detail::make_suite("fourier", p.checks, detail::since(t0)));
  }

  if (want("theorem")) {
    const auto t0 = clock::now();
    CheckList checks;
    const KappaH kh = measure_kappa_h(*srep);
    rep.constants["kappa_h"] = kh.defined ? kh.value.str() : "undefined";
    checks.add("kappa_h_defined", kh.defined, kh.detail);
    checks.append(verify_tube_identities(*srep));
    const HomomorphismResult d = verify_dpi_homomorphism(*g, srep->zvars);
    rep.constants["dpi_sign"] = std::to_string(d.sign);
    checks.add("dpi_homomorphism", d.sign != 0, d.detail.empty() ? "sign " + std::to_string(d.sign) : d.detail);

    const Equivalence eq = solve_equivalence(*g, srep->rho, srep->zvars);
    checks.add("equivalence", eq.found, eq.found ? "alpha = " + alpha_name(eq.alpha) : eq.residual);
    if (eq.found) {
      const TheoremComparison t = compare_with_theorem(*g, eq, kh);
      rep.constants["alpha"] = alpha_name(eq.alpha);
      rep.constants["m_star"] = t.m_star.str();
      rep.constants["m_formula"] = t.m_formula.str();
      rep.constants["match"] = t.match;
      rep.constants["factor"] = t.factor ? t.factor->str() : "none";
      rep.constants["predicted_factor"] = t.predicted_factor ? t.predicted_factor->str() : "none";
      checks.add("theorem_match", t.match != "failed",
                 t.match + " (m* = " + t.m_star.str() + ", m_formula = " + t.m_formula.str() +
                     (t.factor ? ", factor " + t.factor->str() : "") +
                     (t.predicted_factor ? ", traced -2 s_alpha kappa_h = " + t.predicted_factor->str() : "") + ")");
      if (g->n == 1) {
        // (2 mu + nu) / (4 nu)
        const Scalar expected = (Scalar(Rational(2) * g->mu) + Scalar::nu(1)) *
                                Scalar::monomial(GaussianRational(Rational(1, 4)), -1);
        checks.add("rank_one_closed_form", t.m_star == expected,
                   "m* = " + t.m_star.str() + ", expected (2mu + nu)/(4nu) = " + expected.str());
        checks.add("rank_one_equals_m_formula", t.match == "exact", "match " + t.match);
      }
      const RemarkReport r = remark_substitution(*g, eq, srep->rho);
      rep.constants["remark_nu0"] = r.nu0.str();
      rep.constants["remark_numerator"] = r.numerator_at_nu0.str();
      rep.constants["remark_m_star"] = r.m_star_at_nu0.str();
      rep.constants["remark_m_formula"] = r.m_formula_at_nu0.str();
      rep.constants["remark_tau_E"] = r.tau_E_at_nu0.str();
      checks.add("remark_numerator_vanishes", r.numerator_at_nu0.is_zero(), "nu0 = " + r.nu0.str());
    }
    rep.suites.push_back(detail::make_suite("theorem", checks, detail::since(t0)));
  }
  return rep;
}

inline std::vector<std::string> builtin_algebras() {
  return {"rank1", "spin:2", "spin:3", "spin:4", "spin:5", "sym:1", "sym:2", "sym:3"};
}

}  // namespace jstar
