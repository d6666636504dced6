// Acceptance gate: one PASS/FAIL line per criterion, exact comparisons only.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "jstar/pipeline.hpp"

using namespace jstar;

namespace {

using clock_type = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [" << what << "]";
    }
  }
};

std::shared_ptr<const GradedLieAlgebra> lie(const std::string& sel, long mu = 1) {
  return ConstructionCache::instance().lie(load_from_structure_constants(algebra_from_selector(sel)), Rational(mu));
}

std::string first_failure(const CheckList& c) {
  for (const auto& k : c.checks)
    if (!k.passed) return k.name + (k.detail.empty() ? "" : ": " + k.detail);
  return {};
}

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = clock_type::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(clock_type::now() - t0).count();
  o.require(s < budget_s, "over time budget");
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << ". " << title << " (" << s << " s)" << o.note.str()
            << std::endl;
}

}  // namespace

int main() {
  criterion(1, "Jordan axioms", 10, [](Outcome& o) {
    for (const char* sel : {"rank1", "spin:2", "spin:3", "spin:4", "spin:5", "sym:2", "sym:3"}) {
      const CheckList c = validate_jordan(algebra_from_selector(sel));
      o.require(c.passed(), std::string(sel) + " " + first_failure(c));
    }
    o.note << " 7 instances";
  });

  criterion(2, "KKT algebra", 60, [](Outcome& o) {
    const std::pair<const char*, std::size_t> rows[] = {{"rank1", 3}, {"sym:2", 10}, {"spin:3", 10}, {"sym:3", 21}};
    for (auto [sel, dim] : rows) {
      const auto g = lie(sel);
      o.require(g->dim == dim, std::string(sel) + " dim " + std::to_string(g->dim));
      const KktReport r = verify_kkt(*g);
      o.note << " " << sel << ": sign " << r.identification_sign << ", kappa_g "
             << (r.kappa_g_defined && r.checks.find("killing_closed_form_proportional")->passed ? r.kappa_g.str()
                                                                                                  : "undefined");
      o.require(r.checks.passed(), std::string(sel) + " " + first_failure(r.checks));
    }
  });

  criterion(3, "strongly Hamiltonian chart", 60, [](Outcome& o) {
    for (const char* sel : {"rank1", "spin:3", "sym:2"}) {
      const ChartReport r = verify_strongly_hamiltonian(build_chart(lie(sel)));
      o.require(r.checks.passed(), std::string(sel) + " " + first_failure(r.checks));
      o.require(r.max_degree <= 3, std::string(sel) + " degree");
      o.note << " " << sel << " max degree " << r.max_degree;
    }
  });

  criterion(4, "covariant star product on sym:2", 120, [](Outcome& o) {
    const StarReport r = verify_star_suite(build_chart(lie("sym:2")), 20);
    o.require(r.checks.passed(), first_failure(r.checks));
    o.require(r.associativity_trials >= 20, "too few trials");
    o.require(r.N == 3, "N = " + std::to_string(r.N));
    o.note << " " << r.associativity_trials << " associativity trials, N = " << r.N;
  });

  criterion(5, "conjugated left-star operator equals rho^ and is holomorphic", 120, [](Outcome& o) {
    for (const char* sel : {"rank1", "spin:3", "sym:2"}) {
      const auto g = lie(sel);
      const ChartContext ctx = build_chart(g);
      const FourierIdentityReport r = verify_fourier_identity(ctx, build_star_representation(g, ctx.basis));
      o.require(r.literal_holomorphic, std::string(sel) + " not holomorphic");
      o.require(r.literal_relation == "exact", std::string(sel) + " relation " + r.literal_relation);
      o.note << " " << sel << ": right-star route " << (r.right_route_exact ? "exact" : "fails");
    }
  });

  criterion(6, "rho^ and dpi_m homomorphisms", 120, [](Outcome& o) {
    for (const char* sel : {"rank1", "spin:3", "sym:2"}) {
      const auto g = lie(sel);
      const HomomorphismResult r = verify_rho_homomorphism(build_star_representation(g, symplectic_basis(*g)));
      const HomomorphismResult d = verify_dpi_homomorphism(*g, z_varset(g->n));
      o.require(r.sign != 0, std::string(sel) + " rho " + r.detail);
      o.require(d.sign != 0, std::string(sel) + " dpi " + d.detail);
      o.note << " " << sel << ": rho sign " << r.sign << ", dpi sign " << d.sign;
    }
  });

  criterion(7, "equivalence with holomorphic discrete series", 300, [](Outcome& o) {
    auto one = [&](const char* sel, long mu) {
      const auto g = lie(sel, mu);
      const StarRepresentation s = build_star_representation(g, symplectic_basis(*g));
      const Equivalence e = solve_equivalence(*g, s.rho, s.zvars);
      const std::string tag = std::string(sel) + " mu=" + std::to_string(mu);
      o.require(e.found, tag + " no equivalence");
      if (!e.found) return;
      const TheoremComparison t = compare_with_theorem(*g, e, measure_kappa_h(s));
      o.note << " " << tag << ": alpha " << alpha_name(e.alpha) << ", m* = " << t.m_star.str() << ", closed form "
             << t.m_formula.str() << ", " << t.match;
      if (t.factor) o.note << " factor " << t.factor->str();
      if (t.predicted_factor) o.note << " traced " << t.predicted_factor->str();
      o.note << ";";
      o.require(t.match != "failed", tag + " match failed");
      if (g->n == 1) {
        const Scalar expected = (Scalar(Rational(2 * mu)) + Scalar::nu(1)) *
                                Scalar::monomial(GaussianRational(Rational(1, 4)), -1);
        o.require(t.m_star == expected, tag + " m* != (2mu+nu)/(4nu)");
        o.require(t.match == "exact", tag + " m* != closed form");
      }
    };
    for (long mu : {1L, 2L, -3L}) one("rank1", mu);
    one("spin:3", 1);
    one("sym:2", 1);
  });

  criterion(8, "numerator vanishes at nu0", 60, [](Outcome& o) {
    for (const auto& sel : builtin_algebras()) {
      const auto g = lie(sel);
      const Rational boo = killing_intrinsic(*g, g->o, g->o);
      const Rational n(static_cast<long>(g->n));
      const Rational nu0 = -boo / (n * g->c);
      o.require((boo + n * nu0 * g->c).is_zero(), sel);
      o.note << " " << sel << " nu0=" << nu0.str();
    }
    const auto g = lie("rank1");
    const StarRepresentation s = build_star_representation(g, symplectic_basis(*g));
    const RemarkReport r = remark_substitution(*g, solve_equivalence(*g, s.rho, s.zvars), s.rho);
    o.note << "; rank1 m*(nu0) = " << r.m_star_at_nu0.str() << ", tau_E(nu0) = " << r.tau_E_at_nu0.str();
  });

  criterion(9, "negative controls", 60, [](Outcome& o) {
    const auto g = lie("rank1");
    const auto bad = std::make_shared<const GradedLieAlgebra>(
        perturb_structure_constant(*g, g->l_index(0), g->lp_index(0), g->l_index(0), Rational(1)));
    const CheckList k = verify_kkt(*bad).checks;
    o.require(!k.find("jacobi")->passed && !k.find("jacobi")->detail.empty(), "KKT residual not reported");
    const CheckList c = verify_strongly_hamiltonian(build_chart(bad)).checks;
    o.require(!c.find("poisson_homomorphism")->passed && !c.find("poisson_homomorphism")->detail.empty(),
              "chart residual not reported");

    const StarRepresentation s = build_star_representation(g, symplectic_basis(*g));
    auto rho = s.rho;
    rho[g->h_index(0)] += WeylOperator::identity(s.zvars);
    bool thrown = false;
    try {
      solve_equivalence_or_throw(*g, rho, s.zvars);
    } catch (const NoEquivalence&) {
      thrown = true;
    }
    o.require(thrown, "perturbed tau still equivalent");
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
