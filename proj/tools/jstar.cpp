// jstar: command-line driver for the verification pipeline.
//
//   jstar verify --algebra spin:3 --mu 1 --suites all --format json --out report.json
//   jstar list-algebras
//   jstar show --algebra sym:2 --what bracket-table|moment-maps|rho|dpi
//
// Exit status: 0 all selected suites pass, 1 some suite fails, 2 bad configuration.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "jstar/pipeline.hpp"

namespace {

using namespace jstar;

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

int cmd_verify(const std::string& algebra, const std::string& mu, const std::string& suites, const std::string& format,
               const std::string& out) {
  RunConfig config;
  config.algebra = algebra;
  config.mu = Rational::parse(mu);
  config.suites = parse_suites(suites);
  config.format = format;
  config.out = out;
  validate_config(config);

  const VerificationReport report = run(config);
  const std::string text = format == "json" ? to_json(report).dump(2) + "\n" : to_text(report);
  if (const int rc = emit(text, out)) return rc;
  if (!out.empty()) std::cerr << (report.passed() ? "passed" : "FAILED") << ", report written to " << out << "\n";
  return report.passed() ? 0 : 1;
}

int cmd_list() {
  for (const auto& name : builtin_algebras()) {
    const JordanAlgebra A = algebra_from_selector(name);
    const auto g = ConstructionCache::instance().lie(A, Rational(1));
    std::cout << name << "\tdim " << A.dim << "\trank " << A.rank << "\tdim g " << g->dim << "\n";
  }
  std::cout << "file:<path>\tJSON table {name, dim, rank, unit, structure}\n";
  return 0;
}

int cmd_show(const std::string& algebra, const std::string& mu_text, const std::string& what, const std::string& out) {
  const Rational mu = Rational::parse(mu_text);
  RunConfig config;
  config.mu = mu;
  validate_config(config);
  const JordanAlgebra A = load_from_structure_constants(algebra_from_selector(algebra));
  const auto g = ConstructionCache::instance().lie(A, mu);
  json j;
  j["algebra"] = algebra;
  j["mu"] = mu.str();

  if (what == "bracket-table") {
    j["table"] = bracket_table_json(*g);
  } else if (what == "moment-maps") {
    const ChartContext ctx = build_chart(g);
    json maps = json::object();
    for (std::size_t i = 0; i < g->dim; ++i)
      maps[g->basis_name(i)] = {{"text", ctx.lambda[i].str()}, {"poly", to_json(ctx.lambda[i])}};
    j["moment_maps"] = maps;
  } else if (what == "rho") {
    const StarRepresentation s = build_star_representation(g, symplectic_basis(*g));
    json ops = json::object();
    for (std::size_t i = 0; i < g->dim; ++i)
      ops[g->basis_name(i)] = {{"text", s.rho[i].str()}, {"operator", to_json(s.rho[i])}};
    j["rho"] = ops;
  } else if (what == "dpi") {
    const VarSetPtr zv = z_varset(g->n);
    json ops = json::object();
    for (std::size_t i = 0; i < g->dim; ++i) {
      const HdsOperator d = dpi(*g, zv, basis_coords(*g, i));
      ops[g->basis_name(i)] = {{"text", d.S0.str() + " + m*(" + d.S1.str() + ")"},
                               {"vector_part", to_json(d.S0)},
                               {"m_coefficient", to_json(d.S1)}};
    }
    j["dpi"] = ops;
  } else {
    std::cerr << "error: --what must be bracket-table, moment-maps, rho or dpi\n";
    return 2;
  }
  return emit(j.dump(2) + "\n", out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of star representations built from Jordan algebras"};
  app.require_subcommand(1);

  std::string algebra = "rank1", mu = "1", suites = "all", format = "text", out, what;

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--algebra", algebra, "rank1 | spin:k | sym:p | file:path");
  verify->add_option("--mu", mu, "base point scale, nonzero rational p or p/q");
  verify->add_option("--suites", suites, "comma list of jordan,lie,chart,star,fourier,theorem or all");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out, "write the report here instead of stdout");

  app.add_subcommand("list-algebras", "list built-in Jordan algebras");

  auto* show = app.add_subcommand("show", "print construction data as JSON");
  show->add_option("--algebra", algebra, "rank1 | spin:k | sym:p | file:path");
  show->add_option("--mu", mu, "base point scale");
  show->add_option("--what", what, "bracket-table | moment-maps | rho | dpi")->required();
  show->add_option("--out", out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(algebra, mu, suites, format, out);
    if (show->parsed()) return cmd_show(algebra, mu, what, out);
    return cmd_list();
  } catch (const jstar::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
