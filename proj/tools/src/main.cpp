#include "schurkit/cli/expr.hpp"
#include "schurkit/cli/output.hpp"
#include "schurkit/cli/render.hpp"
#include "schurkit/oracle.hpp"
#include "schurkit/schur.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

using namespace schurkit;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

const std::map<std::string, Flavor> kFlavors{{"fhe", Flavor::FHE}, {"ehf", Flavor::EHF}};
const std::map<std::string, cli::OutputBasis> kBases{
    {"kostant", cli::OutputBasis::kostant}, {"power", cli::OutputBasis::power}, {"hbasis", cli::OutputBasis::hbasis}};
const std::map<std::string, OracleChoice> kOracles{
    {"tensor", OracleChoice::tensor}, {"weight", OracleChoice::weight}, {"both", OracleChoice::both}};

struct Args {
  unsigned d = 0;
  Flavor flavor = Flavor::FHE;
  cli::OutputBasis basis = cli::OutputBasis::kostant;
  std::string expr;
  std::string out;
  std::string format = "json";
  OracleChoice oracle = OracleChoice::both;
  bool json = false;
  bool inject_fault = false;
};

void add_degree(CLI::App* cmd, Args& args) {
  cmd->add_option("--d", args.d, "Degree d of the algebra")->required();
}

void add_flavor(CLI::App* cmd, Args& args) {
  cmd->add_option("--flavor", args.flavor, "Normal order: fhe or ehf")
      ->transform(CLI::CheckedTransformer(kFlavors, CLI::ignore_case));
}

Element read_expr(const Args& args) {
  const SchurContext ctx(args.d, args.flavor);
  return cli::lower(cli::parse(args.expr), ctx);
}

int run_normalize(const Args& args) {
  const SchurContext ctx(args.d, args.flavor);
  std::cout << cli::render(read_expr(args), ctx, args.basis) << '\n';
  return 0;
}

int run_table(const Args& args) {
  const StructureTable table = structure_constants(SchurContext(args.d, args.flavor));
  std::ofstream file(args.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << args.out << " for writing\n";
    return kExitCheckFailed;
  }
  if (args.format == "csv") {
    cli::write_table_csv(file, table);
  } else {
    cli::write_table_json(file, table);
  }
  file.flush();
  if (!file) {
    std::cerr << "error: failed writing " << args.out << '\n';
    return kExitCheckFailed;
  }
  return 0;
}

int run_verify(const Args& args) {
  VerifyOptions options;
  options.oracle = args.oracle;
  options.flavor = args.flavor;
  options.inject_sign_fault = args.inject_fault;
  const VerifyReport report = verify_suite(args.d, options);
  if (args.json) {
    cli::write_report_json(std::cout, report);
  } else {
    cli::write_report_text(std::cout, report);
  }
  return report.all_passed() ? 0 : kExitCheckFailed;
}

int run_minpoly(const Args& args) {
  std::cout << min_poly(read_expr(args), SchurContext(args.d, args.flavor)).to_string() << '\n';
  return 0;
}

int run_basis(const Args& args) {
  const auto monos = basis(SchurContext(args.d, args.flavor));
  for (std::size_t i = 0; i < monos.size(); ++i) {
    std::cout << i << '\t' << cli::render_monomial(monos[i], args.flavor) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Schur algebra S(2,d)", "schurkit"};
  app.require_subcommand(1);
  Args args;

  auto* normalize_cmd = app.add_subcommand("normalize", "Normalize an expression into a basis of S(2,d)");
  add_degree(normalize_cmd, args);
  add_flavor(normalize_cmd, args);
  normalize_cmd->add_option("--basis", args.basis, "Output basis: kostant, power or hbasis")
      ->transform(CLI::CheckedTransformer(kBases, CLI::ignore_case));
  normalize_cmd->add_option("expr", args.expr, "Expression in e, f, h, H1, H2, E(m), F(m), binom(H,m)")->required();

  auto* table_cmd = app.add_subcommand("table", "Write the structure constants of the Kostant basis");
  add_degree(table_cmd, args);
  add_flavor(table_cmd, args);
  table_cmd->add_option("--out", args.out, "Output file")->required();
  table_cmd->add_option("--format", args.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* verify_cmd = app.add_subcommand("verify", "Check the symbolic engine against matrix representations");
  add_degree(verify_cmd, args);
  add_flavor(verify_cmd, args);
  verify_cmd->add_option("--oracle", args.oracle, "tensor, weight or both")
      ->transform(CLI::CheckedTransformer(kOracles, CLI::ignore_case));
  verify_cmd->add_flag("--json", args.json, "Print the report as JSON");
  verify_cmd->add_flag("--inject-fault", args.inject_fault)->group("");

  auto* dim_cmd = app.add_subcommand("dim", "Print the dimension binom(d+3,3)");
  add_degree(dim_cmd, args);

  auto* minpoly_cmd = app.add_subcommand("minpoly", "Minimal polynomial of left multiplication by an element");
  add_degree(minpoly_cmd, args);
  add_flavor(minpoly_cmd, args);
  minpoly_cmd->add_option("expr", args.expr, "Expression")->required();

  auto* basis_cmd = app.add_subcommand("basis", "List the truncated Kostant basis");
  add_degree(basis_cmd, args);
  add_flavor(basis_cmd, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*normalize_cmd) return run_normalize(args);
    if (*table_cmd) return run_table(args);
    if (*verify_cmd) return run_verify(args);
    if (*dim_cmd) {
      std::cout << dimension(args.d).get_str() << '\n';
      return 0;
    }
    if (*minpoly_cmd) return run_minpoly(args);
    if (*basis_cmd) return run_basis(args);
  } catch (const cli::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
