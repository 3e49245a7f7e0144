// fibdual: exact sequence tables, identity audit, and Binet comparison for
// dual Fibonacci and dual Lucas quaternions.

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "fibdual/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact dual Fibonacci / dual Lucas quaternion toolkit"};
  app.set_version_flag("--version", fibdual::kVersion);
  app.require_subcommand(1);

  fibdual::cli::TableArgs table_args;
  CLI::App* table = app.add_subcommand("table", "Print sequence values over an index range");
  table->add_option("--kind", table_args.kind, "Sequence family: fib or lucas")
      ->capture_default_str();
  table->add_option("--object", table_args.object,
                    "Value shape: number, dual, quat or dualquat")
      ->capture_default_str();
  table->add_option("--from", table_args.from, "First index (inclusive)")->required();
  table->add_option("--to", table_args.to, "Last index (inclusive)")->required();
  table->add_option("--format", table_args.format, "Output format: csv or json")
      ->capture_default_str();

  fibdual::cli::CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "Audit cataloged identities over index ranges");
  check->add_option("--identity", check_args.identity, "Identity id, or 'all'")
      ->capture_default_str();
  check->add_option("--from", check_args.n_from, "Override the n range start");
  check->add_option("--to", check_args.n_to, "Override the n range end");
  check->add_option("--m-from", check_args.m_from, "Override the m range start");
  check->add_option("--m-to", check_args.m_to, "Override the m range end");
  check->add_option("--p-from", check_args.p_from, "Override the p range start");
  check->add_option("--p-to", check_args.p_to, "Override the p range end");
  check->add_option("--format", check_args.format, "Output format: json or text")
      ->capture_default_str();
  check->add_flag("--expect-verified", check_args.expect_verified,
                  "Exit with status 2 if any identity is refuted");
  check->add_flag("--no-timestamp", check_args.no_timestamp,
                  "Omit the generation timestamp for byte-stable output");

  fibdual::cli::BinetArgs binet_args;
  CLI::App* binet = app.add_subcommand("binet", "Evaluate the closed form at one index");
  binet->add_option("--kind", binet_args.kind, "Sequence family: fib or lucas")
      ->capture_default_str();
  binet->add_option("--n", binet_args.n, "Index (must be >= 0)")->required();
  binet->add_flag("--compare", binet_args.compare,
                  "Also evaluate by recurrence and report equality");
  binet->add_option("--format", binet_args.format, "Output format: text or json")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fibdual::cli::kExitUsage;
  }

  if (table->parsed()) return fibdual::cli::cmd_table(table_args, std::cout, std::cerr);
  if (check->parsed()) return fibdual::cli::cmd_check(check_args, std::cout, std::cerr);
  if (binet->parsed()) return fibdual::cli::cmd_binet(binet_args, std::cout, std::cerr);
  return fibdual::cli::kExitUsage;
}
