// pairfold command-line front end.
//
//   pair <scheme> <m> <n>          encode two naturals into one code
//   unpair <scheme> <c>            decode a code back to "m n"
//   table <scheme> [options]       render a window of a scheme's values
//   check [--limit N]              run the self-verification suites
//   edges <scheme> <file|->        encode a two-column edge list
//
// Exit codes: 0 success, 1 usage error, 2 domain or input-data error,
// 3 failed check (including any internal verification failure).

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pairfold/pairfold.hpp"

namespace {

pairfold::Int parse_natural(const std::string& text) {
  if (!pairfold::detail::all_digits(text))
    throw pairfold::UsageError("expected a decimal natural, got '" + text + "'");
  return pairfold::Int(text);
}

int dispatch(const CLI::App& app,
             const std::string& scheme_name,
             const std::string& arg_m,
             const std::string& arg_n,
             const std::string& arg_c,
             const std::string& row_start,
             const std::string& col_start,
             std::size_t rows,
             std::size_t cols,
             bool csv,
             std::uint64_t limit,
             const std::string& edge_source) {
  using namespace pairfold;

  if (app.got_subcommand("pair")) {
    const Scheme s = scheme_from_string(scheme_name);
    std::cout << pair_value(s, parse_natural(arg_m), parse_natural(arg_n))
              << '\n';
    return 0;
  }

  if (app.got_subcommand("unpair")) {
    const Scheme s = scheme_from_string(scheme_name);
    const auto [m, n] = unpair_value(s, parse_natural(arg_c));
    std::cout << m << ' ' << n << '\n';
    return 0;
  }

  if (app.got_subcommand("table")) {
    TableSpec spec;
    spec.scheme = scheme_from_string(scheme_name);
    spec.row_start = row_start.empty() ? scheme_origin(spec.scheme)
                                       : parse_natural(row_start);
    spec.col_start = col_start.empty() ? scheme_origin(spec.scheme)
                                       : parse_natural(col_start);
    spec.rows = rows;
    spec.cols = cols;
    spec.format = csv ? TableFormat::Csv : TableFormat::Text;
    std::cout << render_table(spec);
    return 0;
  }

  if (app.got_subcommand("check")) {
    const CheckReport report = run_checks(limit);
    print_report(report, std::cout);
    return report.all_pass() ? 0 : 3;
  }

  if (app.got_subcommand("edges")) {
    const Scheme s = scheme_from_string(scheme_name);
    if (edge_source == "-") {
      encode_edge_stream(std::cin, s, std::cout);
    } else {
      std::ifstream file(edge_source);
      if (!file)
        throw DomainError("cannot open '" + edge_source + "'");
      encode_edge_stream(file, s, std::cout);
    }
    return 0;
  }

  return 1;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Invertible pairing codecs over arbitrary-precision naturals.\n"
      "Schemes: cantor (ordered pairs over 0,1,2,...), f (unordered pairs\n"
      "over 1,2,...), g (unordered pairs over 0,1,2,...)."};
  app.require_subcommand(1);

  std::string scheme_name, arg_m, arg_n, arg_c;
  std::string row_start, col_start, edge_source;
  std::size_t rows = 10, cols = 10;
  bool csv = false;
  std::uint64_t limit = 10000;

  auto* pair_cmd = app.add_subcommand("pair", "Encode two naturals into one code");
  pair_cmd->add_option("scheme", scheme_name, "cantor, f, or g")->required();
  pair_cmd->add_option("m", arg_m, "first value")->required();
  pair_cmd->add_option("n", arg_n, "second value")->required();

  auto* unpair_cmd = app.add_subcommand("unpair", "Decode a code back to its pair");
  unpair_cmd->add_option("scheme", scheme_name, "cantor, f, or g")->required();
  unpair_cmd->add_option("c", arg_c, "code to decode")->required();

  auto* table_cmd = app.add_subcommand("table", "Render a window of a scheme's values");
  table_cmd->add_option("scheme", scheme_name, "cantor, f, or g")->required();
  table_cmd->add_option("--rows", rows, "number of rows (default 10)");
  table_cmd->add_option("--cols", cols, "number of columns (default 10)");
  table_cmd->add_option("--row-start", row_start,
                        "first row index (default: scheme's smallest input)");
  table_cmd->add_option("--col-start", col_start,
                        "first column index (default: scheme's smallest input)");
  table_cmd->add_flag("--csv", csv, "emit CSV instead of aligned text");

  auto* check_cmd = app.add_subcommand("check", "Run the self-verification suites");
  check_cmd->add_option("--limit", limit,
                        "sweep codes and diagonal sums up to this bound "
                        "(default 10000; the diagonal suites touch every "
                        "pair with coordinate sum below the bound, so their "
                        "cost grows quadratically)");

  auto* edges_cmd = app.add_subcommand("edges", "Encode a two-column edge list");
  edges_cmd->add_option("scheme", scheme_name, "f or g")->required();
  edges_cmd->add_option("file", edge_source, "input path, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the message or requested help text
    return code == 0 ? 0 : 1;
  }

  try {
    return dispatch(app, scheme_name, arg_m, arg_n, arg_c, row_start,
                    col_start, rows, cols, csv, limit, edge_source);
  } catch (const pairfold::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const pairfold::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const pairfold::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const pairfold::Error& e) {
    std::cerr << "internal verification failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return 3;
  }
}
