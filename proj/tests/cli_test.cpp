#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "pairfold/pairing.hpp"
#include "pairfold/table.hpp"
#include "reference_tables.hpp"
#include "test_util.hpp"

using testutil::cli;
using testutil::cli_with_stdin;

TEST_CASE("cli pair prints the code") {
  const auto r = cli("pair f 3 2");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output == "6\n");
  REQUIRE(cli("pair g 3 0").output == "4\n");
  REQUIRE(cli("pair cantor 2 3").output == "18\n");
}

TEST_CASE("cli unpair prints the canonical pair") {
  const auto r = cli("unpair f 7");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output == "5 1\n");
  REQUIRE(cli("unpair g 4").output == "3 0\n");
  REQUIRE(cli("unpair cantor 18").output == "2 3\n");
}

TEST_CASE("cli rejects out-of-domain input with exit 2") {
  const auto r = cli("pair f 0 3");
  REQUIRE(r.exit_code == 2);
  REQUIRE(r.output.find("error") != std::string::npos);
  REQUIRE(cli("unpair f 0").exit_code == 2);
}

TEST_CASE("cli rejects bad usage with exit 1") {
  REQUIRE(cli("").exit_code == 1);
  REQUIRE(cli("frobnicate 1 2").exit_code == 1);
  REQUIRE(cli("pair szudzik 1 2").exit_code == 1);
  REQUIRE(cli("pair f 1").exit_code == 1);
  REQUIRE(cli("pair f one 2").exit_code == 1);
  REQUIRE(cli("pair f -3 2").exit_code == 1);
  REQUIRE(cli("table f --row-start 0").exit_code == 1);
}

TEST_CASE("cli help succeeds") {
  const auto r = cli("--help");
  REQUIRE(r.exit_code == 0);
  for (const char* word : {"pair", "unpair", "table", "check", "edges"})
    REQUIRE(r.output.find(word) != std::string::npos);
}

TEST_CASE("cli handles values far beyond machine words") {
  const std::string big(45, '7');  // 45 digits
  const auto paired = cli("pair f " + big + " " + big);
  REQUIRE(paired.exit_code == 0);
  std::string code = paired.output;
  REQUIRE(!code.empty());
  code.pop_back();  // trailing newline
  const auto unpaired = cli("unpair f " + code);
  REQUIRE(unpaired.exit_code == 0);
  REQUIRE(unpaired.output == big + " " + big + "\n");
}

TEST_CASE("cli table matches the library renderer") {
  pairfold::TableSpec spec;
  spec.scheme = pairfold::Scheme::Cantor;
  spec.row_start = 0;
  spec.col_start = 0;
  spec.format = pairfold::TableFormat::Csv;
  REQUIRE(cli("table cantor --csv").output == pairfold::render_table(spec));
  spec.format = pairfold::TableFormat::Text;
  REQUIRE(cli("table cantor").output == pairfold::render_table(spec));
}

TEST_CASE("cli table honours window flags") {
  const auto r = cli("table f --rows 2 --cols 3 --row-start 4 --col-start 2 --csv");
  REQUIRE(r.exit_code == 0);
  const auto rows = testutil::parse_csv(r.output);
  REQUIRE(rows.size() == 3);
  REQUIRE(rows[1][0] == "4");
  REQUIRE(rows[1][1] ==
          std::to_string(testdata::F_TABLE[4 - 1][2 - 1]));  // f(4, 2) = 8
}

TEST_CASE("cli check reports suites and exits cleanly") {
  const auto r = cli("check --limit 300");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("suites passed") != std::string::npos);
  REQUIRE(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("cli edges reads files") {
  const std::string path = "/tmp/pairfold_cli_edges_test.txt";
  {
    std::ofstream file(path);
    file << "# demo\n1 2\n2 1\n\n10 10\n";
  }
  const auto r = cli("edges f " + path);
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output == "2\n2\n100\n");
  std::remove(path.c_str());
}

TEST_CASE("cli edges reads standard input") {
  const auto r = cli_with_stdin("1 2\n2 1\n", "edges f -");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output == "2\n2\n");
}

TEST_CASE("cli edges maps data problems to exit 2") {
  const auto missing = cli("edges f /tmp/no_such_pairfold_file.txt");
  REQUIRE(missing.exit_code == 2);

  const auto malformed = cli_with_stdin("1 2\nx y\n", "edges f -");
  REQUIRE(malformed.exit_code == 2);
  REQUIRE(malformed.output.find("line 2") != std::string::npos);

  const auto zero_under_f = cli_with_stdin("0 3\n", "edges f -");
  REQUIRE(zero_under_f.exit_code == 2);
  REQUIRE(zero_under_f.output.find("line 1") != std::string::npos);

  const auto wrong_scheme = cli_with_stdin("1 2\n", "edges cantor -");
  REQUIRE(wrong_scheme.exit_code == 2);
}
