#include <doctest.h>

#include <fstream>

#include "cli_harness.hpp"

using cli_harness::csv_close;
using cli_harness::golden_path;
using cli_harness::json_close;
using cli_harness::read_all;
using cli_harness::run_cli;
using cli_harness::scratch_dir;
using nlohmann::json;

namespace {

void check_json_golden(const std::string& args, const std::string& golden) {
  const auto r = run_cli(args);
  REQUIRE(r.exit_code == 0);
  std::string why;
  const bool ok =
      json_close(json::parse(r.out), json::parse(read_all(golden_path(golden))), 1e-12, &why);
  INFO("entgeo ", args, ": ", why);
  CHECK(ok);
}

void check_csv_golden(const std::string& args, const std::string& golden) {
  const auto r = run_cli(args);
  REQUIRE(r.exit_code == 0);
  std::string why;
  const bool ok = csv_close(r.out, read_all(golden_path(golden)), 1e-12, &why);
  INFO("entgeo ", args, ": ", why);
  CHECK(ok);
}

}  // namespace

TEST_CASE("measure: golden reports") {
  check_json_golden("measure --state ghz:4 --probe fr", "measure_ghz4_fr.json");
  check_json_golden("measure --state epr_pair_product --probe fr", "measure_epr_fr.json");
  check_json_golden("measure --state \"product:1,0,0,0;1,0,0,0;1,0,0,0;1,0,0,0\" --probe fr",
                    "measure_zeros4_fr.json");
  check_csv_golden("measure --state w:3 --probe qc --format csv", "measure_w3_qc.csv");
}

TEST_CASE("hopf: golden report and K values") {
  check_json_golden("hopf --state ghz:3 --all-perms", "hopf_ghz3_allperms.json");

  const auto r = run_cli("hopf --state ghz:3 --all-perms");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc.at("images").size() == 6);
  for (const auto& img : doc.at("images"))
    CHECK(std::abs(img.at("k").get<double>() - 1.0) < 1e-10);
}

TEST_CASE("scott: golden report") {
  check_json_golden("scott --state ghz:4 --m 2", "scott_ghz4_m2.json");
}

TEST_CASE("sweep: golden CSV and JSON format flag") {
  check_csv_golden("sweep --family mems --param 0.9:0.99:0.03 --probe fr",
                   "sweep_mems_fr.csv");
  const auto r = run_cli("sweep --family werner --param 0:1:0.5 --probe qc --format json");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("rows").size() == 3);
  CHECK(std::abs(doc.at("rows")[2].at("m").get<double>() - 1.0) < 1e-12);
}

TEST_CASE("roof: schema and value against the closed form") {
  const auto r = run_cli("roof --state werner:0.8 --probe qc --seed 1");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(std::abs(doc.at("value").get<double>() - 0.7) < 2e-3);
  CHECK(doc.at("bound_kind").get<std::string>() == "oracle-confirmed");
  CHECK(doc.at("restarts_used").get<int>() == 8);
  CHECK(doc.contains("k"));
  CHECK(doc.contains("converged"));
}

TEST_CASE("round trip: state --emit feeds measure --state-file identically") {
  const auto emitted = run_cli("state --state random:3:2718 --emit");
  REQUIRE(emitted.exit_code == 0);
  const auto file = scratch_dir() / "roundtrip_state.json";
  std::ofstream(file) << emitted.out;

  const auto via_file = run_cli("measure --state-file \"" + file.string() + "\" --probe fr");
  const auto via_spec = run_cli("measure --state random:3:2718 --probe fr");
  REQUIRE(via_file.exit_code == 0);
  REQUIRE(via_spec.exit_code == 0);
  CHECK(via_file.out == via_spec.out);
}

TEST_CASE("determinism: identical invocations are byte-identical") {
  const auto a = run_cli("measure --state mems:0.95 --probe fr");
  const auto b = run_cli("measure --state mems:0.95 --probe fr");
  CHECK(a.out == b.out);
  const auto ra = run_cli("roof --state werner:0.5 --probe qc --seed 7 --budget 2000");
  const auto rb = run_cli("roof --state werner:0.5 --probe qc --seed 7 --budget 2000");
  CHECK(ra.out == rb.out);
}

TEST_CASE("state summary without --emit") {
  const auto r = run_cli("state --state ghz:3");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("kind") == "state");
  CHECK(doc.at("n_qubits") == 3);
}

TEST_CASE("usage errors exit 2 with a diagnostic naming the flag") {
  const auto unknown_family = run_cli("measure --state foo:3 --probe fr");
  CHECK(unknown_family.exit_code == 2);
  CHECK(unknown_family.err.find("--state") != std::string::npos);

  const auto out_of_range = run_cli("measure --state ghz:1 --probe fr");
  CHECK(out_of_range.exit_code == 2);
  CHECK(out_of_range.err.find("--state") != std::string::npos);

  const auto bad_probe = run_cli("measure --state ghz:3 --probe xx");
  CHECK(bad_probe.exit_code == 2);

  const auto no_input = run_cli("measure --probe fr");
  CHECK(no_input.exit_code == 2);

  const auto both_inputs = run_cli("measure --state ghz:3 --state-file x.json");
  CHECK(both_inputs.exit_code == 2);

  const auto no_subcommand = run_cli("");
  CHECK(no_subcommand.exit_code == 2);

  const auto hopf_too_big = run_cli("hopf --state ghz:4");
  CHECK(hopf_too_big.exit_code == 2);
  CHECK(hopf_too_big.err.find("--state") != std::string::npos);

  const auto hopf_mixed = run_cli("hopf --state werner:0.5");
  CHECK(hopf_mixed.exit_code == 2);

  const auto bad_range = run_cli("sweep --family mems --param 1:0:0.1");
  CHECK(bad_range.exit_code == 2);
  CHECK(bad_range.err.find("--param") != std::string::npos);
}

TEST_CASE("data errors exit 1 with a diagnostic naming the flag") {
  const auto missing = run_cli("measure --state-file /nonexistent/state.json --probe fr");
  CHECK(missing.exit_code == 1);
  CHECK(missing.err.find("--state-file") != std::string::npos);

  const auto bad_file = scratch_dir() / "malformed.json";
  std::ofstream(bad_file) << "{not json";
  const auto malformed =
      run_cli("measure --state-file \"" + bad_file.string() + "\" --probe fr");
  CHECK(malformed.exit_code == 1);
  CHECK(malformed.err.find("--state-file") != std::string::npos);

  const auto herm_file = scratch_dir() / "nonhermitian.json";
  std::ofstream(herm_file)
      << R"({"n_qubits":1,"rows":[[[0.5,0],[0.3,0.1]],[[0.3,-0.2],[0.5,0]]]})";
  const auto nonherm =
      run_cli("measure --state-file \"" + herm_file.string() + "\" --probe fr");
  CHECK(nonherm.exit_code == 1);
  CHECK(nonherm.err.find("Hermitian") != std::string::npos);
}

TEST_CASE("scott CLI validates the subset size") {
  const auto bad = run_cli("scott --state ghz:4 --m 3");
  CHECK(bad.exit_code == 1);
  const auto good = run_cli("scott --state ghz:4 --m 2");
  CHECK(good.exit_code == 0);
}

TEST_CASE("numbers are printed with 12 significant digits") {
  const auto r = run_cli("measure --state w:3 --probe fr");
  REQUIRE(r.exit_code == 0);
  // Fr(W3 pair) = (log2(3) - 2/3)/2 = 0.459147917027...
  CHECK(r.out.find("0.459147917027") != std::string::npos);
}

TEST_CASE("help exits zero") {
  const auto r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("measure") != std::string::npos);
}
