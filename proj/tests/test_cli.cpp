// Copyright 2026 The chernsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

std::string g_binary;

struct CliResult {
  int exit_code = -1;
  std::string stdout_text;
};

CliResult run_cli(const std::string& args) {
  const std::string out_file = "/tmp/chernsim_cli_out.txt";
  const std::string command = g_binary + " " + args + " > " + out_file + " 2>/dev/null";
  const int raw = std::system(command.c_str());
  CliResult result;
  result.exit_code = WEXITSTATUS(raw);
  std::ifstream in(out_file);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.stdout_text = buffer.str();
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_binary = argv[argc - 1];
  doctest::Context context;
  context.applyCommandLine(argc - 1, argv);
  return context.run();
}

TEST_CASE("flux: oracle run emits a well-formed record and exit code 0") {
  const CliResult r = run_cli("flux --model qwz -u 1 --backend oracle -n 15");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.stdout_text);
  CHECK(doc["chern_int"] == 1);
  CHECK(doc["grid"].size() == 15);
  CHECK(doc["config"]["model"]["u"] == 1.0);
  CHECK(doc["meta"]["version"] == "0.1.0");
}

TEST_CASE("flux: extended zone tiles the grid") {
  const CliResult r = run_cli("flux -u 1 --backend oracle -n 6 --zone extended");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.stdout_text);
  CHECK(doc["grid"].size() == 12);
  CHECK(doc["grid"][0].size() == 12);
  CHECK(doc["chern_int"] == 1);  // the Chern number still comes from the first zone
}

TEST_CASE("bad configuration exits with code 2") {
  CHECK(run_cli("flux --model nonsense").exit_code == 2);
  CHECK(run_cli("flux --backend bogus").exit_code == 2);
  CHECK(run_cli("definitely-not-a-command").exit_code == 2);
  CHECK(run_cli("wannier --model haldane --backend statevector").exit_code == 2);
}

TEST_CASE("gap closure exits with code 3") {
  CHECK(run_cli("flux -u -2 --backend oracle -n 15").exit_code == 3);
}

TEST_CASE("sweep: CSV export goes to disk") {
  const std::string csv_path = "/tmp/chernsim_cli_sweep.csv";
  std::remove(csv_path.c_str());
  const CliResult r = run_cli("sweep --param u --from -3 --to 3 --points 7 --backend oracle "
                              "-n 9 --csv " + csv_path);
  REQUIRE(r.exit_code == 0);
  std::ifstream csv(csv_path);
  REQUIRE(csv.good());
  std::string header;
  std::getline(csv, header);
  CHECK(header == "u,chern_real,chern_int,spread,error");
  int rows = 0;
  for (std::string line; std::getline(csv, line);) ++rows;
  CHECK(rows == 7);
}

TEST_CASE("wannier: oracle run reports the winding") {
  const CliResult r = run_cli("wannier -u -1 --backend oracle --ky-points 12 --nk 30");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.stdout_text);
  CHECK(doc["trace"]["winding"] == -1);
  CHECK(doc["trace"]["ky"].size() == 12);
}

TEST_CASE("heisenberg: quantized record, and degeneracy maps to exit 3") {
  const CliResult ok = run_cli("heisenberg --sites 2 --ntheta 40");
  REQUIRE(ok.exit_code == 0);
  const auto doc = nlohmann::json::parse(ok.stdout_text);
  CHECK(std::abs(doc["residual"].get<double>()) < 1e-6);

  // a periodic 3-site uniform chain has a degenerate ground state
  CHECK(run_cli("heisenberg --sites 3 --periodic --ntheta 8").exit_code == 3);
}

TEST_CASE("file output lands at --out") {
  const std::string out_path = "/tmp/chernsim_cli_flux.json";
  std::remove(out_path.c_str());
  const CliResult r = run_cli("flux -u 1 --backend oracle -n 9 --out " + out_path);
  REQUIRE(r.exit_code == 0);
  std::ifstream in(out_path);
  REQUIRE(in.good());
  nlohmann::json doc;
  in >> doc;
  CHECK(doc["chern_int"] == 1);
}
