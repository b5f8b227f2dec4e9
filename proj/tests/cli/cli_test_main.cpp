// Drives the CLI binary end to end. Expects the binary path as argv[1];
// exercises every subcommand, the exit-code contract, and output
// determinism. Prints one line per check and exits nonzero on any failure.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

int g_failures = 0;
std::string g_cli;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << cmd << "\n";
    std::exit(2);
  }
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.out.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

void expect(bool ok, const std::string& what) {
  std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
  if (!ok) ++g_failures;
}

std::string fixture(const std::string& name) {
  return std::string(MCBC_FIXTURE_DIR) + "/" + name;
}

std::string temp_path(const std::string& name) {
  return std::string("cli_test_") + name;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: mcbc_cli_tests <path-to-cli>\n";
    return 2;
  }
  g_cli = argv[1];

  const std::string five = fixture("five_by_five.json");
  const std::string affine = fixture("affine_plane_4_cbc.json");
  const std::string narrow = fixture("two_items_one_server.json");

  {
    auto res = run("construct --method diagonal --n 4 --k 5 --r 2");
    expect(res.exit_code == 0 &&
               res.out ==
                   "{\"n\":4,\"m\":5,\"servers\":[[1,4],[1,3],[2,4],[2,3],[3,4]]}\n",
           "construct diagonal emits the expected bytes");
    auto again = run("construct --method diagonal --n 4 --k 5 --r 2");
    expect(again.out == res.out, "construct output is byte-deterministic");
  }

  {
    std::string cmd = g_cli +
                      " construct --method diagonal --n 4 --k 5 --r 2 2>&1 1>/dev/null";
    std::array<char, 256> buf{};
    std::string err;
    FILE* pipe = popen(cmd.c_str(), "r");
    size_t got;
    while (pipe && (got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
      err.append(buf.data(), got);
    if (pipe) pclose(pipe);
    expect(err == "n=4 m=5 N=10 k=5 r=2\n", "construct summary line goes to stderr");
  }

  {
    auto res = run("construct --method steiner-affine --q 4 --k 7 --r 4");
    auto j = nlohmann::json::parse(res.out);
    long long storage = 0;
    for (const auto& s : j["servers"]) storage += s.size();
    expect(res.exit_code == 0 && j["n"] == 20 && j["m"] == 16 && storage == 80,
           "construct steiner-affine gives the 20-item, storage-80 code");
  }

  {
    auto res = run("construct --method replication --n 6 --k 3 --m 4 --r 2");
    auto j = nlohmann::json::parse(res.out);
    long long storage = 0;
    for (const auto& s : j["servers"]) storage += s.size();
    expect(res.exit_code == 0 && storage == 12, "construct replication has N=12");
  }

  // Construct piped into verify stays valid, for every method.
  {
    struct Case {
      std::string args;
      int k, r;
    };
    std::vector<Case> cases = {
        {"--method replication --n 8 --k 3 --m 4 --r 2", 3, 2},
        {"--method small-n --n 3 --k 3 --m 4", 3, 2},
        {"--method cwc-gs --n 3 --k 4 --m 7 --r 2", 4, 2},
        {"--method distance4 --n 8 --k 4 --m 5 --r 2", 4, 2},
        {"--method diagonal --n 4 --k 5 --r 2", 5, 2},
        {"--method steiner-affine --q 3 --k 5 --r 3", 5, 3},
        {"--method regular --n 3 --k 4 --m 6", 4, 4},
    };
    for (const auto& c : cases) {
      const std::string path = temp_path("roundtrip.json");
      auto built = run("construct " + c.args);
      std::ofstream(path) << built.out;
      auto check = run("verify " + path + " --k " + std::to_string(c.k) + " --r " +
                       std::to_string(c.r) + " --mode hall");
      expect(built.exit_code == 0 && check.exit_code == 0 &&
                 contains(check.out, "valid"),
             "round trip: construct " + c.args + " verifies");
      std::remove(path.c_str());
    }
  }

  {
    auto res = run("verify " + five + " --k 5 --r 2 --mode hall");
    expect(res.exit_code == 0 && contains(res.out, "valid") &&
               contains(res.out, "profile: A_2=2 A_3=2 A_5=1") &&
               contains(res.out, "profile-inequality: holds"),
           "verify hall reports profile and validity");
    auto ex = run("verify " + five + " --k 5 --r 2 --mode exhaustive");
    expect(ex.exit_code == 0, "verify exhaustive agrees on the five-server code");
  }

  {
    auto res = run("verify " + narrow + " --k 2 --r 1");
    expect(res.exit_code == 1 && contains(res.out, "blocks: 1 2"),
           "invalid code exits 1 with the violating block pair");
  }

  {
    auto res = run("verify " + affine + " --k 11 --r 2 --mode exhaustive --cap 20000000");
    expect(res.exit_code == 0, "affine fixture survives the exhaustive (11,2) sweep");
    auto capped = run("verify " + affine + " --k 11 --r 2 --mode exhaustive");
    expect(capped.exit_code == 4, "default cap rejects the 18M-request sweep, exit 4");
    for (std::string kr : {"--k 16 --r 1", "--k 11 --r 2", "--k 10 --r 3", "--k 7 --r 4"}) {
      auto hall = run("verify " + affine + " " + kr + " --mode hall");
      expect(hall.exit_code == 0, "affine fixture hall-verifies with " + kr);
    }
  }

  {
    auto res = run("serve " + five + " 3,3,4,4,5");
    int lines = 0;
    std::stringstream ss(res.out);
    std::string line;
    bool shape_ok = true;
    while (std::getline(ss, line)) {
      ++lines;
      shape_ok = shape_ok && line.rfind("server ", 0) == 0;
    }
    expect(res.exit_code == 0 && lines == 5 && shape_ok,
           "serve lists one read per server for the multiset request");

    auto empty = run("serve " + five + " \"\"");
    expect(empty.exit_code == 0 && empty.out.empty(), "empty request prints nothing");

    auto infeasible = run("serve " + narrow + " 1,2");
    expect(infeasible.exit_code == 1 && contains(infeasible.out, "INFEASIBLE"),
           "unservable request exits 1 with INFEASIBLE");
  }

  {
    auto res = run("bounds --n 4 --k 5 --m 5 --r 2 --search --witness-out " +
                   temp_path("witness.json"));
    auto j = nlohmann::json::parse(res.out);
    expect(res.exit_code == 0 && j["lower_bounds"]["rn"] == 8 &&
               j["known_exact"]["value"] == 10 && j["search_exact"] == 10,
           "bounds report: rn=8, exact=10, search=10");
    std::ifstream wit(temp_path("witness.json"));
    std::stringstream ws;
    ws << wit.rdbuf();
    auto wj = nlohmann::json::parse(ws.str());
    expect(wj["n"] == 4 && wj["m"] == 5, "search witness file holds the code");
    auto check = run("verify " + temp_path("witness.json") + " --k 5 --r 2");
    expect(check.exit_code == 0, "search witness verifies");
    std::remove(temp_path("witness.json").c_str());

    auto plain = run("bounds --n 12 --k 3 --m 4 --r 1");
    auto pj = nlohmann::json::parse(plain.out);
    expect(pj["known_exact"]["value"] == 24, "bounds exact N(12,3,4)=24");

    auto tiny = run("bounds --n 1 --k 1 --m 1 --r 1");
    auto tj = nlohmann::json::parse(tiny.out);
    expect(tj["known_exact"]["value"] == 1, "bounds exact N(1,1,1;1)=1");
  }

  {
    auto res = run("table --k 3 --m 4 --r 2 --n-from 6 --n-to 8");
    expect(res.exit_code == 0 && contains(res.out, "n\tlower\texact\tupper\n") &&
               contains(res.out, "6\t12\t12\t12\n"),
           "table row n=6 shows 12/12/12");
    auto again = run("table --k 3 --m 4 --r 2 --n-from 6 --n-to 8");
    expect(again.out == res.out, "table output is byte-deterministic");

    auto cbc = run("table --k 3 --m 4 --r 1 --n-from 12 --n-to 14");
    expect(cbc.exit_code == 0 && contains(cbc.out, "12\t24\t24\t24\n") &&
               contains(cbc.out, "13\t27\t27\t27\n") &&
               contains(cbc.out, "14\t") && contains(cbc.out, "\t30\t30\n"),
           "table exact column equals 3n-12 for the r=1 band");

    auto rk = run("table --k 3 --m 5 --r 3 --n-from 2 --n-to 5");
    std::stringstream ss(rk.out);
    std::string line;
    std::getline(ss, line);  // header
    bool all_kn = true;
    for (int n = 2; n <= 5; ++n) {
      std::getline(ss, line);
      std::stringstream row(line);
      std::string nval, lower, exact;
      std::getline(row, nval, '\t');
      std::getline(row, lower, '\t');
      std::getline(row, exact, '\t');
      all_kn = all_kn && exact == std::to_string(3 * n);
    }
    expect(rk.exit_code == 0 && all_kn, "table exact column equals kn when r=k");
  }

  // Exit-code contract.
  expect(run("verify /no/such/file.json --k 2").exit_code == 2,
         "missing code file exits 2");
  expect(run("construct --method replication --n 5 --k 3 --m 4 --r 2").exit_code == 3,
         "construction precondition failure exits 3");
  expect(run("construct --method nonsense --k 3").exit_code == 2,
         "unknown method exits 2");
  expect(run("serve " + five + " 1,,2").exit_code == 2, "malformed request exits 2");
  expect(run("serve " + five + " 9").exit_code == 2, "out-of-range item exits 2");
  expect(run("bounds --n 6 --k 2 --m 2 --r 1 --search").exit_code == 4,
         "search beyond caps exits 4");
  expect(run("bounds --n 6 --k 2 --m 2 --r 1 --search --search-cap 6").exit_code == 0,
         "raised search cap allows the search");
  expect(run("table --k 3 --m 4 --r 2 --n-from 5 --n-to 4").exit_code == 2,
         "empty table range exits 2");
  expect(run("verify " + five + " --k 5 --r 2 --t 2 --mode hall").exit_code == 2,
         "hall mode with t != 1 exits 2");
  expect(run("nonsense").exit_code == 2, "unknown subcommand exits 2");

  if (g_failures == 0) {
    std::cout << "all CLI checks passed\n";
    return 0;
  }
  std::cout << g_failures << " CLI check(s) failed\n";
  return 1;
}
