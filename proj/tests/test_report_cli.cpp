// Check/report plumbing (bitwise-faithful JSON and CSV) and the command
// line front end, driven as a subprocess: exit codes, output formats,
// determinism, and environment-variable configuration.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <zetakit/report.hpp>

using namespace zetakit;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const char* path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Runs the CLI with `args` (and an optional env prefix), capturing exit
/// code, stdout and stderr.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix + "\"" + ZK_CLI_PATH + "\" " + args +
                    " > zk_cli_out.txt 2> zk_cli_err.txt";
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp("zk_cli_out.txt");
  r.err = slurp("zk_cli_err.txt");
  return r;
}

std::string data_file(const char* name) {
  return std::string(ZK_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("make_check invariants") {
  CheckResult c = make_check("demo", 1.0 / 3.0, 0.3, 1e-1, "demo identity");
  CHECK(c.abs_err == std::abs(1.0 / 3.0 - 0.3));
  CHECK(c.pass);
  CheckResult tight = make_check("demo", 1.0, 2.0, 0.5, "x");
  CHECK_FALSE(tight.pass);
  // the boundary counts as passing: pass <=> abs_err <= tol
  CheckResult edge = make_check("demo", 1.25, 1.0, 0.25, "x");
  CHECK(edge.abs_err == 0.25);
  CHECK(edge.pass);
}

TEST_CASE("CSV escaping and layout") {
  CHECK(detail::csv_escape("plain") == "plain");
  CHECK(detail::csv_escape("a,b") == "\"a,b\"");
  CHECK(detail::csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  Report r;
  r.add(make_check("alpha", 1.0, 1.0, 1e-9, "a = a"));
  r.add(make_check("beta, gamma", 2.0, 2.5, 0.1, "b"));
  std::string csv = to_csv(r);
  CHECK(csv.rfind("name,lhs,rhs,abs_err,tol,pass,ref\n", 0) == 0);
  CHECK(csv.find("\"beta, gamma\"") != std::string::npos);
  // %.17g keeps exact doubles exact
  CHECK(csv.find("2.5") != std::string::npos);
}

TEST_CASE("JSON serialization round-trips doubles bitwise") {
  Report r;
  r.sieve_limit = 12345;
  r.zero_source = "none";
  r.add(make_check("third", 1.0 / 3.0, 0.333, 1e-2, "demo"));
  nlohmann::json j = to_json(r);
  nlohmann::json back = nlohmann::json::parse(j.dump());
  CHECK(back["checks"][0]["lhs"].get<double>() == 1.0 / 3.0);
  CHECK(back["checks"][0]["abs_err"].get<double>() == r.checks[0].abs_err);
  CHECK(back["sieve_limit"].get<long long>() == 12345);
  CHECK(back["config"]["em_cutoff"].get<int>() == 25);
  // objects serialize with alphabetically ordered keys, so byte equality
  // of two dumps means semantic equality
  CHECK(to_json(r.checks[0]).dump().rfind("{\"abs_err\":", 0) == 0);
}

TEST_CASE("cli: verify passes and is byte-deterministic") {
  RunResult a = run_cli("verify --json --limit 100000");
  CHECK(a.code == 0);
  nlohmann::json j = nlohmann::json::parse(a.out);
  CHECK(j["overall_pass"].get<bool>());
  CHECK(j["sieve_limit"].get<long long>() == 100000);
  CHECK(j["checks"].size() >= 15);
  for (const auto& c : j["checks"]) {
    // the serialized rows must reproduce the residual arithmetic bitwise
    double lhs = c["lhs"].get<double>();
    double rhs = c["rhs"].get<double>();
    CHECK(c["abs_err"].get<double>() == std::abs(lhs - rhs));
    CHECK(c["pass"].get<bool>() == (c["abs_err"].get<double>() <= c["tol"].get<double>()));
  }
  RunResult b = run_cli("verify --json --limit 100000");
  CHECK(a.out == b.out);

  RunResult csv = run_cli("verify --csv --limit 100000");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("name,lhs,rhs,abs_err,tol,pass,ref\n", 0) == 0);
}

TEST_CASE("cli: verify exit codes") {
  // zeroed tolerances force every check red: report exit, not usage exit
  RunResult r = run_cli("verify --limit 100000 --tol-scale 0");
  CHECK(r.code == 1);
  // malformed zero table: I/O-parse exit with a line number on stderr
  {
    std::ofstream bad("zk_bad_zeros.txt");
    bad << "14.5\nnot-a-number\n";
  }
  RunResult p = run_cli("verify --limit 100000 --zeros-file zk_bad_zeros.txt");
  CHECK(p.code == 3);
  CHECK(p.err.find("line 2") != std::string::npos);
  std::remove("zk_bad_zeros.txt");
  RunResult m = run_cli("verify --limit 100000 --zeros-file zk_definitely_missing.txt");
  CHECK(m.code == 3);
}

TEST_CASE("cli: eval") {
  RunResult z0 = run_cli("eval zeta --s 0");
  CHECK(z0.code == 0);
  CHECK(z0.out == "zeta = -0.5\n");
  RunResult z2 = run_cli("eval zeta --s 2");
  CHECK(z2.code == 0);
  CHECK(z2.out == "zeta = 1.64493406685\n");  // 12 significant digits
  RunResult pole = run_cli("eval zeta --s 1");
  CHECK(pole.code == 2);
  RunResult prod = run_cli("eval product");
  CHECK(prod.code == 0);
  CHECK(prod.out.find("39.4784176044") != std::string::npos);
  CHECK(prod.out.find("2.53102424697") != std::string::npos);
  RunResult bogus = run_cli("eval no-such-quantity");
  CHECK(bogus.code == 2);
  RunResult missing_s = run_cli("eval zeta");
  CHECK(missing_s.code == 2);
  // complex argument parsing: RE,IM
  RunResult zc = run_cli("eval zeta --s 2,1 --json");
  CHECK(zc.code == 0);
  nlohmann::json j = nlohmann::json::parse(zc.out);
  // mpmath: zeta(2+i) = 1.15035570325490267174 - 0.437530865919607881118i
  CHECK(std::abs(j["zeta"]["re"].get<double>() - 1.15035570325490267174) < 1e-10);
  CHECK(std::abs(j["zeta"]["im"].get<double>() - (-0.437530865919607881118)) < 1e-10);
}

TEST_CASE("cli: find-zeros") {
  RunResult r = run_cli("find-zeros --t-max 30");
  CHECK(r.code == 0);
  CHECK(r.out == "14.134725142\n21.022039638\n25.010857580\n");
  RunResult j = run_cli("find-zeros --t-max 30 --json");
  CHECK(j.code == 0);
  nlohmann::json parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["count"].get<int>() == 3);
  CHECK(parsed["ordinates"].size() == 3);
  RunResult dom = run_cli("find-zeros --t-max 600");
  CHECK(dom.code == 2);
}

TEST_CASE("cli: environment configuration") {
  RunResult si = run_cli("sieve-info", "ZETAKIT_LIMIT=5000 ");
  CHECK(si.code == 0);
  CHECK(si.out.find("limit = 5000") != std::string::npos);
  CHECK(si.out.find("prime_count = 669") != std::string::npos);  // pi(5000)
  RunResult eta = run_cli("eval eta", "ZETAKIT_ZEROS=" + data_file("zeros1000.txt") + " ");
  CHECK(eta.code == 0);
  CHECK(eta.out.find("k = 1000") != std::string::npos);
  CHECK(eta.out.find("eta = 0.04619") != std::string::npos);
}

TEST_CASE("cli: usage errors and help") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("no-such-command").code == 2);
  CHECK(run_cli("").code == 2);  // a subcommand is required
  CHECK(run_cli("verify --limit 100000 --json --csv").code == 2);
  CHECK(run_cli("eval zeta --s abc").code == 2);
}
