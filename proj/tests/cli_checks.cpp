// Drives the command-line binary end to end through a shell: exit codes,
// text output, and the JSON mode.  argv[1] is the path to the binary.

#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <string>

#include "json.hpp"

namespace {

std::string g_binary;
int g_failures = 0;

struct Run {
  std::string output;  // stdout and stderr combined
  int status = -1;
};

Run run(const std::string& args) {
  Run r;
  std::string cmd = g_binary + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    r.output = "popen failed";
    return r;
  }
  char buf[512];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
    r.output.append(buf, got);
  int raw = pclose(pipe);
  if (WIFEXITED(raw)) r.status = WEXITSTATUS(raw);
  return r;
}

void expect(bool ok, const std::string& what, const Run& r) {
  if (ok) return;
  ++g_failures;
  std::cout << "FAIL " << what << "\n  status " << r.status << ", output:\n"
            << r.output << "\n";
}

bool contains(const Run& r, const std::string& needle) {
  return r.output.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_checks <path-to-binary>\n";
    return 2;
  }
  g_binary = argv[1];

  Run r = run("mv eval --sig 2,0 \"e1 * e1\"");
  expect(r.status == 0 && r.output == "1\n", "mv eval evaluates a square", r);

  r = run("mv eval --sig 3,0 \"e21\"");
  expect(r.status == 0 && r.output == "-e12\n", "mv eval orders blades", r);

  r = run("mv eval --sig 2,0 --json \"2e1\"");
  if (r.status == 0) {
    auto j = nlohmann::json::parse(r.output, nullptr, false);
    expect(!j.is_discarded() && j["result"] == "2*e1",
           "mv eval --json is well formed", r);
  } else {
    expect(false, "mv eval --json exits cleanly", r);
  }

  r = run("mv eval --sig 2,0 \"e3\"");
  expect(r.status == 2 && contains(r, "parse error") && contains(r, "byte"),
         "out-of-range blade exits 2 with an offset", r);

  r = run("mv inv \"0\"");
  expect(r.status == 1 && contains(r, "error"),
         "non-invertible input exits 1", r);

  r = run("frobnicate");
  expect(r.status == 2, "unknown subcommand exits 2", r);

  r = run("spin check --sig 3,0 \"e1*e2\"");
  expect(r.status == 0 && contains(r, "spin_plus") && contains(r, "norm = 1"),
         "spin check classifies a unit bivector product", r);

  r = run("pauli observables --json \"1 + e12\"");
  if (r.status == 0) {
    auto j = nlohmann::json::parse(r.output, nullptr, false);
    expect(!j.is_discarded() && j["rho"] == 2.0 && j["spin"][2] == 2.0,
           "pauli observables --json reports rho and spin", r);
  } else {
    expect(false, "pauli observables --json exits cleanly", r);
  }

  r = run("dirac classify \"0.5 + 0.5e{2,3}\"");
  expect(r.status == 0 && contains(r, "class = dirac"),
         "dirac classify tags a regular spinor", r);

  r = run("dirac fierz --json \"1 + 0.3*e23 - 0.2*e1234\"");
  if (r.status == 0) {
    auto j = nlohmann::json::parse(r.output, nullptr, false);
    expect(!j.is_discarded() && j["max"].is_number() &&
               double(j["max"]) < 1e-9,
           "dirac fierz --json residuals are tiny", r);
  } else {
    expect(false, "dirac fierz --json exits cleanly", r);
  }

  r = run("twospinor tetrad");
  expect(r.status == 0 && contains(r, "metric residual = 0"),
         "twospinor tetrad reports an exact metric", r);

  r = run("twospinor classify \"0.5 - 0.5*e13\"");
  expect(r.status == 0 && contains(r, "majorana = yes"),
         "twospinor classify spots a conjugation eigenstate", r);

  r = run("rep lookup --sig 1,3");
  expect(r.status == 0 && r.output == "H(2)\n", "rep lookup prints the ring",
         r);

  r = run("rep verify --sig 0,2");
  expect(r.status == 0 && contains(r, "relation residual = 0"),
         "rep verify reports exact relations", r);

  r = run("wick \"e1 + 2*e2\"");
  expect(r.status == 0 && r.output == "e1 + 2*e2\n",
         "wick maps a spacetime vector", r);

  r = run("wick bridge");
  expect(r.status == 0 && contains(r, "PASS"), "wick bridge passes", r);

  r = run("wick \"1 + e1\"");
  expect(r.status == 1, "wick rejects mixed grades with exit 1", r);

  if (g_failures == 0) std::cout << "all command-line checks passed\n";
  return g_failures == 0 ? 0 : 1;
}
