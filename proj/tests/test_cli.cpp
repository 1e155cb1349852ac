// End-to-end tests of the bt1kit binary: output formats, exit codes, and
// byte-determinism of sweeps.  The binary path arrives as the last command
// line argument (CMake appends it after the doctest arguments).

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "bt1/canonical.hpp"
#include "bt1/json_io.hpp"
#include "bt1/word.hpp"

namespace {

std::string g_bin;

struct RunOut {
  int code = -1;
  std::string out;
};

// Runs the binary through the shell with stderr dropped, capturing stdout.
RunOut run(const std::string& args) {
  const std::string cmd = "'" + g_bin + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunOut r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has_line(const std::string& out, const std::string& line) {
  return out.rfind(line + "\n", 0) == 0 ||
         out.find("\n" + line + "\n") != std::string::npos;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

long long line_count(const std::string& text) {
  long long n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("eo text output for p=2, d=9") {
  const auto r = run("eo --p 2 --d 9");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "p: 2"));
  CHECK(has_line(r.out, "d: 9"));
  CHECK(has_line(r.out, "curve: quotient"));
  CHECK(has_line(r.out, "ell: 6"));
  CHECK(has_line(r.out, "genus: 4"));
  CHECK(has_line(r.out, "words: fv,fffvvv"));
  CHECK(has_line(r.out, "psi: [0,1,1,2]"));
  CHECK(has_line(r.out, "eo: c1,u1,c1,u1"));
  CHECK(has_line(r.out, "eo_pretty: [→¹↗¹→¹↗¹]"));
  CHECK(has_line(r.out, "p_rank: 0"));
  CHECK(has_line(r.out, "a_number: 2"));
  CHECK(has_line(r.out, "s11: 1"));
  CHECK(has_line(r.out, "u11: 2"));
  CHECK(has_line(r.out, "sel_dim: 3"));
}

TEST_CASE("eo text output for p=7, d=8") {
  const auto r = run("eo --p 7 --d 8");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "genus: 3"));
  CHECK(has_line(r.out, "words: fv^3"));
  CHECK(has_line(r.out, "eo: c3"));
  CHECK(has_line(r.out, "p_rank: 0"));
  CHECK(has_line(r.out, "a_number: 3"));
}

TEST_CASE("eo handles the degenerate degrees") {
  const auto r = run("eo --p 3 --d 2");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "genus: 0"));
  CHECK(has_line(r.out, "words: "));
  CHECK(has_line(r.out, "psi: []"));
}

TEST_CASE("eo rejects bad arguments") {
  CHECK(run("eo --p 4 --d 5").code == 2);   // not a prime
  CHECK(run("eo --p 3 --d 6").code == 2);   // not coprime
  CHECK(run("eo --p 3").code == 2);         // missing --d
  CHECK(run("eo --p 3 --d 8 --format yaml").code == 2);
  CHECK(run("").code == 2);                 // missing subcommand
  CHECK(run("--help").code == 0);
}

TEST_CASE("eo json output round trips") {
  const auto r = run("eo --p 3 --d 8 --format json");
  CHECK(r.code == 0);
  const auto j = bt1::Json::parse(r.out);
  CHECK(j["p"] == 3);
  CHECK(j["d"] == 8);
  CHECK(j["curve"] == "quotient");
  CHECK(j["ell"] == 2);
  CHECK(j["genus"] == 3);
  CHECK(j["words"] == "f^2,v^2,fv");
  CHECK(j["es"]["rle"] == "u2,c1");

  const auto es = bt1::es_from_json(j["es"]);
  CHECK(es.psi == std::vector<long long>{1, 2, 2});
  const auto ct = bt1::canonical_from_json(j["canonical"]);
  CHECK(ct == bt1::words_to_canonical(
                  bt1::WordMultiset::parse("f^2,v^2,fv")).type);
  const auto b = bt1::bundle_from_json(j["invariants"]);
  CHECK(b == bt1::InvariantBundle{3, 2, 1, 1, 1});
}

TEST_CASE("eo full-fermat switch selects the ambient curve") {
  const auto r = run("eo --p 3 --d 4 --full-fermat");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "curve: full"));
  CHECK(has_line(r.out, "genus: 3"));
  CHECK(has_line(r.out, "words: fv^3"));
  CHECK(has_line(r.out, "eo: c3"));
}

TEST_CASE("classify text output is exact for fv,vf") {
  const auto r = run("classify --words fv,vf");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "words: fv^2\n"
        "dim: 4\n"
        "self_dual: yes\n"
        "type: s=2 r=1\n"
        "phi: [0,0,1]\n"
        "nu: [1,2,2]\n"
        "rho: [0,2,4]\n"
        "perm: (0:v 2:f) (1:v 3:f)\n"
        "admissible: yes\n"
        "psi: [0,0]\n"
        "eo: c2\n"
        "eo_pretty: [→²]\n"
        "p_rank: 0\n"
        "a_number: 2\n"
        "s11: 2\n"
        "u11: 2\n"
        "sel_dim: 2\n");
}

TEST_CASE("classify keeps invariants but drops the sequence when not self-dual") {
  const auto r = run("classify --words fvv");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "self_dual: no"));
  CHECK(r.out.find("psi:") == std::string::npos);
  CHECK(has_line(r.out, "dim: 3"));
  CHECK(has_line(r.out, "admissible: yes"));
  CHECK(has_line(r.out, "p_rank: 0"));
  CHECK(has_line(r.out, "a_number: 1"));
  CHECK(has_line(r.out, "sel_dim: 1"));
}

TEST_CASE("classify keeps the sequence but drops invariants when imprimitive") {
  const auto r = run("classify --words fv,fvfv");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "self_dual: yes"));
  CHECK(has_line(r.out, "psi: [0,0,0]"));
  CHECK(has_line(r.out, "eo: c3"));
  CHECK(has_line(r.out, "admissible: no"));
  CHECK(r.out.find("p_rank:") == std::string::npos);
}

TEST_CASE("classify json output round trips") {
  const auto r = run("classify --words fv^2,fvv --format json");
  CHECK(r.code == 0);
  const auto j = bt1::Json::parse(r.out);
  CHECK(j["words"] == "fv^2,fvv");
  CHECK(j["dim"] == 7);
  CHECK(j["self_dual"] == false);
  CHECK(j["es"].is_null());
  CHECK(j["admissible"] == true);
  CHECK(j["invariants"]["a"] == 3);
  CHECK(j["invariants"]["sel_dim"] == 3);

  const auto ct = bt1::canonical_from_json(j["canonical"]);
  CHECK(ct.s == 5);
  CHECK(ct.r == 2);
  const auto pp = bt1::perm_from_json(j["perm"]);
  CHECK(pp.to_words().str() == "fv^2,fvv");
}

TEST_CASE("classify rejects malformed multisets") {
  CHECK(run("classify --words 'fv,,fv'").code == 2);
  CHECK(run("classify --words 'fx'").code == 2);
  CHECK(run("classify --words 'fv^0'").code == 2);
}

TEST_CASE("verify suites pass with reduced bounds") {
  auto pass = [](const std::string& args, const std::string& name) {
    const auto r = run("verify " + args);
    CAPTURE(args);
    CHECK(r.code == 0);
    CHECK(r.out.find(name + ": PASS") != std::string::npos);
  };
  pass("--suite tables", "golden-tables");
  pass("--suite oracle --max-len 6", "oracle-equivalence");
  pass("--suite oracle --max-len 6", "worked-examples");
  pass("--suite fermat --p 3 --d-max 30", "fermat-consistency");
  pass("--suite encompassing --p 3 --lmax 3", "encompassing");
  pass("--suite hermitian --p 3 --lmax 2", "hermitian");
  pass("--suite p2 --d-max 11", "p2");
  pass("--suite anumber --p-max 5 --d-max 60", "a-number");
  pass("--suite duality --count 60 --gmax 5", "duality");
  pass("--suite duality --count 60 --gmax 5", "es-inversion");

  CHECK(run("verify --suite bogus").code == 2);
}

TEST_CASE("verify p2 reports the first degree where the half-floor sequence "
          "departs from the pipeline") {
  // The closed-form sequence describes the V-image/F-preimage filtration;
  // the pipeline builds the F-image/V-preimage one.  They coincide up to
  // genus 5 and first part ways at d=13 (genus 6).
  const auto r = run("verify --suite p2 --d-max 13");
  CHECK(r.code == 1);
  CHECK(r.out.find("p2: FAIL") != std::string::npos);
  CHECK(r.out.find("(p=2,d=13)") != std::string::npos);
  CHECK(r.out.find("c2,u3,c1") != std::string::npos);
}

TEST_CASE("sweep writes a deterministic csv") {
  const std::string path = "/tmp/bt1kit_test_sweep.csv";
  const auto r = run("sweep --p-list 3,5 --d-max 50 --out " + path);
  CHECK(r.code == 0);

  const std::string body = slurp(path);
  CHECK(body.rfind("p,d,ell,genus,p_rank,a_number,s11,u11,sel_dim,eo_rle,words\n",
                   0) == 0);
  CHECK(line_count(body) == 71);  // header + 32 degrees for 3 + 38 for 5
  CHECK(body.find("\n3,4,2,1,0,1,1,1,1,c1,fv\n") != std::string::npos);
  CHECK(body.find("\n3,8,2,3,2,1,1,1,1,\"u2,c1\",\"f^2,v^2,fv\"\n") !=
        std::string::npos);

  // Reruns, thread pools and the environment override all yield the same
  // bytes.
  const std::string path2 = "/tmp/bt1kit_test_sweep2.csv";
  CHECK(run("sweep --p-list 3,5 --d-max 50 --out " + path2).code == 0);
  CHECK(slurp(path2) == body);
  CHECK(run("sweep --p-list 3,5 --d-max 50 --jobs 2 --out " + path2).code == 0);
  CHECK(slurp(path2) == body);
  {
    const std::string cmd = "BT1KIT_JOBS=3 '" + g_bin +
                            "' sweep --p-list 3,5 --d-max 50 --out " + path2 +
                            " 2>/dev/null";
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(slurp(path2) == body);
  }
  std::remove(path.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("sweep json format carries the same fields") {
  const std::string path = "/tmp/bt1kit_test_sweep.json";
  CHECK(run("sweep --p-list 3,5 --d-max 50 --format json --out " + path)
            .code == 0);
  const auto arr = bt1::Json::parse(slurp(path));
  REQUIRE(arr.is_array());
  CHECK(arr.size() == 70);
  CHECK(arr[0]["p"] == 3);
  CHECK(arr[0]["d"] == 4);
  CHECK(arr[0]["eo_rle"] == "c1");
  CHECK(arr[0]["words"] == "fv");
  CHECK(arr[0]["sel_dim"] == 1);
  std::remove(path.c_str());
}

TEST_CASE("sweep rejects bad inputs and unwritable paths") {
  CHECK(run("sweep --p-list 4 --d-max 10 --out /tmp/bt1kit_nope.csv").code ==
        2);
  CHECK(run("sweep --p-list '' --d-max 10 --out /tmp/bt1kit_nope.csv").code ==
        2);
  CHECK(run("sweep --p-list 3 --d-max 10 --out /no-such-dir/x.csv").code == 3);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s [doctest options] <path to bt1kit>\n",
                 argv[0]);
    return 1;
  }
  g_bin = argv[argc - 1];
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv);
  return ctx.run();
}
