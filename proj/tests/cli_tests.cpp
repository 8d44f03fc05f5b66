// End-to-end checks of the command-line tool. Takes the binary path as
// argv[1], drives it through std::system, and checks exit codes plus key
// fragments of the JSON it prints.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string g_binary;
std::filesystem::path g_dir;
int g_failures = 0;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RunResult run(const std::string& args) {
  const auto out_path = g_dir / "stdout.txt";
  const auto err_path = g_dir / "stderr.txt";
  std::string cmd = "\"" + g_binary + "\" " + args + " > \"" + out_path.string() + "\" 2> \"" +
                    err_path.string() + "\"";
  int status = std::system(cmd.c_str());
  RunResult r;
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

void expect(bool ok, const std::string& what, const RunResult& r) {
  if (ok) {
    std::cout << "  ok: " << what << "\n";
  } else {
    ++g_failures;
    std::cout << "  FAILED: " << what << "\n    exit=" << r.code << "\n    stdout=" << r.out
              << "    stderr=" << r.err << "\n";
  }
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string file_arg(const char* name) { return "\"" + (g_dir / name).string() + "\""; }

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-binary>\n";
    return 2;
  }
  g_binary = argv[1];
  g_dir = std::filesystem::temp_directory_path() / "ifam_cli_tests";
  std::filesystem::create_directories(g_dir);

  RunResult r = run("construct --family F --k 4 --t 2 -o " + file_arg("f42.json"));
  expect(r.code == 0, "construct walk family to file", r);
  expect(std::filesystem::exists(g_dir / "f42.json"), "family file written", r);

  r = run("construct --family triangle");
  expect(r.code == 0 && contains(r.out, "\"blocks\""), "construct triangle to stdout", r);
  run("construct --family triangle -o " + file_arg("tri.json"));
  run("construct --family singleton -o " + file_arg("one.json"));

  r = run("construct --family affine --n 2 -o " + file_arg("plane2.json"));
  expect(r.code == 0 && contains(r.err, "\"classes\""), "affine plane prints classes", r);

  r = run("construct --family affine --n 4");
  expect(r.code == 2 && contains(r.err, "UnsupportedOrder"), "non-prime order exits 2", r);

  r = run("check --property cif " + file_arg("f42.json"));
  expect(r.code == 0 && contains(r.out, "\"holds\":true"), "walk family is closed", r);

  r = run("check --property mif " + file_arg("f42.json"));
  expect(r.code == 1 && contains(r.out, "\"holds\":false"), "walk family is not maximal", r);

  r = run("check --property dual-tau " + file_arg("f42.json"));
  expect(r.code == 0 && contains(r.out, "\"value\""), "dual cover number prints a value", r);

  r = run("check --property mif " + file_arg("missing.json"));
  expect(r.code == 2, "missing file exits 2", r);

  r = run("check --property nonsense " + file_arg("f42.json"));
  expect(r.code == 2 && contains(r.err, "InvalidParams"), "unknown property exits 2", r);

  r = run("compose embed --base " + file_arg("f42.json") + " --attach " + file_arg("tri.json") +
          " --verify -o " + file_arg("mif4a.json"));
  expect(r.code == 0 && contains(r.out, "\"blocks\":42") && contains(r.out, "\"verified\":true"),
         "embed composes the 42-block family", r);

  r = run("check --property mif " + file_arg("mif4a.json"));
  expect(r.code == 0, "composed family is maximal", r);

  r = run("compose embed --base " + file_arg("tri.json") + " --attach " + file_arg("one.json"));
  expect(r.code == 2 && contains(r.err, "NotCif"), "embed refuses a non-closed base", r);

  r = run("compose decompose --family " + file_arg("mif4a.json") + " --point a");
  expect(r.code == 0 && contains(r.out, "\"remainder_blocks\":16") &&
             contains(r.out, "\"dual_blocks\":26"),
         "decompose splits at a point", r);

  r = run("compose product --pattern " + file_arg("tri.json") + " --factor " +
          file_arg("f42.json"));
  expect(r.code == 0 && contains(r.out, "\"blocks\":27"), "product replicates one factor", r);

  r = run("construct --family complete --k 3 --t 2 -o " + file_arg("cc32.json"));
  expect(r.code == 0, "construct complete family", r);
  r = run("compose search --base " + file_arg("cc32.json") + " --n 3 --mode pointset");
  expect(r.code == 0 && contains(r.out, "\"valid_partitions\":1"), "partition search", r);
  r = run("--budget 10 compose search --base " + file_arg("f42.json") + " --n 3 --mode pointset");
  expect(r.code == 2 && contains(r.err, "BudgetExceeded"), "tiny budget exits 2", r);

  r = run("repro --item f42.tau");
  expect(r.code == 0 && contains(r.out, "\"match\":true"), "single reference item matches", r);

  r = run("repro --item no.such.item");
  expect(r.code == 2, "unknown reference item exits 2", r);

  r = run("bound --lower 5 --t 3");
  expect(r.code == 0 && contains(r.out, "\"bound\":204"), "recursion bound with built-in base", r);

  r = run("bound --lower 5 --t 3 --base 3");
  expect(r.code == 0 && contains(r.out, "\"bound\":204"), "recursion bound with explicit base", r);

  r = run("bound --lower 5 --t 2");
  expect(r.code == 2 && contains(r.err, "--base required"), "missing base exits 2", r);

  r = run("bound --corollary 4");
  expect(r.code == 0 && contains(r.out, "\"bound\":27"), "closed-form bound", r);

  r = run("bound --upper " + file_arg("f42.json"));
  expect(r.code == 0 && contains(r.out, "\"holds\":true"), "size ceiling check", r);

  r = run("bound");
  expect(r.code == 2, "bound without a mode exits 2", r);

  r = run("iso " + file_arg("f42.json") + " " + file_arg("f42.json"));
  expect(r.code == 0 && contains(r.out, "\"isomorphic\":true"), "family isomorphic to itself", r);

  r = run("iso " + file_arg("f42.json") + " " + file_arg("tri.json"));
  expect(r.code == 1 && contains(r.out, "\"isomorphic\":false"), "different families exit 1", r);

  r = run("frobnicate");
  expect(r.code == 2, "unknown subcommand exits 2", r);

  r = run("construct");
  expect(r.code == 2, "missing required option exits 2", r);

  if (g_failures == 0) {
    std::cout << "all cli checks passed\n";
    return 0;
  }
  std::cout << g_failures << " cli check(s) failed\n";
  return 1;
}
