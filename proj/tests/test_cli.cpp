#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "golden.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = orientable::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("orientable_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + needle.size())) ++c;
  return c;
}

}  // namespace

TEST_CASE("generate") {
  auto r = run({"generate", "--n", "9", "--algo", "rcl"});
  CHECK(r.code == 0);
  CHECK(r.out == read_golden("os9_rcl.txt") + "\n");
  r = run({"generate", "--n", "9", "--algo", "successor", "--seed", "000001011"});
  CHECK(r.code == 0);
  CHECK(r.out == read_golden("os9_successor.txt") + "\n");
  r = run({"generate", "--n", "6", "--algo", "successor"});
  CHECK(r.out == "001011\n");
  r = run({"generate", "--n", "5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("unsupported order") != std::string::npos);
}

TEST_CASE("generate formats and checks") {
  auto r = run({"generate", "--n", "9", "--format", "grouped"});
  CHECK(r.out.rfind("000001011 111001011 011001011 ", 0) == 0);
  CHECK(count(r.out, " ") == 13);
  r = run({"generate", "--n", "6", "--algo", "successor", "--format", "hex"});
  CHECK(r.out == "2c\n");  // 0010 11(00)
  r = run({"generate", "--n", "10", "--check"});
  CHECK(r.code == 0);
  CHECK(r.err.find("check passed") != std::string::npos);
  r = run({"generate", "--n", "9", "--algo", "successor", "--seed", "000000000"});
  CHECK(r.code == 2);
  r = run({"generate", "--n", "9", "--algo", "rcl", "--seed", "000001011"});
  CHECK(r.code == 2);
  r = run({"generate", "--n", "9", "--format", "octal"});
  CHECK(r.code == 2);
  const std::string path = temp_file("gen.txt", "");
  r = run({"generate", "--n", "9", "--output", path});
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string bits;
  in >> bits;
  CHECK(bits == read_golden("os9_rcl.txt"));
}

TEST_CASE("bounds") {
  const auto r = run({"bounds"});
  CHECK(r.code == 0);
  CHECK(count(r.out, "\n") == 17);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  bool saw9 = false;
  while (std::getline(lines, line)) {
    std::istringstream f(line);
    std::string n, L, U, T, A, asym;
    f >> n >> L >> U >> T >> A >> asym;
    if (n == "9") {
      saw9 = true;
      CHECK(L == "126");
      CHECK(U == "206");
      CHECK(A == "248");
      CHECK(asym == "14");
    }
    if (n == "20") {
      CHECK(L == "509220");
      CHECK(U == "521964");
    }
  }
  CHECK(saw9);
  const auto wide = run({"bounds", "--n", "29"});
  CHECK(wide.code == 0);
  CHECK(wide.out.find("unavailable") != std::string::npos);
  CHECK(run({"bounds", "--n", "9..5"}).code == 2);
  CHECK(run({"bounds", "--n", "1..5"}).code == 2);
}

TEST_CASE("verify") {
  const std::string good = temp_file("good.txt", read_golden("os9_successor.txt") + "\n");
  auto r = run({"verify", good, "--n", "9", "--full"});
  CHECK(r.code == 0);
  CHECK(r.out.find("exactly S(9)") != std::string::npos);
  const std::string small = temp_file("small.txt", "001011\n");
  r = run({"verify", small, "--n", "3"});
  CHECK(r.code == 1);
  CHECK(r.out.find("palindromic window 010") != std::string::npos);
  r = run({"verify", small, "--n", "8"});
  CHECK(r.code == 2);
  r = run({"verify", small, "--n", "5", "--mode", "acyclic"});
  CHECK(r.code == 0);
  const std::string bad = temp_file("bad.txt", "0010x1\n");
  CHECK(run({"verify", bad, "--n", "3"}).code == 2);
  CHECK(run({"verify", "/nonexistent/file", "--n", "3"}).code == 2);
}

TEST_CASE("tree") {
  auto r = run({"tree", "--n", "9", "--dot"});
  CHECK(r.code == 0);
  CHECK(count(r.out, "->") == 13);
  CHECK(count(r.out, "[label=") == 13);
  CHECK(count(r.out, ";\n") == 14 + 13 + 1);
  r = run({"tree", "--n", "9"});
  CHECK(r.out.rfind("nodes 14", 0) == 0);
  CHECK(run({"tree", "--n", "5"}).code == 2);
}

TEST_CASE("extend and optimum") {
  auto r = run({"extend", "--n", "6", "--heuristic", "b"});
  CHECK(r.code == 0);
  CHECK(r.out.find("length 6 -> 16") != std::string::npos);
  r = run({"extend", "--n", "6", "--aos"});
  CHECK(r.out.find("length 11 -> 26") != std::string::npos);
  r = run({"extend", "--n", "10", "--budget", "100"});
  CHECK(r.out.find("budget exhausted") != std::string::npos);
  CHECK(run({"extend", "--n", "6", "--heuristic", "z"}).code == 2);
  const std::string input = temp_file("ext.txt", "001011\n");
  r = run({"extend", "--n", "5", "--input", input});
  CHECK(r.out.find("length 6 -> 6") != std::string::npos);
  r = run({"optimum", "--n", "6"});
  CHECK(r.out.find("maximum length 16") != std::string::npos);
  CHECK(run({"optimum", "--n", "8"}).code == 2);
}

TEST_CASE("budget from the environment") {
  setenv("ORIENTABLE_BUDGET", "100", 1);
  auto r = run({"extend", "--n", "10"});
  CHECK(r.out.find("(100 expansions, budget exhausted)") != std::string::npos);
  setenv("ORIENTABLE_BUDGET", "lots", 1);
  CHECK(run({"extend", "--n", "10"}).code == 2);
  unsetenv("ORIENTABLE_BUDGET");
}

TEST_CASE("bench") {
  const auto r = run({"bench", "--n", "8..9", "--algo", "rcl", "--repeat", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rcl spread") != std::string::npos);
  CHECK(r.out.find("successor") == std::string::npos);
  CHECK(run({"bench", "--n", "4..9"}).code == 2);
}

TEST_CASE("usage errors and determinism") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"generate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"generate", "--n", "11"}).out == run({"generate", "--n", "11"}).out);
  CHECK(run({"bounds", "--n", "5..12"}).out == run({"bounds", "--n", "5..12"}).out);
}
