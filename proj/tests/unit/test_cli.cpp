#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"

#ifndef XOP_CLI_PATH
#error "XOP_CLI_PATH must name the xop executable"
#endif

namespace {

namespace fs = std::filesystem;

struct Run {
  int status;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Run run(const std::string& args) {
  const fs::path dir = fs::temp_directory_path();
  const fs::path out = dir / ("xop_cli_test_" + std::to_string(::getpid()) + ".out");
  const std::string cmd = std::string(XOP_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  Run r{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out)};
  fs::remove(out);
  return r;
}

// Significant digits in a number literal like -1.2345e-3.
std::size_t digits(const std::string& literal) {
  std::size_t n = 0;
  for (char c : literal) {
    if (c == 'e' || c == 'E') break;
    if (c >= '0' && c <= '9') ++n;
  }
  return n;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("moments csv") {
    const Run r = run("moments --alpha 3 --imax 3 --jmax 3");
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("i,j,value,provenance\n", 0) == 0);
    CHECK(r.out.find("\n2,2,2.4e1,initial\n") != std::string::npos);
    CHECK(r.out.find("\n3,3,1.536e3,") != std::string::npos);
    // mu_{1,2} is transcendental: at least 0.3 * 256 significant digits.
    const auto at = r.out.find("\n1,2,");
    REQUIRE(at != std::string::npos);
    const auto end = r.out.find(',', at + 5);
    CHECK(digits(r.out.substr(at + 5, end - at - 5)) >= 77);
  }

  TEST_CASE("output is byte-identical across runs") {
    const Run a = run("poly --alpha 1.5 --n 5 --method det-b --normalize");
    const Run b = run("poly --alpha 1.5 --n 5 --method det-b --normalize");
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
  }

  TEST_CASE("poly json") {
    const Run r = run("poly --alpha 3 --n 2 --method closed-form");
    REQUIRE(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("n") == 2);
    CHECK(doc.at("basis") == "monomial");
    CHECK(doc.at("coefficients") == nlohmann::json::array({10, 5, 0.5}));
  }

  TEST_CASE("quadrature moments agree with recursion to 25 digits") {
    const Run a = run("moments --alpha 3 --imax 2 --jmax 2 --format json");
    const Run b = run("moments --alpha 3 --imax 2 --jmax 2 --method quadrature --format json");
    REQUIRE(a.status == 0);
    REQUIRE(b.status == 0);
    const auto ja = nlohmann::json::parse(a.out).at("entries");
    const auto jb = nlohmann::json::parse(b.out).at("entries");
    REQUIRE(ja.size() == jb.size());
    for (std::size_t k = 0; k < ja.size(); ++k) {
      const double x = ja[k].at("value");
      const double y = jb[k].at("value");
      CHECK(std::abs(x - y) <= 1e-14 * std::abs(x));
    }
  }

  TEST_CASE("matrix csv and --out") {
    const fs::path file = fs::temp_directory_path() / "xop_cli_matrix.csv";
    const Run r = run("matrix --alpha 3 --n 3 --format csv --out " + file.string());
    REQUIRE(r.status == 0);
    CHECK(r.out.empty());
    CHECK(slurp(file).rfind("3e0,-6e0,2.4e1,0\n3e0,1e1,-8e0,-3.2e1\n", 0) == 0);
    fs::remove(file);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run("").status == 2);
    CHECK(run("moments --alpha -1").status == 2);
    CHECK(run("moments --alpha abc").status == 2);
    CHECK(run("moments --alpha 1 --precision 64").status == 2);
    CHECK(run("poly --alpha 1 --n 1").status == 2);
    CHECK(run("poly --alpha 1 --n 3 --method qr").status == 2);
    CHECK(run("verify").status == 2);
    CHECK(run("moments --alpha 1 --quad-nodes 3 --method quadrature").status == 2);
  }

  TEST_CASE("verify exit codes") {
    const Run ok = run("verify --alpha 1 --nmax 6");
    CHECK(ok.status == 0);
    const auto doc = nlohmann::json::parse(ok.out);
    CHECK(doc.size() > 100);
    for (const auto& rec : doc) CHECK(rec.at("pass") == true);
    // The literal determinant-size bound fails from n = 6 at alpha = 3.
    CHECK(run("verify --alpha 3 --nmax 7 --format csv").status == 1);
  }
}
