#include <doctest.h>

#include <sstream>

#include "json.hpp"
#include "oracle.hpp"
#include "xop/classical.hpp"
#include "xop/errors.hpp"
#include "xop/io.hpp"

using namespace xop;
using nlohmann::json;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("moments csv") {
    const auto ctx = ParameterContext::parse("3");
    std::ostringstream os;
    write_moments_csv(os, fill_table(ctx, 3, 2));
    const auto rows = lines(os.str());
    REQUIRE(rows.size() == 1 + 4 * 3);
    CHECK(rows[0] == "i,j,value,provenance");
    CHECK(rows[1].rfind("0,0,", 0) == 0);
    CHECK(rows.back().rfind("3,2,", 0) == 0);
    CHECK(rows[9] == "2,2,2.4e1,initial");
  }

  TEST_CASE("moments json round-trips values") {
    const auto ctx = ParameterContext::parse("1");
    const MomentTable t = fill_table(ctx, 4, 4);
    std::ostringstream os;
    write_moments_json(os, t);
    const json doc = json::parse(os.str());
    CHECK(doc.at("precision_bits") == 256);
    REQUIRE(doc.at("entries").size() == 25);
    // nlohmann parses numbers as double; compare the raw text instead.
    const std::string text = os.str();
    CHECK(text.find("\"value\":" + t(3, 3).to_string()) != std::string::npos);
    CHECK(t(3, 3) == 64);
    for (const auto& e : doc.at("entries")) {
      CHECK(e.contains("provenance"));
      CHECK(e.at("value").is_number());
    }
  }

  TEST_CASE("polynomial and matrix json") {
    const auto ctx = ParameterContext::parse("3");
    const ShiftedPoly p = from_monomial(closed_form_xop(2, ctx), ctx);
    std::ostringstream os;
    write_polynomial_json(os, p, Method::closed_form, Basis::monomial);
    const json doc = json::parse(os.str());
    for (const char* key : {"alpha", "n", "method", "basis", "coefficients", "precision_bits", "r", "s"}) {
      CHECK(doc.contains(key));
    }
    CHECK(doc.at("n") == 2);
    CHECK(doc.at("method") == "closed-form");
    CHECK(doc.at("coefficients").size() == 3);

    std::ostringstream ms;
    write_matrix_json(ms, build_matrix(3, fill_table(ctx, 4, 4)));
    const json m = json::parse(ms.str());
    REQUIRE(m.at("M").size() == 4);
    CHECK(m.at("M")[0] == json::array({3, -6, 24, 0}));
    CHECK(m.at("b") == json::array({0, 0, 0, 1}));

    std::ostringstream cs;
    write_matrix_csv(cs, build_matrix(3, fill_table(ctx, 4, 4)));
    const auto rows = lines(cs.str());
    REQUIRE(rows.size() == 5);
    CHECK(rows[1] == "3e0,1e1,-8e0,-3.2e1");
  }

  TEST_CASE("basis names") {
    CHECK(parse_basis("shifted") == Basis::shifted);
    CHECK(to_string(Basis::monomial) == "monomial");
    CHECK_THROWS_AS(parse_basis("chebyshev"), DomainError);
  }

  TEST_CASE("report formats") {
    VerificationReport r;
    r.add("x.ok", "alpha=1 n=2", Real(0), Real(1));
    r.add_failure("x.bad", "alpha=1 i,j=3", Real(1), "broke, \"badly\"");
    std::ostringstream js;
    write_report_json(js, r);
    const json doc = json::parse(js.str());
    REQUIRE(doc.size() == 2);
    CHECK(doc[0].at("pass") == true);
    CHECK(doc[1].at("residual").is_null());
    CHECK(doc[1].at("error") == "broke, \"badly\"");

    std::ostringstream cs;
    write_report_csv(cs, r);
    const auto rows = lines(cs.str());
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "check,parameters,residual,tolerance,pass,error");
    CHECK(rows[2] == "x.bad,\"alpha=1 i,j=3\",,1e0,false,\"broke, \"\"badly\"\"\"");

    std::ostringstream empty;
    write_report_json(empty, VerificationReport{});
    CHECK(json::parse(empty.str()).empty());
  }
}
