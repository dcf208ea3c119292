#include <string>

#include "doctest.h"
#include "json.hpp"

#include "booleq/amplitude.hpp"
#include "booleq/polynomial.hpp"
#include "cli_util.hpp"

using cliutil::run_cli;
using json = nlohmann::json;

TEST_CASE("basis text output") {
  const auto r = run_cli("basis --d 3 --x 1 --format text");
  CHECK(r.status == 0);
  CHECK(r.out == "(0, 1, 0)\n");
}

TEST_CASE("basis symbolic latex output") {
  const auto r = run_cli("basis --d 2 --symbolic --format latex");
  CHECK(r.status == 0);
  CHECK(r.out == "\\begin{pmatrix}1-x\\\\x\\end{pmatrix}\n");
}

TEST_CASE("out-of-range index exits 2 with a diagnostic") {
  const auto r = run_cli("basis --d 3 --x 5", /*merge_stderr=*/true);
  CHECK(r.status == 2);
  CHECK(r.out.find("out of range") != std::string::npos);
}

TEST_CASE("dimension zero exits 2") {
  CHECK(run_cli("projector --d 0 --x 0").status == 2);
  CHECK(run_cli("basis --d 0 --x 0").status == 2);
  CHECK(run_cli("completeness --d 0").status == 2);
}

TEST_CASE("missing index without --symbolic exits 2") {
  CHECK(run_cli("basis --d 3").status == 2);
  CHECK(run_cli("projector --d 3").status == 2);
}

TEST_CASE("projector text output") {
  const auto r = run_cli("projector --d 3 --x 0 --format text");
  CHECK(r.status == 0);
  CHECK(r.out == "diag(1, 0, 0)\n");
}

TEST_CASE("projector symbolic text lists the diagonal polynomials") {
  const auto r = run_cli("projector --d 4 --symbolic");
  CHECK(r.status == 0);
  CHECK(r.out.find("diag(") == 0);
  CHECK(r.out.find("x^3") != std::string::npos);
}

TEST_CASE("completeness reports the identity") {
  const auto r = run_cli("completeness --d 4");
  CHECK(r.status == 0);
  CHECK(r.out == "diag(1, 1, 1, 1)\nidentity: true\n");
}

TEST_CASE("verify passes and exits 0") {
  const auto r = run_cli("verify --max-d 8");
  CHECK(r.status == 0);
  CHECK(r.out.find("overall: pass") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify above the cap exits 2 with a cap diagnostic") {
  const auto r = run_cli("verify --max-d 100000", /*merge_stderr=*/true);
  CHECK(r.status == 2);
  CHECK(r.out.find("cap") != std::string::npos);
}

TEST_CASE("cap environment variable is honored and the flag wins") {
  const auto capped =
      run_cli("verify --max-d 10", /*merge_stderr=*/true, "BOOLEQ_MAX_D=4 ");
  CHECK(capped.status == 2);

  const auto flag_wins = run_cli("verify --max-d 10 --cap 12",
                                 /*merge_stderr=*/false, "BOOLEQ_MAX_D=4 ");
  CHECK(flag_wins.status == 0);
}

TEST_CASE("bell text output") {
  const auto r = run_cli("bell --x 0 --y 0");
  CHECK(r.status == 0);
  CHECK(r.out.find("(1/2s2, 0, 0, 1/2s2)") != std::string::npos);
  CHECK(r.out.find("matches: true") != std::string::npos);

  const auto r10 = run_cli("bell --x 1 --y 0");
  CHECK(r10.status == 0);
  CHECK(r10.out.find("(1/2s2, 0, 0, -1/2s2)") != std::string::npos);
}

TEST_CASE("bell rejects non-bit input") {
  const auto r = run_cli("bell --x 2 --y 0", /*merge_stderr=*/true);
  CHECK(r.status == 2);
  CHECK(r.out.find("bit") != std::string::npos);
}

TEST_CASE("superpose reports exact normalization") {
  const auto yes = run_cli("superpose --d 2 --amps 3/5,4/5");
  CHECK(yes.status == 0);
  CHECK(yes.out.find("normalized: true") != std::string::npos);

  const auto no = run_cli("superpose --d 2 --amps 1,1");
  CHECK(no.status == 0);
  CHECK(no.out.find("normalized: false") != std::string::npos);

  const auto sqrt = run_cli("superpose --d 2 --amps 1/2s2,1/2s2");
  CHECK(sqrt.status == 0);
  CHECK(sqrt.out.find("normalized: true") != std::string::npos);
}

TEST_CASE("superpose length and parse errors exit 2") {
  CHECK(run_cli("superpose --d 3 --amps 1,0").status == 2);
  CHECK(run_cli("superpose --d 2 --amps 1,bogus").status == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").status == 2);
  CHECK(run_cli("frobnicate").status == 2);
  CHECK(run_cli("basis --d 3 --x 1 --format yaml").status == 2);
  CHECK(run_cli("basis --d notanumber --x 0").status == 2);
}

TEST_CASE("json output is valid and amplitudes round-trip") {
  const auto r = run_cli("bell --x 0 --y 1 --format json");
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["x"] == 0);
  CHECK(j["y"] == 1);
  CHECK(j["matches_closed_form"] == true);
  CHECK(j["entries"].size() == 4);
  for (const auto& entry : j["entries"]) {
    const std::string literal = entry.get<std::string>();
    CHECK(booleq::parse_amplitude(literal).str() == literal);
  }
}

TEST_CASE("basis json carries d, x and exact entries") {
  const auto r = run_cli("basis --d 3 --x 2 --format json");
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["d"] == 3);
  CHECK(j["x"] == 2);
  CHECK(j["entries"] == json::array({"0", "0", "1"}));

  const auto sym = run_cli("basis --d 3 --symbolic --format json");
  CHECK(sym.status == 0);
  const json js = json::parse(sym.out);
  CHECK(js["x"].is_null());
  for (const auto& entry : js["entries"]) {
    const std::string literal = entry.get<std::string>();
    CHECK(booleq::parse_polynomial(literal).str() == literal);
  }
}

TEST_CASE("projector and completeness json round-trip") {
  const auto r = run_cli("projector --d 3 --x 1 --format json");
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["d"] == 3);
  CHECK(j["x"] == 1);
  for (const auto& row : j["entries"]) {
    for (const auto& entry : row) {
      const std::string literal = entry.get<std::string>();
      CHECK(booleq::parse_amplitude(literal).str() == literal);
    }
  }

  const auto sym = run_cli("projector --d 3 --symbolic --format json");
  const json js = json::parse(sym.out);
  CHECK(js["x"].is_null());
  for (const auto& entry : js["diagonal"]) {
    const std::string literal = entry.get<std::string>();
    CHECK(booleq::parse_polynomial(literal).str() == literal);
  }

  const auto c = run_cli("completeness --d 3 --format json");
  CHECK(c.status == 0);
  const json jc = json::parse(c.out);
  CHECK(jc["is_identity"] == true);
  for (const auto& row : jc["entries"]) {
    for (const auto& entry : row) {
      const std::string literal = entry.get<std::string>();
      CHECK(booleq::parse_amplitude(literal).str() == literal);
    }
  }
}

TEST_CASE("superpose json round-trips amplitudes") {
  const auto r = run_cli("superpose --d 2 --amps 3/5,4/5i --format json");
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["normalized"] == true);
  for (const auto& entry : j["amplitudes"]) {
    const std::string literal = entry.get<std::string>();
    CHECK(booleq::parse_amplitude(literal).str() == literal);
  }
}

TEST_CASE("verify json reports every check") {
  const auto r = run_cli("verify --max-d 4 --format json");
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["overall"] == true);
  CHECK(j["d_min"] == 1);
  CHECK(j["d_max"] == 4);
  CHECK(j["checks"].size() == 4 * 5 + 4);
  for (const auto& c : j["checks"]) {
    CHECK(c["pass"] == true);
  }
}

TEST_CASE("approx flag appends decimal annotations") {
  const auto r = run_cli("bell --x 0 --y 0 --approx");
  CHECK(r.status == 0);
  CHECK(r.out.find("approx: (0.707107, 0, 0, 0.707107)") != std::string::npos);

  const auto j = json::parse(run_cli("basis --d 2 --x 0 --format json --approx").out);
  CHECK(j["approx"][0][0] == 1.0);
  CHECK(j["approx"][1][0] == 0.0);
}

TEST_CASE("golden files are byte-stable") {
  size_t count = 0;
  const auto* cases = cliutil::golden_cases(count);
  for (size_t i = 0; i < count; ++i) {
    CAPTURE(cases[i].file);
    const std::string expected =
        cliutil::read_file(cliutil::golden_dir() + "/" + cases[i].file);
    REQUIRE_FALSE(expected.empty());
    const auto r = run_cli(cases[i].args);
    CHECK(r.status == 0);
    CHECK(r.out == expected);
  }
}
