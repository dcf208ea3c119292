#include <stdexcept>

#include "doctest.h"

#include "booleq/verify.hpp"

using booleq::VerifyReport;

TEST_CASE("verification passes for all dimensions up to 16") {
  const VerifyReport report = booleq::run_verify(16);
  CHECK(report.overall);
  CHECK(report.d_min == 1);
  CHECK(report.d_max == 16);
  for (const auto& c : report.checks) {
    CHECK(c.pass);
  }
}

TEST_CASE("report layout: five checks per dimension plus the bell suite") {
  const VerifyReport report = booleq::run_verify(3);
  CHECK(report.checks.size() == 3 * 5 + 4);
  // ascending d, bell block last
  unsigned previous = 1;
  for (size_t i = 0; i < 15; ++i) {
    CHECK(report.checks[i].d >= previous);
    previous = report.checks[i].d;
  }
  CHECK(report.checks[15].name == "bell-circuit-closed-form");
  CHECK(report.checks[16].name == "bell-matrix-form");
  CHECK(report.checks[17].name == "bell-orthonormality");
  CHECK(report.checks[18].name == "gate-unitarity");
}

TEST_CASE("degenerate single-level system verifies") {
  const VerifyReport report = booleq::run_verify(1);
  CHECK(report.overall);
}

TEST_CASE("max_d zero is rejected") {
  CHECK_THROWS_AS(booleq::run_verify(0), std::domain_error);
}
