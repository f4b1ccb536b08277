// Acceptance suite: one test case per criterion, one pass/fail line each.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "summa/acceptance.hpp"

using summa::accept::Row;

namespace {

void check_row(int id) {
  Row r = summa::accept::run(id);
  std::printf("%s\n", summa::accept::format_row(r).c_str());
  std::fflush(stdout);
  CHECK_MESSAGE(r.pass, r.detail);
}

}  // namespace

TEST_CASE("C01 two-valued sum") { check_row(1); }
TEST_CASE("C02 Xa family") { check_row(2); }
TEST_CASE("C03 Borel") { check_row(3); }
TEST_CASE("C04 Euler-rational") { check_row(4); }
TEST_CASE("C05 telescoping") { check_row(5); }
TEST_CASE("C06 Cesaro/Abel") { check_row(6); }
TEST_CASE("C07 holonomic T-series") { check_row(7); }
TEST_CASE("C08 rational-not-telescopic") { check_row(8); }
TEST_CASE("C09 multiplicative grading") { check_row(9); }
TEST_CASE("C10 gap-square witness") { check_row(10); }
TEST_CASE("C11 CRT family") { check_row(11); }
TEST_CASE("C12 property suites") { check_row(12); }
