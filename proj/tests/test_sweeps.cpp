#include <doctest.h>

#include "cei/error.hpp"
#include "cei/sweeps.hpp"

using namespace cei;

TEST_CASE("catalog resolves names and aliases") {
  CHECK(suite_catalog().size() == 10);
  for (const auto& s : suite_catalog()) {
    CHECK(find_suite(s.name) == &s);
    for (const auto& alias : s.aliases) CHECK(find_suite(alias) == &s);
  }
  CHECK(find_suite("thm2.1")->name == "decomposition");
  CHECK(find_suite("nope") == nullptr);
  CHECK_THROWS_AS(run_suite("nope", {}), InvalidInput);
  SweepOptions too_big;
  too_big.n_max = 9;
  CHECK_THROWS_AS(run_suite("decomposition", too_big), InvalidInput);
}

TEST_CASE("every suite passes at small sizes") {
  for (const auto& s : suite_catalog()) {
    SweepOptions o;
    o.n_max = 4;
    if (s.default_kmax > 0) o.kmax = 2;
    const auto r = run_suite(s.name, o);
    CAPTURE(s.name);
    CHECK(r.passed());
    CHECK(r.totals().mismatches == 0);
    CHECK(r.totals().checked > 0);
  }
}

TEST_CASE("summary counts") {
  SweepOptions o;
  o.n_min = 5;
  o.n_max = 5;
  const auto r = run_suite("thm2.1", o);
  CHECK(r.per_n.at(5).enumerated == 1024);
  CHECK(r.per_n.at(5).checked == 768);
  CHECK(r.summary().find("1024 graphs scanned") != std::string::npos);
  CHECK(r.summary().find("0 mismatches") != std::string::npos);
  CHECK(r.csv().rfind("n,bitmask,pass", 0) == 0);
}

TEST_CASE("output does not depend on the worker count") {
  SweepOptions one, four;
  one.n_max = four.n_max = 5;
  one.kmax = four.kmax = 2;
  four.jobs = 4;
  for (const char* suite : {"cover-duality", "power-regularity"}) {
    const auto a = run_suite(suite, one), b = run_suite(suite, four);
    CHECK(a.summary() == b.summary());
    CHECK(a.csv() == b.csv());
  }
}
