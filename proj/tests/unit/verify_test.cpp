#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "../support/fixtures.hpp"
#include "wishdiff/verify.hpp"

using namespace wishdiff;
using wishdiff::testing::describe;
using wishdiff::testing::params;

TEST_CASE("every ensemble identity holds") {
  for (const auto& p : {params(3, 4, 5, "1", "1"), params(1, 1, 1, "1", "1"), params(2, 2, 3, "2/3", "1/5"),
                        params(3, 3, 3, "2", "2"), params(4, 5, 7, "2/3", "8/7")}) {
    for (const auto& c : verify::ensemble_identities(p)) {
      INFO(describe(p) << " " << c.name << ": " << c.detail);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("symmetric parameters add the symmetric check") {
  bool found = false;
  for (const auto& c : verify::ensemble_identities(params(2, 3, 3, "1/3", "1/3")))
    found = found || c.name == "symmetric_positivity";
  CHECK(found);
}

TEST_CASE("global identities hold") {
  for (const auto& c : verify::global_identities()) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("failures are reported, not thrown") {
  const auto bad = verify::run_check("x", [] { return std::string("off by one"); });
  CHECK_FALSE(bad.pass);
  CHECK(bad.detail == "off by one");
  const auto thrown = verify::run_check("y", []() -> std::string { throw std::runtime_error("boom"); });
  CHECK_FALSE(thrown.pass);
  CHECK(thrown.detail.find("boom") != std::string::npos);
  CHECK(verify::run_check("z", [] { return std::string(); }).pass);
}
