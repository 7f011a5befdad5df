#include <doctest.h>

#include "coxlat/verify.hpp"

using namespace coxlat;

TEST_CASE("the verify suite passes on a small type and reports deterministically") {
  VerifyOptions opts;
  opts.seed = 42;
  VerifyReport rep = run_verify(parse_type("A2"), opts);
  CHECK(rep.ok());
  CHECK(rep.elements == 5);
  CHECK(rep.pairs_checked == 10);
  std::string a = verify_json(rep, std::nullopt);
  VerifyReport rep2 = run_verify(parse_type("A2"), opts);
  CHECK(verify_json(rep2, std::nullopt) == a);
  CHECK(a.find("wall_time_ms") == std::string::npos);
  CHECK(verify_json(rep, 123L).find("wall_time_ms") != std::string::npos);
}

TEST_CASE("interval export shape") {
  RootSystem rs(parse_type("I2(4)"));
  IntervalPoset poset = enumerate_interval(rs);
  std::string js = interval_json(rs, poset);
  CHECK(js.find("\"size\": 6") != std::string::npos);
  CHECK(js.find("\"covers\"") != std::string::npos);
}
