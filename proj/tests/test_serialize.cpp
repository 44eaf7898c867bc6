#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "upscalc/errors.hpp"
#include "upscalc/serialize.hpp"
#include "upscalc/upsilon.hpp"

using namespace upscalc;

TEST_CASE("JSON round trip preserves the function exactly") {
  for (auto [p, q] : {std::pair<long, long>{2, 3}, {3, 4}, {8, 11}}) {
    PLFunction f = ups_torus_euclid(p, q);
    CHECK(plfunction_from_json(plfunction_to_json(f)) == f);
  }
  PLFunction zero;
  CHECK(plfunction_from_json(plfunction_to_json(zero)) == zero);
}

TEST_CASE("JSON shape") {
  std::string j = plfunction_to_json(ups_torus_euclid(3, 4));
  CHECK(j.find("\"breakpoints\"") != std::string::npos);
  CHECK(j.find("\"t\":\"2/3\"") != std::string::npos);
  CHECK(j.find("\"v\":\"-2\"") != std::string::npos);
}

TEST_CASE("JSON parse errors") {
  CHECK_THROWS_AS(plfunction_from_json("not json"), ParseError);
  CHECK_THROWS_AS(plfunction_from_json("{}"), ParseError);
  CHECK_THROWS_AS(plfunction_from_json("{\"breakpoints\": 3}"), ParseError);
  CHECK_THROWS_AS(plfunction_from_json("{\"breakpoints\": [{\"t\": 1, \"v\": \"0\"}]}"),
                  ParseError);
  CHECK_THROWS_AS(plfunction_from_json("{\"breakpoints\": [{\"t\": \"x\", \"v\": \"0\"}]}"),
                  ParseError);
  // valid JSON but an invalid breakpoint list (does not start at 0)
  CHECK_THROWS_AS(
      plfunction_from_json(
          "{\"breakpoints\": [{\"t\": \"1\", \"v\": \"0\"}, {\"t\": \"2\", \"v\": \"0\"}]}"),
      ParseError);
}

TEST_CASE("CSV rows") {
  std::string csv = plfunction_to_csv(ups_torus_euclid(3, 4));
  CHECK(csv == "t,value\n0,0\n2/3,-2\n4/3,-2\n2,0\n");
}

TEST_CASE("SVG output") {
  std::string svg = plfunction_to_svg(ups_torus_euclid(3, 4));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("viewBox=\"0 0 640 480\"") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  // integer ticks 0, 1, 2 labelled
  CHECK(svg.find(">0</text>") != std::string::npos);
  CHECK(svg.find(">1</text>") != std::string::npos);
  CHECK(svg.find(">2</text>") != std::string::npos);
  // constant function still renders
  CHECK(plfunction_to_svg(PLFunction()).find("<polyline") != std::string::npos);
}
