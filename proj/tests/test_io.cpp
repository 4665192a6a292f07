#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qchan/io.hpp"
#include "qchan/min_output.hpp"

using namespace qchan;

TEST_CASE("kraus channel json") {
  const std::string text = R"({
    "kind": "kraus", "dim": 2,
    "operators": [[[[1,0],[0,0]],[[0,0],[1,0]]]]
  })";
  KrausChannel phi = parse_channel_json(text);
  CHECK(phi.dim() == 2);
  CHECK(phi.kraus_count() == 1);
  CHECK(map_entropy(phi, {2.0, LogBase::natural}) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(channel_kind(text) == "kraus");
}

TEST_CASE("family json") {
  KrausChannel dep =
      parse_channel_json(R"({"kind":"depolarizing","dim":2,"lambda":0.5})");
  CHECK(map_entropy(dep, {2.0, LogBase::natural}) ==
        doctest::Approx(depolarizing_map_q2(2, 0.5)).epsilon(1e-10));

  KrausChannel pauli =
      parse_channel_json(R"({"kind":"pauli","weights":[0.5,0.5,0,0]})");
  CHECK(pauli.dim() == 2);

  KrausChannel cg =
      parse_channel_json(R"({"kind":"coarse_graining","dim":3})");
  CHECK(map_entropy(cg, {1.0, LogBase::natural}) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-12));

  KrausChannel bloch = parse_channel_json(
      R"({"kind":"bloch","lambda":[0,0,1],"t":[0,0,0]})");
  CHECK(map_entropy(bloch, {2.0, LogBase::natural}) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("invalid channels are rejected with diagnostics") {
  // not trace preserving
  CHECK_THROWS_WITH_AS(
      parse_channel_json(R"({
        "kind": "kraus", "dim": 2,
        "operators": [[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]]
      })"),
      doctest::Contains("completeness"), std::invalid_argument);

  CHECK_THROWS_AS(
      parse_channel_json(R"({"kind":"pauli","weights":[0.7,0.7,0,0]})"),
      std::invalid_argument);

  // non-CP bloch parameters
  CHECK_THROWS_WITH_AS(
      parse_channel_json(R"({"kind":"bloch","lambda":[1,1,-1],"t":[0,0,0]})"),
      doctest::Contains("not completely positive"), std::invalid_argument);

  CHECK_THROWS_AS(parse_channel_json(R"({"kind":"mystery"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_channel_json("not json"), std::exception);
}

TEST_CASE("float formatting") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
  // round-trip exactness at 17 significant digits
  const double x = std::log(3.0);
  CHECK(std::stod(format_double(x)) == x);
}
